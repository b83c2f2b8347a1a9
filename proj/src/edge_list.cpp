#include "expander_forge/edge_list.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ef {

void write_edge_list(std::ostream& os, const Graph& g) {
  const auto k = g.regular_degree();
  os << g.order() << ' ' << (k ? static_cast<long long>(*k) : -1LL) << ' ' << (g.bipartition() ? 1 : 0) << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("edge list: missing header");
  std::istringstream header(line);
  long long n = 0, k = 0;
  int bip = 0;
  if (!(header >> n >> k >> bip) || n < 0 || (bip != 0 && bip != 1))
    throw std::runtime_error("edge list: malformed header '" + line + "'");

  std::vector<Edge> edges;
  std::size_t lineno = 1;
  Edge prev;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v) || u < 0 || v < 0 || u >= v || v >= n)
      throw std::runtime_error("edge list: bad edge on line " + std::to_string(lineno));
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!edges.empty() && !(prev < e)) throw std::runtime_error("edge list: edges out of order on line " + std::to_string(lineno));
    edges.push_back(e);
    prev = e;
  }

  Graph g(static_cast<std::size_t>(n), edges);
  const auto deg = g.regular_degree();
  if (k >= 0 && (!deg || static_cast<long long>(*deg) != k))
    throw std::runtime_error("edge list: header claims " + std::to_string(k) + "-regular");
  if (k < 0 && deg) throw std::runtime_error("edge list: header claims non-regular graph");
  if (bip == 1) {
    auto sides = two_colouring(g);
    if (!sides) throw std::runtime_error("edge list: header claims bipartite but graph has an odd cycle");
    g.set_bipartition(std::move(*sides));
  }
  return g;
}

void write_matching(std::ostream& os, const Matching& f) {
  os << f.order() << ' ' << f.size() << '\n';
  for (const auto& e : f.edges()) os << e.u << ' ' << e.v << '\n';
}

}  // namespace ef
