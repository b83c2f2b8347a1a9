#include "expander_forge/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace ef {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& e : edges) {
    if (e.v >= n) throw std::invalid_argument("Graph: edge endpoint " + std::to_string(e.v) + " out of range");
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw std::invalid_argument("Graph: parallel edge");
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adjacency_.empty()) return std::nullopt;
  const std::size_t k = adjacency_.front().size();
  for (const auto& nb : adjacency_)
    if (nb.size() != k) return std::nullopt;
  return k;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_bipartition(Bipartition sides) {
  if (sides.size() != order()) throw std::invalid_argument("set_bipartition: size mismatch");
  for (Vertex u = 0; u < order(); ++u) {
    if (sides[u] > 1) throw std::invalid_argument("set_bipartition: side must be 0 or 1");
    for (Vertex v : adjacency_[u])
      if (sides[u] == sides[v])
        throw std::invalid_argument("set_bipartition: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " does not cross the bipartition");
  }
  bipartition_ = std::move(sides);
}

void Graph::set_labels(std::vector<ProjMat> labels) {
  if (labels.size() != order()) throw std::invalid_argument("set_labels: size mismatch");
  labels_ = std::move(labels);
}

Matching::Matching(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::vector<bool> used(n, false);
  for (const auto& e : edges_) {
    if (e.v >= n || e.u == e.v) throw std::invalid_argument("Matching: invalid edge");
    if (used[e.u] || used[e.v]) throw std::invalid_argument("Matching: edges are not vertex-disjoint");
    used[e.u] = used[e.v] = true;
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph cayley_graph(std::span<const ProjMat> group, std::span<const ProjMat> gens) {
  for (const auto& s : gens) {
    if (s.is_identity()) throw std::invalid_argument("cayley_graph: identity in generating set");
    const auto inv = s.inverse();
    if (std::find(gens.begin(), gens.end(), inv) == gens.end())
      throw std::invalid_argument("cayley_graph: generating set is not symmetric");
  }
  const GroupIndex index(std::vector<ProjMat>(group.begin(), group.end()));
  if (index.size() != group.size()) throw std::invalid_argument("cayley_graph: repeated group element");

  std::vector<Edge> edges;
  edges.reserve(group.size() * gens.size() / 2);
  for (Vertex i = 0; i < group.size(); ++i) {
    for (const auto& s : gens) {
      const auto j = index.find(group[i] * s);
      if (j < 0) throw std::invalid_argument("cayley_graph: group list not closed under the generators");
      // Each undirected edge is seen from both ends; an involution s gives
      // the same pair again via s itself, an alpha via its conjugate.
      if (i < static_cast<Vertex>(j)) edges.emplace_back(i, static_cast<Vertex>(j));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g(group.size(), edges);
  g.set_labels(std::vector<ProjMat>(group.begin(), group.end()));
  return g;
}

namespace {

// BFS from `start`, writing component id into comp. Returns visited count.
std::size_t bfs_mark(const Graph& g, Vertex start, std::vector<std::int64_t>& comp, std::int64_t id) {
  std::queue<Vertex> queue;
  queue.push(start);
  comp[start] = id;
  std::size_t seen = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u))
      if (comp[v] < 0) {
        comp[v] = id;
        ++seen;
        queue.push(v);
      }
  }
  return seen;
}

}  // namespace

std::size_t component_count(const Graph& g) {
  std::vector<std::int64_t> comp(g.order(), -1);
  std::int64_t count = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (comp[v] < 0) bfs_mark(g, v, comp, count++);
  return static_cast<std::size_t>(count);
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

std::optional<Bipartition> two_colouring(const Graph& g) {
  constexpr std::uint8_t unset = 2;
  Bipartition side(g.order(), unset);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != unset) continue;
    side[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == unset) {
          side[v] = static_cast<std::uint8_t>(1 - side[u]);
          queue.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<Bipartition> detect_bipartition(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("detect_bipartition: graph is disconnected");
  return two_colouring(g);
}

Graph complement(const Graph& g) {
  if (g.bipartition()) throw std::invalid_argument("complement: graph carries a bipartition; use bipartite_complement");
  std::vector<Edge> edges;
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = nb.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (it == nb.end() || *it != v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph bipartite_complement(const Graph& g) {
  if (!g.bipartition()) throw std::invalid_argument("bipartite_complement: no bipartition recorded");
  const auto& side = *g.bipartition();
  const auto left = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
  if (2 * left != g.order()) throw std::invalid_argument("bipartite_complement: sides have unequal size");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (side[u] != 0) continue;
    for (Vertex v = 0; v < g.order(); ++v)
      if (side[v] == 1 && !g.has_edge(u, v)) edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  Graph out(g.order(), edges);
  out.set_bipartition(side);
  if (g.labels()) out.set_labels(*g.labels());
  return out;
}

namespace {

void require_perfect(const Graph& g, const Matching& f, const char* who) {
  if (f.order() != g.order()) throw std::invalid_argument(std::string(who) + ": matching is on a different vertex set");
  if (!f.is_perfect()) throw std::invalid_argument(std::string(who) + ": matching is not perfect");
}

Graph with_metadata(Graph out, const Graph& src, bool keep_sides) {
  if (keep_sides && src.bipartition()) out.set_bipartition(*src.bipartition());
  if (src.labels()) out.set_labels(*src.labels());
  return out;
}

}  // namespace

Graph remove_matching(const Graph& g, const Matching& f) {
  require_perfect(g, f, "remove_matching");
  for (const auto& e : f.edges())
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("remove_matching: matching edge not in graph");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - f.size());
  const auto& fe = f.edges();
  for (const auto& e : g.edges())
    if (!std::binary_search(fe.begin(), fe.end(), e)) edges.push_back(e);
  return with_metadata(Graph(g.order(), edges), g, true);
}

Graph add_matching(const Graph& g, const Matching& f) {
  require_perfect(g, f, "add_matching");
  bool crosses = g.bipartition().has_value();
  for (const auto& e : f.edges()) {
    if (g.has_edge(e.u, e.v)) throw std::invalid_argument("add_matching: matching edge already in graph");
    if (crosses && (*g.bipartition())[e.u] == (*g.bipartition())[e.v]) crosses = false;
  }
  auto edges = g.edges();
  edges.insert(edges.end(), f.edges().begin(), f.edges().end());
  std::sort(edges.begin(), edges.end());
  return with_metadata(Graph(g.order(), edges), g, crosses);
}

}  // namespace ef
