#include "expander_forge/lps.hpp"

#include <stdexcept>
#include <string>

namespace ef {

LpsGraph build_lps_graph(std::int64_t p, std::int64_t q) {
  LpsGraph x;
  x.p = p;
  x.q = q;
  x.generators = build_generator_images(p, q);
  x.group = legendre(p, q) == 1 ? Subgroup::PSL : Subgroup::PGL;

  const auto elements = enumerate_group(q, x.group);
  x.graph = cayley_graph(elements, x.generators);

  const auto k = x.graph.regular_degree();
  if (!k || *k != static_cast<std::size_t>(p + 1))
    throw std::runtime_error("build_lps_graph: graph is not (p+1)-regular");
  if (!is_connected(x.graph))
    throw std::runtime_error("build_lps_graph: X^{" + std::to_string(p) + "," + std::to_string(q) + "} is disconnected");

  auto sides = detect_bipartition(x.graph);
  if (x.group == Subgroup::PGL) {
    if (!sides) throw std::runtime_error("build_lps_graph: PGL case is expected to be bipartite");
    // Normalise so that side 0 is the PSL coset.
    const std::uint8_t flip = psl_membership(elements[0]) ? 0 : 1;
    for (Vertex v = 0; v < elements.size(); ++v) {
      (*sides)[v] ^= flip;
      if (((*sides)[v] == 0) != psl_membership(elements[v]))
        throw std::runtime_error("build_lps_graph: BFS colouring disagrees with the PSL coset");
    }
    x.graph.set_bipartition(std::move(*sides));
  } else if (sides) {
    throw std::runtime_error("build_lps_graph: PSL case is expected to be non-bipartite");
  }
  return x;
}

Matching perturbing_matching(const LpsGraph& x, Perturbation direction, MatchingSeed seed) {
  if (!x.bipartite())
    throw std::invalid_argument("perturbing_matching: only bipartite X^{p,q} (p a non-square mod q) are supported");
  if (direction == Perturbation::Minus) return perfect_matching_bipartite(x.graph, seed);
  return perfect_matching_bipartite(bipartite_complement(x.graph), seed);
}

Graph perturb(const LpsGraph& x, Perturbation direction, const Matching& f) {
  return direction == Perturbation::Minus ? remove_matching(x.graph, f) : add_matching(x.graph, f);
}

}  // namespace ef
