// The Cayley graphs X^{p,q} and their 1-factor perturbations.
#pragma once

#include <cstdint>
#include <vector>

#include "expander_forge/graph.hpp"
#include "expander_forge/matching.hpp"
#include "expander_forge/projective.hpp"
#include "expander_forge/spectrum.hpp"

namespace ef {

struct LpsGraph {
  std::int64_t p = 0;
  std::int64_t q = 0;
  /// PSL when p is a square mod q (non-bipartite), PGL otherwise (bipartite).
  Subgroup group = Subgroup::PGL;
  std::vector<ProjMat> generators;
  Graph graph;

  [[nodiscard]] bool bipartite() const { return graph.bipartition().has_value(); }
  [[nodiscard]] std::size_t degree() const { return generators.size(); }
};

/// Builds X^{p,q}, checks connectivity and regularity, and records the
/// bipartition in the PGL case. Throws std::invalid_argument on bad primes
/// and std::runtime_error if a structural check fails.
LpsGraph build_lps_graph(std::int64_t p, std::int64_t q);

/// 1-factor used for X - F (a perfect matching of X) or X + F (a perfect
/// matching of the bipartite complement). Requires a bipartite X.
Matching perturbing_matching(const LpsGraph& x, Perturbation direction, MatchingSeed seed);

/// X - F or X + F for the given matching.
Graph perturb(const LpsGraph& x, Perturbation direction, const Matching& f);

}  // namespace ef
