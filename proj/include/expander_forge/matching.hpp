// Perfect matchings in bipartite graphs (Hopcroft-Karp) with seeded scan
// order, used to pick the 1-factors F for X - F and X + F.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "expander_forge/graph.hpp"

namespace ef {

/// Drives a std::mt19937_64 stream; same seed and graph give the same matching.
struct MatchingSeed {
  std::uint64_t value = 0;
};

/// Raised when no perfect matching exists. `deficient` is a set of side-0
/// vertices whose neighbourhood `neighborhood` is strictly smaller.
class HallViolation : public std::runtime_error {
 public:
  HallViolation(std::vector<Vertex> deficient, std::vector<Vertex> neighborhood);

  [[nodiscard]] const std::vector<Vertex>& deficient() const { return deficient_; }
  [[nodiscard]] const std::vector<Vertex>& neighborhood() const { return neighborhood_; }

 private:
  std::vector<Vertex> deficient_;
  std::vector<Vertex> neighborhood_;
};

/// Perfect matching of a bipartite graph with recorded, equal-size sides.
/// Runs Hopcroft-Karp in O(E sqrt(V)) with vertex and adjacency scan order
/// shuffled by `seed`. Throws HallViolation if none exists and
/// std::invalid_argument if the graph has no usable bipartition.
Matching perfect_matching_bipartite(const Graph& g, MatchingSeed seed);

struct MatchingSample {
  std::vector<Matching> matchings;
  std::size_t requested = 0;
  std::size_t attempts = 0;

  [[nodiscard]] bool complete() const { return matchings.size() == requested; }
};

/// Up to `count` pairwise-distinct perfect matchings from seeds base,
/// base+1, ...; gives up after 10 * count attempts. Check complete().
MatchingSample sample_matchings(const Graph& g, std::size_t count, MatchingSeed base_seed);

}  // namespace ef
