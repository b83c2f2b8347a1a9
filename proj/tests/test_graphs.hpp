// Small graph generators shared by the unit and acceptance suites.
#pragma once

#include <cstdint>
#include <random>

#include "expander_forge/graph.hpp"

namespace ef::testgraphs {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
/// K_{m,m} with sides {0..m-1} and {m..2m-1}, bipartition recorded.
Graph complete_bipartite(std::size_t m);
/// Labelled graph on n vertices whose edge set is the bitmask over pairs
/// (u, v), u < v, in lexicographic order.
Graph from_mask(std::size_t n, std::uint64_t mask);
Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng);
/// Uniform-ish random simple k-regular bipartite graph on 2m vertices:
/// a relabelled circulant followed by many degree-preserving switches.
/// Bipartition recorded, sides interleaved at random.
Graph random_regular_bipartite(std::size_t m, std::size_t k, std::mt19937_64& rng);

}  // namespace ef::testgraphs
