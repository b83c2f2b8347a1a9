// Plain-text edge lists.
//
// Format: a header line "n k b" where k is the common degree (or -1 when the
// graph is not regular) and b is 1 if a bipartition is recorded, else 0.
// Then one "u v" line per edge with u < v, 0-based, in ascending
// lexicographic order.
#pragma once

#include <iosfwd>

#include "expander_forge/graph.hpp"

namespace ef {

void write_edge_list(std::ostream& os, const Graph& g);

/// Parses the format above. When b = 1 the bipartition is recovered by a
/// BFS two-colouring. Throws std::runtime_error on malformed input or a
/// header that contradicts the edges.
Graph read_edge_list(std::istream& is);

void write_matching(std::ostream& os, const Matching& f);

}  // namespace ef
