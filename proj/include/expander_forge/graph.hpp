// Simple undirected graphs, Cayley graphs, complements and 1-factor
// perturbations.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "expander_forge/projective.hpp"

namespace ef {

using Vertex = std::size_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Side of each vertex in a two-colouring (0 or 1).
using Bipartition = std::vector<std::uint8_t>;

/// Simple undirected graph stored as sorted neighbour lists. Immutable once
/// built; all mutating operations return new graphs.
class Graph {
 public:
  Graph() = default;
  /// Validates: no loops, no out-of-range endpoints; duplicates are an error.
  Graph(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t order() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  /// Common degree if every vertex has the same degree.
  [[nodiscard]] std::optional<std::size_t> regular_degree() const;
  /// All edges (u < v) in ascending lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  /// Throws std::invalid_argument if some edge does not cross the colouring.
  void set_bipartition(Bipartition sides);

  [[nodiscard]] const std::optional<std::vector<ProjMat>>& labels() const { return labels_; }
  void set_labels(std::vector<ProjMat> labels);

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<Bipartition> bipartition_;
  std::optional<std::vector<ProjMat>> labels_;
};

/// Vertex-disjoint set of edges on n vertices.
class Matching {
 public:
  Matching() = default;
  /// Throws std::invalid_argument if two edges share a vertex.
  Matching(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }
  [[nodiscard]] bool is_perfect() const { return 2 * edges_.size() == n_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;  // sorted
};

/// Right Cayley graph: i ~ j iff group[i]^-1 group[j] is in gens. gens must
/// be symmetric, exclude the identity, and the group list must be closed
/// under right multiplication by gens.
Graph cayley_graph(std::span<const ProjMat> group, std::span<const ProjMat> gens);

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);

/// BFS two-colouring (vertex 0 on side 0), or nullopt if an odd cycle exists.
/// Throws std::invalid_argument on a disconnected graph.
std::optional<Bipartition> detect_bipartition(const Graph& g);

/// Component-wise BFS two-colouring (each component's lowest vertex on
/// side 0); nullopt if an odd cycle exists.
std::optional<Bipartition> two_colouring(const Graph& g);

/// Ordinary complement. Rejects graphs that carry a bipartition.
Graph complement(const Graph& g);

/// Swap presence of all cross edges with respect to the recorded
/// bipartition. Sides must have equal size.
Graph bipartite_complement(const Graph& g);

/// X - F. f must be a perfect matching contained in the edge set.
Graph remove_matching(const Graph& g, const Matching& f);

/// X + F, i.e. edge union. f must be perfect and edge-disjoint from g.
/// The bipartition is kept when every edge of f crosses it.
Graph add_matching(const Graph& g, const Matching& f);

}  // namespace ef
