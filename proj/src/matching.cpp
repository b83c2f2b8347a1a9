#include "expander_forge/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <string>

namespace ef {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// Fisher-Yates driven directly by mt19937_64 with rejection sampling, so the
// permutation is identical on every standard library (std::shuffle is not).
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    std::swap(items[i - 1], items[r % bound]);
  }
}

// Left vertices are indexed 0..m-1, right vertices 0..m-1 (local indices).
class HopcroftKarp {
 public:
  explicit HopcroftKarp(std::vector<std::vector<std::size_t>> adj, std::size_t right_count)
      : adj_(std::move(adj)),
        match_left_(adj_.size(), kNone),
        match_right_(right_count, kNone),
        dist_(adj_.size(), kInf),
        next_edge_(adj_.size(), 0) {}

  std::size_t run(const std::vector<std::size_t>& left_order) {
    std::size_t size = 0;
    while (bfs()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (std::size_t u : left_order)
        if (match_left_[u] == kNone && dfs(u)) ++size;
    }
    return size;
  }

  [[nodiscard]] const std::vector<std::size_t>& match_left() const { return match_left_; }
  [[nodiscard]] const std::vector<std::size_t>& match_right() const { return match_right_; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }

 private:
  bool bfs() {
    std::queue<std::size_t> queue;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kNone) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  // Iterative-pointer DFS along the layered graph.
  bool dfs(std::size_t u) {
    for (auto& i = next_edge_[u]; i < adj_[u].size(); ++i) {
      const std::size_t v = adj_[u][i];
      const std::size_t w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace

HallViolation::HallViolation(std::vector<Vertex> deficient, std::vector<Vertex> neighborhood)
    : std::runtime_error("no perfect matching: " + std::to_string(deficient.size()) + " vertices have only " +
                         std::to_string(neighborhood.size()) + " neighbours"),
      deficient_(std::move(deficient)),
      neighborhood_(std::move(neighborhood)) {}

Matching perfect_matching_bipartite(const Graph& g, MatchingSeed seed) {
  if (!g.bipartition()) throw std::invalid_argument("perfect_matching_bipartite: graph has no bipartition");
  const auto& side = *g.bipartition();

  std::vector<Vertex> left, right;
  std::vector<std::size_t> local(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& bucket = side[v] == 0 ? left : right;
    local[v] = bucket.size();
    bucket.push_back(v);
  }
  if (left.size() != right.size()) throw std::invalid_argument("perfect_matching_bipartite: sides have unequal size");

  std::mt19937_64 rng(seed.value);
  std::vector<std::vector<std::size_t>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (Vertex v : g.neighbors(left[i])) adj[i].push_back(local[v]);
    shuffle(adj[i], rng);
  }
  std::vector<std::size_t> order(left.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle(order, rng);

  HopcroftKarp hk(std::move(adj), right.size());
  const std::size_t size = hk.run(order);

  if (size < left.size()) {
    // Koenig: the left vertices reachable from a free left vertex by
    // alternating paths have a neighbourhood one smaller than themselves.
    const auto& ml = hk.match_left();
    const auto& mr = hk.match_right();
    const auto& a = hk.adjacency();
    std::vector<bool> seen_left(left.size(), false), seen_right(right.size(), false);
    std::queue<std::size_t> queue;
    const auto free_it = std::find(ml.begin(), ml.end(), kNone);
    const auto start = static_cast<std::size_t>(free_it - ml.begin());
    seen_left[start] = true;
    queue.push(start);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : a[u]) {
        if (seen_right[v]) continue;
        seen_right[v] = true;
        const std::size_t w = mr[v];
        if (w != kNone && !seen_left[w]) {
          seen_left[w] = true;
          queue.push(w);
        }
      }
    }
    std::vector<Vertex> deficient, nbhd;
    for (std::size_t i = 0; i < left.size(); ++i)
      if (seen_left[i]) deficient.push_back(left[i]);
    for (std::size_t j = 0; j < right.size(); ++j)
      if (seen_right[j]) nbhd.push_back(right[j]);
    throw HallViolation(std::move(deficient), std::move(nbhd));
  }

  std::vector<Edge> edges;
  edges.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) edges.emplace_back(left[i], right[hk.match_left()[i]]);
  return Matching(g.order(), std::move(edges));
}

MatchingSample sample_matchings(const Graph& g, std::size_t count, MatchingSeed base_seed) {
  if (count == 0) throw std::invalid_argument("sample_matchings: count must be positive");
  MatchingSample sample;
  sample.requested = count;
  const std::size_t max_attempts = 10 * count;
  while (sample.matchings.size() < count && sample.attempts < max_attempts) {
    auto m = perfect_matching_bipartite(g, MatchingSeed{base_seed.value + sample.attempts});
    ++sample.attempts;
    if (std::find(sample.matchings.begin(), sample.matchings.end(), m) == sample.matchings.end())
      sample.matchings.push_back(std::move(m));
  }
  return sample;
}

}  // namespace ef
