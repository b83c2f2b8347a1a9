#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "expander_forge/lps.hpp"
#include "test_graphs.hpp"

using ef::Edge;
using ef::Graph;
using ef::Matching;
namespace tg = ef::testgraphs;

namespace {

void check_perfect_in(const Graph& g, const Matching& f) {
  CHECK(f.order() == g.order());
  CHECK(f.is_perfect());
  std::vector<int> covered(g.order(), 0);
  for (const auto& e : f.edges()) {
    CHECK(g.has_edge(e.u, e.v));
    ++covered[e.u];
    ++covered[e.v];
  }
  for (int c : covered) CHECK(c == 1);
}

Graph bipartite_c4() {
  Graph g = tg::cycle(4);
  g.set_bipartition({0, 1, 0, 1});
  return g;
}

}  // namespace

TEST_CASE("mt19937_64 is the reference generator") {
  std::mt19937_64 rng;
  rng.discard(9999);
  CHECK(rng() == 9981545732273789042ULL);
}

TEST_CASE("perfect matchings of X^{3,5}") {
  const auto x = ef::build_lps_graph(3, 5);
  const auto f = ef::perfect_matching_bipartite(x.graph, {0});
  CHECK(f.size() == 60);
  check_perfect_in(x.graph, f);
  CHECK(ef::perfect_matching_bipartite(x.graph, {0}) == f);
}

TEST_CASE("perfect matching of the bipartite complement of X^{5,7}") {
  const auto x = ef::build_lps_graph(5, 7);
  const auto bc = ef::bipartite_complement(x.graph);
  CHECK(bc.regular_degree() == 162u);
  const auto f = ef::perfect_matching_bipartite(bc, {1});
  CHECK(f.size() == 168);
  check_perfect_in(bc, f);
  for (const auto& e : f.edges()) CHECK_FALSE(x.graph.has_edge(e.u, e.v));
}

TEST_CASE("K_{m,m}: seed determines the matching") {
  const auto g = tg::complete_bipartite(6);
  std::set<std::vector<Edge>> seen;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto f = ef::perfect_matching_bipartite(g, {s});
    check_perfect_in(g, f);
    CHECK(ef::perfect_matching_bipartite(g, {s}) == f);
    seen.insert(f.edges());
  }
  CHECK(seen.size() > 1);
}

TEST_CASE("sampling distinct matchings") {
  SUBCASE("X^{3,5}: four distinct") {
    const auto x = ef::build_lps_graph(3, 5);
    const auto sample = ef::sample_matchings(x.graph, 4, {0});
    REQUIRE(sample.complete());
    for (std::size_t i = 0; i < 4; ++i) {
      check_perfect_in(x.graph, sample.matchings[i]);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(sample.matchings[i] == sample.matchings[j]);
    }
  }
  SUBCASE("C4 has exactly two") {
    const auto sample = ef::sample_matchings(bipartite_c4(), 2, {123});
    REQUIRE(sample.complete());
    const std::set<std::vector<Edge>> got{sample.matchings[0].edges(), sample.matchings[1].edges()};
    const std::set<std::vector<Edge>> expected{{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};
    CHECK(got == expected);
  }
  SUBCASE("asking K_{2,2} for three reports a shortfall") {
    const auto sample = ef::sample_matchings(tg::complete_bipartite(2), 3, {0});
    CHECK_FALSE(sample.complete());
    CHECK(sample.matchings.size() == 2);
    CHECK(sample.attempts == 30);
  }
  CHECK_THROWS_AS(ef::sample_matchings(bipartite_c4(), 0, {0}), std::invalid_argument);
}

TEST_CASE("Hall violations are reported with a witness") {
  // Left {0, 1, 2}, right {3, 4, 5}; 0 and 1 only see 3.
  Graph g(6, std::vector<Edge>{{0, 3}, {1, 3}, {2, 4}, {2, 5}});
  g.set_bipartition({0, 0, 0, 1, 1, 1});
  try {
    (void)ef::perfect_matching_bipartite(g, {0});
    FAIL("expected HallViolation");
  } catch (const ef::HallViolation& e) {
    CHECK(e.neighborhood().size() < e.deficient().size());
    std::set<ef::Vertex> nbhd;
    for (auto v : e.deficient())
      for (auto w : g.neighbors(v)) nbhd.insert(w);
    CHECK(std::vector<ef::Vertex>(nbhd.begin(), nbhd.end()) == e.neighborhood());
  }
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(ef::perfect_matching_bipartite(tg::cycle(4), {0}), std::invalid_argument);
  Graph lopsided(3, std::vector<Edge>{{0, 1}, {0, 2}});
  lopsided.set_bipartition({0, 1, 1});
  CHECK_THROWS_AS(ef::perfect_matching_bipartite(lopsided, {0}), std::invalid_argument);
}

TEST_CASE("regular bipartite graphs always have perfect matchings") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = 4 + i % 30;
    const std::size_t k = 1 + i % std::min<std::size_t>(m, 8);
    const auto g = tg::random_regular_bipartite(m, k, rng);
    REQUIRE(g.regular_degree() == k);
    check_perfect_in(g, ef::perfect_matching_bipartite(g, {static_cast<std::uint64_t>(i)}));
  }
}
