#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "mgg/arena.hpp"
#include "mgg/matching.hpp"
#include "support.hpp"

using namespace mgg;
using namespace mgg::test;

namespace {

Graph ug(std::size_t n, std::vector<Edge> e) { return Graph(GraphKind::undirected, n, e); }

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({i, static_cast<Vertex>(5 + i)});
    e.push_back({static_cast<Vertex>(5 + i), static_cast<Vertex>(5 + (i + 2) % 5)});
  }
  return ug(10, e);
}

std::size_t hk_size(const Graph& g) {
  auto b = bipartition(g);
  REQUIRE(b);
  Matching m = max_matching_bipartite(g, *b);
  CHECK(m.valid_for(g));
  return m.size();
}

}  // namespace

TEST_CASE("bipartite examples") {
  CHECK(hk_size(ug(2, {{0, 1}})) == 1);
  CHECK(hk_size(ug(3, path(3))) == 1);
  std::vector<Edge> k33;
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 3; v < 6; ++v) k33.push_back({u, v});
  CHECK(hk_size(ug(6, k33)) == 3);
  CHECK(brute_force_matching_size(ug(6, k33)) == 3);
  CHECK(hk_size(ug(1, {})) == 0);

  Graph tri = ug(3, cycle(3));
  Bipartition fake{{0, 1}, {2}, {0, 0, 1}};
  CHECK_THROWS_AS(max_matching_bipartite(tri, fake), std::invalid_argument);
}

TEST_CASE("general examples") {
  CHECK(max_matching_general(ug(3, cycle(3))).size() == 1);
  CHECK(max_matching_general(ug(5, cycle(5))).size() == 2);
  CHECK(brute_force_matching_size(ug(5, cycle(5))) == 2);
  Graph two_tri = ug(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  CHECK(max_matching_general(two_tri).size() == 3);
  CHECK(brute_force_matching_size(two_tri) == 3);
  CHECK(max_matching(two_tri).size() == 3);
  // loops never enter a matching
  Graph looped = ug(3, {{0, 0}, {1, 1}, {0, 1}, {1, 2}});
  Matching m = max_matching(looped);
  CHECK(m.size() == 1);
  CHECK(m.valid_for(looped));
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_matching_size(ug(4, {})) == 0);
  CHECK(brute_force_matching_size(ug(2, {{0, 1}})) == 1);
  Graph p = petersen();
  CHECK(p.edge_count() == 15);
  CHECK(brute_force_matching_size(p) == 5);
  CHECK(max_matching_general(p).size() == 5);

  std::vector<Edge> many;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v) many.push_back({u, v});
  CHECK_THROWS_AS(brute_force_matching_size(ug(8, many)), CapacityError);  // 28 edges
}

TEST_CASE("covered_by_all_maximum_matchings") {
  CHECK(covered_by_all_maximum_matchings(ug(2, {{0, 1}}), 0));
  Graph p3 = ug(3, path(3));
  CHECK_FALSE(covered_by_all_maximum_matchings(p3, 0));
  CHECK(covered_by_all_maximum_matchings(p3, 1));
  CHECK_FALSE(maximum_matching_covering(p3, 0));
  auto m = maximum_matching_covering(p3, 1);
  REQUIRE(m);
  CHECK(m->covers(1));
  CHECK_FALSE(covered_by_all_maximum_matchings(ug(1, {}), 0));
}

TEST_CASE("random graphs against enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1500; ++trial) {
    std::size_t n = 1 + rng() % 9;
    Graph g = random_graph(rng, GraphKind::undirected, n, 0.2 + 0.1 * (trial % 5), trial % 7 == 0);
    if (g.without_loops().edge_count() > kBruteForceEdgeCap) continue;
    const std::size_t nu = enumerate_matching(g);
    CHECK(brute_force_matching_size(g) == nu);
    Matching general = max_matching_general(g);
    CHECK(general.valid_for(g));
    CHECK(general.size() == nu);
    if (auto b = bipartition(g.without_loops())) {
      Matching hk = max_matching_bipartite(g.without_loops(), *b);
      CHECK(hk.valid_for(g));
      CHECK(hk.size() == nu);
    }
    if (g.without_loops().edge_count() <= 14) {
      for (Vertex u = 0; u < n; ++u) {
        const bool expected = enumerate_matching(g, u) < nu;
        CHECK(covered_by_all_maximum_matchings(g, u) == expected);
        auto cover = maximum_matching_covering(g, u);
        CHECK(cover.has_value() == expected);
        if (cover) {
          CHECK(cover->covers(u));
          CHECK(cover->size() == nu);
        }
      }
    }
  }
}

TEST_CASE("matching type invariants") {
  Matching m(4);
  m.match(0, 3);
  CHECK(m.size() == 1);
  CHECK(m.mate(3) == Vertex{0});
  CHECK_FALSE(m.mate(1));
  CHECK(m.valid_for(ug(4, {{0, 3}})));
  CHECK_FALSE(m.valid_for(ug(4, {{0, 2}})));
}

TEST_CASE("phase bound on a large random bipartite graph") {
  const std::size_t n = 20000, m = 100000;
  Graph g = random_bipartite_graph(n / 2, n - n / 2, m, 1);
  auto b = bipartition(g);
  REQUIRE(b);
  HopcroftKarpStats stats;
  auto t0 = std::chrono::steady_clock::now();
  Matching mm = max_matching_bipartite(g, *b, &stats);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(mm.valid_for(g));
  CHECK(stats.phases <= 2 * std::sqrt(double(n)) + 2);
  CHECK(secs < 1.0);
  CHECK(max_matching_general(g).size() == mm.size());
}
