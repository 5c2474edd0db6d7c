#include <numeric>

#include "doctest.h"
#include "mixdom/domination.hpp"
#include "mixdom/generate.hpp"
#include "mixdom/matching.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace mixdom;

namespace {

Graph random_bipartite(int nl, int nr, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::uint64_t threshold = (std::uint64_t)(p * 9007199254740992.0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < nl; u++)
    for (int v = 0; v < nr; v++)
      if ((rng.next() >> 11) < threshold) edges.emplace_back(u, nl + v);
  return Graph::build(nl + nr, edges);
}

std::vector<VertexId> iota_vec(int from, int count) {
  std::vector<VertexId> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

}  // namespace

TEST_CASE("matching validity") {
  Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(is_valid_matching(c4, Matching{{Edge(0, 1), Edge(2, 3)}}));
  CHECK_FALSE(is_valid_matching(c4, Matching{{Edge(0, 1), Edge(1, 2)}}));  // shares vertex 1
  CHECK_FALSE(is_valid_matching(c4, Matching{{Edge(0, 2)}}));              // not an edge
  CHECK(is_valid_matching(c4, Matching{}));
}

TEST_CASE("greedy maximal matching") {
  Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Matching m = greedy_maximal_matching(c4);
  CHECK(m.edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});

  for (std::uint64_t seed = 1; seed <= 20; seed++) {
    Graph g = gen_gnp(9, 0.3, seed);
    Matching gm = greedy_maximal_matching(g);
    REQUIRE(is_valid_matching(g, gm));
    // maximality: every edge touches a matched vertex
    std::vector<char> used(g.num_vertices(), 0);
    for (const Edge& e : gm.edges) used[e.u] = used[e.v] = 1;
    for (const Edge& e : g.edges()) CHECK((used[e.u] || used[e.v]));
  }
}

TEST_CASE("bipartite maximum matching on fixed graphs") {
  Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(maximum_matching_bipartite(c4, {0, 2}, {1, 3}).size() == 2);

  Graph k13 = gen_star(3);
  CHECK(maximum_matching_bipartite(k13, {0}, {1, 2, 3}).size() == 1);

  // K_{2,3}
  Graph k23 = Graph::build(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  Matching m = maximum_matching_bipartite(k23, {0, 1}, {2, 3, 4});
  CHECK(m.size() == 2);
  CHECK(m.size() == oracle::max_matching_bruteforce(k23));
  CHECK(is_valid_matching(k23, m));

  Graph p4 = gen_path(4);
  CHECK(maximum_matching_bipartite(p4, {0, 2}, {1, 3}).size() == 2);
}

TEST_CASE("bipartite matching rejects bad bipartitions") {
  Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_AS(maximum_matching_bipartite(c4, {0, 1}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(maximum_matching_bipartite(c4, {0, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(maximum_matching_bipartite(c4, {0, 0, 2}, {1, 3}), std::invalid_argument);
  Graph tri = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(maximum_matching_bipartite(tri, {0, 1}, {2}), std::invalid_argument);
}

TEST_CASE("bipartite matching agrees with the subset oracle") {
  for (std::uint64_t seed = 1; seed <= 30; seed++) {
    Graph g = random_bipartite(5, 4, 0.45, seed);
    Matching m = maximum_matching_bipartite(g, iota_vec(0, 5), iota_vec(5, 4));
    REQUIRE(is_valid_matching(g, m));
    CHECK(m.size() == oracle::max_matching_bruteforce(g));
  }
}

TEST_CASE("general matching on fixed graphs") {
  Graph tri = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(maximum_matching_general(tri).size() == 1);
  CHECK(maximum_matching_general(gen_cycle(5)).size() == 2);
  CHECK(maximum_matching_general(gen_cycle(6)).size() == 3);
  CHECK(maximum_matching_general(testutil::petersen()).size() == 5);
  CHECK(maximum_matching_general(Graph::build(3, {})).size() == 0);
}

TEST_CASE("general matching agrees with the subset oracle") {
  for (std::uint64_t seed = 1; seed <= 40; seed++) {
    Graph g = gen_gnp(9, seed % 3 == 0 ? 0.2 : 0.5, seed * 7 + 1);
    Matching m = maximum_matching_general(g);
    REQUIRE(is_valid_matching(g, m));
    CHECK(m.size() == oracle::max_matching_bruteforce(g));
  }
  // odd components exercise the blossom contraction
  for (std::uint64_t seed = 50; seed <= 60; seed++) {
    Graph g = testutil::gen_connected(9, 0.25, seed);
    CHECK(maximum_matching_general(g).size() == oracle::max_matching_bruteforce(g));
  }
}

TEST_CASE("general matching matches hopcroft-karp on bipartite inputs") {
  for (std::uint64_t seed = 1; seed <= 15; seed++) {
    Graph g = random_bipartite(4, 5, 0.5, seed);
    CHECK(maximum_matching_general(g).size() ==
          maximum_matching_bipartite(g, iota_vec(0, 4), iota_vec(4, 5)).size());
  }
}

TEST_CASE("koenig cover on fixed graphs") {
  Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Matching m = maximum_matching_bipartite(c4, {0, 2}, {1, 3});
  std::vector<VertexId> cover = koenig_min_vertex_cover(c4, {0, 2}, {1, 3}, m);
  CHECK(cover.size() == 2);
  CHECK(is_vertex_cover(c4, cover));

  Graph k13 = gen_star(3);
  Matching ms = maximum_matching_bipartite(k13, {0}, {1, 2, 3});
  CHECK(koenig_min_vertex_cover(k13, {0}, {1, 2, 3}, ms) == std::vector<VertexId>{0});

  Graph p4 = gen_path(4);
  Matching mp = maximum_matching_bipartite(p4, {0, 2}, {1, 3});
  CHECK(koenig_min_vertex_cover(p4, {0, 2}, {1, 3}, mp) == std::vector<VertexId>{0, 2});
}

TEST_CASE("koenig cover equals the brute-force minimum") {
  for (std::uint64_t seed = 1; seed <= 30; seed++) {
    Graph g = random_bipartite(5, 5, 0.4, seed * 3);
    auto left = iota_vec(0, 5), right = iota_vec(5, 5);
    Matching m = maximum_matching_bipartite(g, left, right);
    std::vector<VertexId> cover = koenig_min_vertex_cover(g, left, right, m);
    CHECK(is_vertex_cover(g, cover));
    CHECK((int)cover.size() == oracle::min_vertex_cover_bruteforce(g));
    CHECK((int)cover.size() == m.size());
  }
}

TEST_CASE("koenig rejects a non-maximum matching") {
  Graph c4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_AS(koenig_min_vertex_cover(c4, {0, 2}, {1, 3}, Matching{}), std::logic_error);
}
