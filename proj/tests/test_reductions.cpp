#include <sstream>

#include "doctest.h"
#include "mixdom/generate.hpp"
#include "mixdom/reductions.hpp"
#include "support/oracles.hpp"

using namespace mixdom;

TEST_CASE("augmented graph construction") {
  Graph k2 = gen_complete(2);
  GiGadget gg = build_gi(k2, 1);
  CHECK(gg.graph.num_vertices() == 9);
  CHECK(gg.graph.num_edges() == 12);
  CHECK(gg.n_original == 2);
  CHECK(gg.a_ids == std::vector<VertexId>{2});
  CHECK(gg.b_ids == std::vector<VertexId>{3});
  CHECK(gg.hub == 4);
  CHECK(gg.leaf_ids == std::vector<VertexId>{5, 6, 7, 8});
  CHECK(gg.graph.degree(gg.hub) == 8);
  CHECK(gg.graph.neighbors(3) == std::vector<VertexId>{2, 4});
  for (VertexId leaf : gg.leaf_ids) {
    CHECK(gg.graph.degree(leaf) == 1);
    CHECK(gg.graph.neighbors(leaf) == std::vector<VertexId>{gg.hub});
  }
  // a_1 touches b_1, both originals, and the hub
  CHECK(gg.graph.neighbors(2) == std::vector<VertexId>{0, 1, 3, 4});

  Graph tri = gen_complete(3);
  GiGadget gt = build_gi(tri, 2);
  CHECK(gt.graph.num_vertices() == 14);
  CHECK(gt.graph.num_edges() == 24);
  CHECK(gt.a_ids == std::vector<VertexId>{3, 4});
  CHECK(gt.b_ids == std::vector<VertexId>{5, 6});
  CHECK(gt.hub == 7);
  CHECK((int)gt.leaf_ids.size() == 6);
}

TEST_CASE("augmented graph input guards") {
  Graph k2 = gen_complete(2);
  CHECK_THROWS_AS(build_gi(k2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_gi(k2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_gi(Graph::build(0, {}), 1), std::invalid_argument);
  CHECK_THROWS_AS(build_gi(Graph::build(3, {{0, 1}}), 1), std::invalid_argument);
}

TEST_CASE("augmented optimum identity") {
  GiIdentityReport rep = gi_optimum_identity_check(gen_complete(2), WeightConfig(1, 1));
  REQUIRE(rep.checked);
  CHECK(rep.tau == 1);
  CHECK(rep.expected == Rational(2));
  CHECK(rep.actual == Rational(2));
  CHECK(rep.holds);
  // the gadget is small enough to confirm exhaustively
  GiGadget gg = build_gi(gen_complete(2), 1);
  CHECK(oracle::wmd_bruteforce(gg.graph, WeightConfig(1, 1)) == Rational(2));

  rep = gi_optimum_identity_check(gen_complete(2), WeightConfig(1, Rational(3, 2)));
  REQUIRE(rep.checked);
  CHECK(rep.expected == Rational(5, 2));
  CHECK(rep.holds);

  rep = gi_optimum_identity_check(gen_path(3), WeightConfig(1, 1));
  REQUIRE(rep.checked);
  CHECK(rep.tau == 1);
  CHECK(rep.expected == Rational(2));
  CHECK(rep.holds);

  rep = gi_optimum_identity_check(gen_path(3), WeightConfig(1, Rational(3, 2)));
  REQUIRE(rep.checked);
  CHECK(rep.holds);

  rep = gi_optimum_identity_check(gen_cycle(4), WeightConfig(1, 1));
  REQUIRE(rep.checked);
  CHECK(rep.tau == 2);
  CHECK(rep.expected == Rational(3));
  CHECK(rep.holds);
}

TEST_CASE("augmented identity respects budgets and regimes") {
  GiIdentityReport rep = gi_optimum_identity_check(gen_cycle(4), WeightConfig(1, 1), 10);
  CHECK_FALSE(rep.checked);

  CHECK_THROWS_AS(gi_optimum_identity_check(gen_complete(2), WeightConfig(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gi_optimum_identity_check(gen_complete(2), WeightConfig(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("cover extraction from a dominating set") {
  Graph p4 = gen_path(4);
  std::vector<VertexId> cover = vc_from_wmd(p4, MixedSet{{1, 2}, {}});
  CHECK(cover == std::vector<VertexId>{1, 2});

  Graph c4 = gen_cycle(4);
  cover = vc_from_wmd(c4, MixedSet{{}, {Edge(0, 1), Edge(2, 3)}});
  CHECK(cover == std::vector<VertexId>{0, 1, 2, 3});

  CHECK_THROWS_AS(vc_from_wmd(c4, MixedSet{{0}, {}}), std::invalid_argument);
}

TEST_CASE("set cover parsing") {
  std::istringstream in(
      "c toy instance\n"
      "u 3 2\n"
      "s 1 2\n"
      "\n"
      "s 2 3\n");
  SetCoverInstance sc = read_setcover(in);
  CHECK(sc.n_elements == 3);
  REQUIRE(sc.sets.size() == 2);
  CHECK(sc.sets[0] == std::vector<int>{1, 2});
  CHECK(sc.sets[1] == std::vector<int>{2, 3});
}

TEST_CASE("set cover parse errors") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_setcover(in), ParseError);
  };
  fails("s 1 2\n");                       // subset before header
  fails("u 2 1\ns 1 3\n");                // element out of range
  fails("u 2 1\ns 1 2\ns 2\n");           // more lines than promised
  fails("u 2 2\ns 1 2\n");                // fewer lines than promised
  fails("u 2 1\ns\n");                    // empty subset
  fails("u 2 1\ns 1 x\n");                // malformed token
  fails("u 3 2\ns 1 2\ns 1\n");           // element 3 uncovered
  fails("");                              // missing header
}

TEST_CASE("set cover instance validation") {
  CHECK_THROWS_AS(SetCoverInstance::make(0, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(SetCoverInstance::make(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(SetCoverInstance::make(2, {{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SetCoverInstance::make(2, {{1, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(SetCoverInstance::make(2, {{1}}), std::invalid_argument);
  SetCoverInstance sc = SetCoverInstance::make(2, {{2, 1, 2}, {2}});
  CHECK(sc.sets[0] == std::vector<int>{1, 2});  // sorted, deduped
}

TEST_CASE("exhaustive set cover optimum") {
  CHECK(exhaustive_set_cover_opt(SetCoverInstance::make(2, {{1}, {1, 2}})) == 1);
  CHECK(exhaustive_set_cover_opt(SetCoverInstance::make(2, {{1}, {2}})) == 2);
  CHECK(exhaustive_set_cover_opt(SetCoverInstance::make(
            4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}})) == 2);
  CHECK(exhaustive_set_cover_opt(SetCoverInstance::make(
            3, {{1}, {2}, {3}, {1, 2, 3}})) == 1);
}

TEST_CASE("set cover gadget construction") {
  SetCoverInstance sc = SetCoverInstance::make(2, {{1}, {1, 2}});
  SetCoverGadget gadget = build_setcover_gadget(sc);
  CHECK(gadget.q == 1);  // floor(2 * ln 2)
  CHECK(gadget.layers == 2);
  CHECK(gadget.weights.wv == Rational(1));
  CHECK(gadget.weights.we == Rational(1));
  CHECK(gadget.graph.num_vertices() == 6);
  CHECK(gadget.graph.num_edges() == 6);
  CHECK(gadget.set_vertex(0) == 0);
  CHECK(gadget.set_vertex(1) == 1);
  CHECK(gadget.element_copy(1, 1) == 2);
  CHECK(gadget.element_copy(2, 1) == 3);
  CHECK(gadget.element_copy(1, 2) == 4);
  CHECK(gadget.element_copy(2, 2) == 5);
  CHECK(gadget.graph.degree(0) == 2);  // {1} meets both copies of element 1
  CHECK(gadget.graph.degree(1) == 4);  // {1,2} meets all four copies
  CHECK(gadget.graph.has_edge(Edge(0, 2)));
  CHECK(gadget.graph.has_edge(Edge(0, 4)));
  CHECK_FALSE(gadget.graph.has_edge(Edge(0, 3)));

  SetCoverInstance sc3 = SetCoverInstance::make(3, {{1, 2}, {2, 3}, {1, 3}});
  SetCoverGadget g3 = build_setcover_gadget(sc3);
  CHECK(g3.q == 3);  // floor(3 * ln 3)
  CHECK(g3.layers == 10);
  CHECK(g3.graph.num_vertices() == 33);
  CHECK(g3.weights.we == Rational(1, 3));
}

TEST_CASE("set cover gadget parameter guards") {
  SetCoverInstance tiny = SetCoverInstance::make(1, {{1}});
  CHECK_THROWS_AS(build_setcover_gadget(tiny), std::invalid_argument);

  SetCoverInstance sc = SetCoverInstance::make(2, {{1}, {1, 2}});
  SetCoverGadget forced = build_setcover_gadget(sc, 2);
  CHECK(forced.q == 2);
  CHECK(forced.layers == 5);
  CHECK(forced.weights.we == Rational(1, 2));
  CHECK(forced.graph.num_vertices() == 2 + 2 * 5);
  CHECK_THROWS_AS(build_setcover_gadget(sc, 0), std::invalid_argument);
}

TEST_CASE("reading a cover back out of the gadget") {
  SetCoverInstance sc = SetCoverInstance::make(2, {{1}, {1, 2}});
  SetCoverGadget gadget = build_setcover_gadget(sc);

  MixedSet good{{1}, {Edge(0, 2)}};
  REQUIRE(is_mixed_dominating_set(gadget.graph, good));
  ScExtraction ex = sc_from_mds(sc, gadget, good);
  CHECK(ex.chosen_sets == std::vector<int>{1});
  CHECK(ex.covers);

  // all element copies dominate the gadget but pick no sets at all
  MixedSet weak{{2, 3, 4, 5}, {}};
  REQUIRE(is_mixed_dominating_set(gadget.graph, weak));
  ex = sc_from_mds(sc, gadget, weak);
  CHECK(ex.chosen_sets.empty());
  CHECK_FALSE(ex.covers);

  CHECK_THROWS_AS(sc_from_mds(sc, gadget, MixedSet{{0}, {}}), std::invalid_argument);
}

TEST_CASE("gadget weight identity") {
  Eq1Report rep = eq1_identity_check(SetCoverInstance::make(2, {{1}, {1, 2}}));
  REQUIRE(rep.checked);
  CHECK(rep.sc_opt == 1);
  CHECK(rep.predicted == Rational(2));
  CHECK(rep.actual == Rational(2));
  CHECK(rep.holds);

  rep = eq1_identity_check(SetCoverInstance::make(2, {{1}, {2}}));
  REQUIRE(rep.checked);
  CHECK(rep.sc_opt == 2);
  CHECK(rep.predicted == Rational(2));
  CHECK(rep.holds);

  rep = eq1_identity_check(SetCoverInstance::make(2, {{1}, {1, 2}}), 3);
  CHECK_FALSE(rep.checked);
}
