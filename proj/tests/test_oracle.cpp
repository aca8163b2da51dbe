#include <doctest.h>

#include "covnet/generator.hpp"
#include "covnet/oracle.hpp"
#include "helpers.hpp"

using covnet::EdgeSet;
using covnet::OracleLimits;
using covnet::Rational;
using covtest::make_graph;
using covtest::make_instance;
using covtest::path_graph;

TEST_CASE("oracle limits parse and validate") {
  OracleLimits def;
  CHECK(def.max_terminals == 10);
  CHECK(def.max_edges == 14);
  CHECK(def.max_groups == 3);
  auto lim = OracleLimits::parse("e=20,k=6");
  CHECK(lim.max_edges == 20);
  CHECK(lim.max_terminals == 6);
  CHECK(lim.max_groups == 3);
  lim = OracleLimits::parse("g=5,e=8,k=4");
  CHECK(lim.max_groups == 5);
  CHECK_THROWS_AS(OracleLimits::parse("z=3"), covnet::ParseError);
  CHECK_THROWS_AS(OracleLimits::parse("e="), covnet::ParseError);
  CHECK_THROWS_AS(OracleLimits::parse("e=-1").validate(), covnet::ShapeError);
}

TEST_CASE("exact_steiner_tree base cases") {
  auto g = path_graph(4);
  auto [t0, c0] = covnet::exact_steiner_tree(g, {2});
  CHECK(c0 == 0);
  CHECK(t0.empty());
  auto [t1, c1] = covnet::exact_steiner_tree(g, {0, 3});
  CHECK(c1 == 3);
  CHECK(t1 == EdgeSet{0, 1, 2});

  auto star = make_graph(4, {{0, 3, "1"}, {1, 3, "1"}, {2, 3, "1"}});
  auto [t2, c2] = covnet::exact_steiner_tree(star, {0, 1, 2});
  CHECK(c2 == 3);
  CHECK(covnet::is_steiner_tree(star, t2, {0, 1, 2}));
}

TEST_CASE("exact_steiner_tree beats the MST heuristic on the hub graph") {
  auto hub = make_graph(4, {{0, 3, "3"}, {1, 3, "3"}, {2, 3, "3"},
                            {0, 1, "5"}, {1, 2, "5"}});
  auto [tree, cost] = covnet::exact_steiner_tree(hub, {0, 1, 2});
  CHECK(cost == 9);  // through the hub; metric-closure MST pays 10
  CHECK(covnet::is_steiner_tree(hub, tree, {0, 1, 2}));
  CHECK(hub.total_cost(covnet::steiner_mst_heuristic(hub, {0, 1, 2})) == 10);
}

TEST_CASE("exact_steiner_tree with rational costs") {
  auto g = make_graph(4, {{0, 1, "1/2"}, {1, 3, "1/3"}, {0, 2, "2"},
                          {2, 3, "1/4"}});
  auto [tree, cost] = covnet::exact_steiner_tree(g, {0, 2, 3});
  CHECK(cost == Rational(1, 2) + Rational(1, 3) + Rational(1, 4));
}

TEST_CASE("heuristic is within factor 2 of the exact tree") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    covnet::GeneratorSpec spec;
    spec.kind = covnet::InstanceKind::kLaminar;  // arbitrary costs 1..4
    spec.n = 7;
    spec.m = 11;
    spec.g = 2;
    spec.seed = 1000 + seed;
    auto inst = covnet::generate_instance(spec);
    for (const auto& grp : inst.groups()) {
      auto [tree, exact] =
          covnet::exact_steiner_tree(inst.graph(), grp.terminals);
      Rational heur = inst.graph().total_cost(
          covnet::steiner_mst_heuristic(inst.graph(), grp.terminals));
      CHECK(exact <= heur);
      CHECK(heur <= 2 * exact);
    }
  }
}

TEST_CASE("exact_steiner_forest merges groups when that is cheaper") {
  auto g = path_graph(4);
  // separate trees pay 2 + 2, sharing the middle edge pays 3
  auto [forest, cost] =
      covnet::exact_steiner_forest(g, {{0, 2}, {1, 3}});
  CHECK(cost == 3);
  CHECK(forest == EdgeSet{0, 1, 2});

  // far apart groups stay separate
  auto g2 = make_graph(6, {{0, 1, "1"}, {1, 2, "1"}, {2, 3, "10"},
                           {3, 4, "1"}, {4, 5, "1"}});
  auto [forest2, cost2] =
      covnet::exact_steiner_forest(g2, {{0, 2}, {3, 5}});
  CHECK(cost2 == 4);
}

TEST_CASE("exact_coverage_optimum on hand instances") {
  // one unit edge, one group: pay the demand weight once
  auto single = make_instance(path_graph(2), {{"a", "2"}, {"b", "3"}},
                              {{{0, 1}, {"a", "b"}}});
  auto [sol1, opt1] = covnet::exact_coverage_optimum(single);
  CHECK(opt1 == 5);
  CHECK(sol1.trees == std::vector<EdgeSet>{{0}});

  // path 0-1-2, sunflower {a,b} on (0,1) and {a,c} on (1,2), unit weights:
  // each edge carries one two-packet set
  auto sun = make_instance(path_graph(3),
                           {{"a", "1"}, {"b", "1"}, {"c", "1"}},
                           {{{0, 1}, {"a", "b"}}, {{1, 2}, {"a", "c"}}});
  auto [sol2, opt2] = covnet::exact_coverage_optimum(sun);
  CHECK(opt2 == 4);

  // shared demand makes overlap free: both groups want {a} on a 3-cycle
  auto share = make_instance(covtest::cycle_graph(3), {{"a", "1"}},
                             {{{0, 1}, {"a"}}, {{0, 2}, {"a"}}});
  auto [sol3, opt3] = covnet::exact_coverage_optimum(share);
  CHECK(opt3 == 2);
}

TEST_CASE("coverage optimum is invariant under vertex relabeling") {
  auto a = make_instance(path_graph(4), {{"a", "1"}, {"b", "2"}},
                         {{{0, 2}, {"a"}}, {{1, 3}, {"a", "b"}}});
  // same instance with vertices reversed: i -> 3-i
  auto b = make_instance(path_graph(4), {{"a", "1"}, {"b", "2"}},
                         {{{1, 3}, {"a"}}, {{0, 2}, {"a", "b"}}});
  CHECK(covnet::exact_coverage_optimum(a).second ==
        covnet::exact_coverage_optimum(b).second);
}

TEST_CASE("coverage optimum lower-bounds any valid routing") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    covnet::GeneratorSpec spec;
    spec.kind = covnet::InstanceKind::kSunflower;
    spec.n = 6;
    spec.m = 8;
    spec.g = 2;
    spec.seed = 2000 + seed;
    auto inst = covnet::generate_instance(spec);
    auto [best, opt] = covnet::exact_coverage_optimum(inst);
    covnet::validate_solution(inst, best);
    CHECK(covnet::load_cost(inst, best) == opt);
    // naive per-group heuristic routing can only be worse
    covnet::RoutingSolution naive;
    for (const auto& grp : inst.groups())
      naive.trees.push_back(
          covnet::steiner_mst_heuristic(inst.graph(), grp.terminals));
    CHECK(opt <= covnet::load_cost(inst, naive));
  }
}

TEST_CASE("oracles refuse inputs beyond their limits") {
  OracleLimits tight;
  tight.max_terminals = 2;
  tight.max_edges = 2;
  tight.max_groups = 1;
  auto g = path_graph(4);
  CHECK_THROWS_AS(covnet::exact_steiner_tree(g, {0, 1, 2}, tight),
                  covnet::OracleRefused);
  CHECK_THROWS_AS(covnet::exact_steiner_forest(g, {{0, 1}, {2, 3}}, tight),
                  covnet::OracleRefused);
  auto inst = make_instance(g, {{"a", "1"}}, {{{0, 3}, {"a"}}});
  CHECK_THROWS_AS(covnet::exact_coverage_optimum(inst, tight),
                  covnet::OracleRefused);
  // within limits it works
  tight.max_edges = 3;
  CHECK(covnet::exact_coverage_optimum(inst, tight).second == 3);
}
