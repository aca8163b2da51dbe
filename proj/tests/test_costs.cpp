#include <doctest.h>

#include "covnet/generator.hpp"
#include "covnet/laminar_pd.hpp"
#include "helpers.hpp"

using covnet::EdgeSet;
using covnet::PacketSet;
using covnet::Rational;
using covnet::RoutingSolution;
using covtest::make_instance;
using covtest::path_graph;

TEST_CASE("load_cost charges the union of demands per edge") {
  auto inst = make_instance(path_graph(3), {{"a", "2"}, {"b", "1"}},
                            {{{0, 1}, {"a"}},
                             {{1, 2}, {"b"}},
                             {{0, 2}, {"a", "b"}}});
  // trees: (0,1) is edge 0, (1,2) is edge 1
  RoutingSolution sol{{{0}, {1}, {0, 1}}};
  covnet::validate_solution(inst, sol);
  // both edges carry {a,b}: 2 * (2 + 1) = 6
  CHECK(covnet::load_cost(inst, sol) == 6);

  auto disjoint = make_instance(path_graph(3), {{"a", "2"}, {"b", "1"}},
                                {{{0, 1}, {"a"}}, {{1, 2}, {"b"}}});
  RoutingSolution sol2{{{0}, {1}}};
  CHECK(covnet::load_cost(disjoint, sol2) == 3);
}

TEST_CASE("load_cost respects fractional weights and costs") {
  auto inst = make_instance(covtest::make_graph(2, {{0, 1, "3/2"}}),
                            {{"a", "1/3"}, {"b", "1/6"}},
                            {{{0, 1}, {"a"}}, {{0, 1}, {"b"}}});
  RoutingSolution sol{{{0}, {0}}};
  CHECK(covnet::load_cost(inst, sol) == Rational(3, 4));  // 3/2 * (1/3+1/6)
}

TEST_CASE("validate_solution rejects broken routings") {
  auto inst = make_instance(path_graph(3), {{"a", "1"}}, {{{0, 2}, {"a"}}});
  covnet::validate_solution(inst, RoutingSolution{{{0, 1}}});
  CHECK_THROWS_AS(covnet::validate_solution(inst, RoutingSolution{{{0}}}),
                  covnet::SolutionError);  // misses terminal 2
  CHECK_THROWS_AS(covnet::validate_solution(inst, RoutingSolution{{}}),
                  covnet::SolutionError);  // tree count mismatch
  auto cyc = make_instance(covtest::cycle_graph(3), {{"a", "1"}},
                           {{{0, 2}, {"a"}}});
  CHECK_THROWS_AS(
      covnet::validate_solution(cyc, RoutingSolution{{{0, 1, 2}}}),
      covnet::SolutionError);  // cycle is not a tree
}

TEST_CASE("laminar_cost sums weighted forest costs") {
  auto inst = make_instance(path_graph(3), {{"a", "1"}, {"b", "1"}},
                            {{{0, 1}, {"a"}}, {{0, 2}, {"a", "b"}}});
  std::vector<PacketSet> demands = {{0}, {0, 1}};

  // H_{a} empty, H_{ab} the whole path: 1*0 + 2*2
  CHECK(covnet::laminar_cost(inst, demands, {{}, {0, 1}}) == 4);
  // H_{a} adds edge (0,1) on top: 1*1 + 2*2
  CHECK(covnet::laminar_cost(inst, demands, {{0}, {0, 1}}) == 5);
  // group with demand {a,b} cannot use H_{a}: disconnected
  CHECK_THROWS_AS(covnet::laminar_cost(inst, demands, {{0, 1}, {1}}),
                  covnet::SolutionError);
}

TEST_CASE("induced_routing routes groups through superset forests") {
  auto inst = make_instance(path_graph(3), {{"a", "1"}, {"b", "1"}},
                            {{{0, 1}, {"a"}}, {{0, 2}, {"a", "b"}}});
  std::vector<PacketSet> demands = {{0}, {0, 1}};
  std::vector<EdgeSet> forests = {{}, {0, 1}};
  RoutingSolution sol = covnet::induced_routing(inst, demands, forests);
  REQUIRE(sol.trees.size() == 2);
  CHECK(sol.trees[0] == EdgeSet{0, 1});  // full component of {0,1}
  CHECK(sol.trees[1] == EdgeSet{0, 1});
  CHECK(covnet::load_cost(inst, sol) ==
        covnet::laminar_cost(inst, demands, forests));
}

TEST_CASE("solver output: laminar cost equals induced load cost") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    covnet::GeneratorSpec spec;
    spec.kind = covnet::InstanceKind::kLaminar;
    spec.n = 8;
    spec.m = 12;
    spec.g = 3;
    spec.seed = seed;
    auto inst = covnet::generate_instance(spec);
    auto result = covnet::solve_laminar(inst);
    const auto& cert = result.certificate;
    Rational rewritten =
        covnet::laminar_cost(inst, cert.demand_sets, cert.forests);
    CHECK(rewritten == cert.primal);
    CHECK(covnet::load_cost(inst, result.solution) == cert.primal);
    auto induced =
        covnet::induced_routing(inst, cert.demand_sets, cert.forests);
    CHECK(covnet::load_cost(inst, induced) == cert.primal);
  }
}
