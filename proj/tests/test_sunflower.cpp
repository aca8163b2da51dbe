#include <doctest.h>

#include "covnet/generator.hpp"
#include "covnet/oracle.hpp"
#include "covnet/sunflower.hpp"
#include "helpers.hpp"

using covnet::BoundMode;
using covnet::EdgeSet;
using covnet::Rational;
using covtest::make_instance;
using covtest::path_graph;

TEST_CASE("two petals on a path are solved optimally") {
  auto inst = make_instance(path_graph(3),
                            {{"a", "1"}, {"b", "1"}, {"c", "1"}},
                            {{{0, 1}, {"a", "b"}}, {{1, 2}, {"a", "c"}}});
  auto sol = covnet::solve_sunflower(inst, BoundMode::kOracle);
  CHECK(sol.L == 1);
  CHECK(sol.ratio_bound() == 22);
  CHECK(sol.cost == 4);
  CHECK(sol.lower_bound == 4);  // matches the exhaustive optimum
  CHECK(covnet::exact_coverage_optimum(inst).second == 4);
  REQUIRE(sol.trees.size() == 2);
  CHECK(sol.trees[0] == EdgeSet{0});
  CHECK(sol.trees[1] == EdgeSet{1});
  covnet::validate_solution(inst, covnet::RoutingSolution{sol.trees});
}

TEST_CASE("a single group degenerates to one Steiner tree") {
  auto inst = make_instance(path_graph(3), {{"a", "2"}, {"b", "3"}},
                            {{{0, 2}, {"a", "b"}}});
  auto sol = covnet::solve_sunflower(inst, BoundMode::kOracle);
  // empty core: cost = w(D_1) * c(H_1) = 5 * 2
  CHECK(sol.cost == 10);
  CHECK(sol.lower_bound == 10);
  auto relaxed = covnet::solve_sunflower(inst, BoundMode::kRelaxed);
  CHECK(relaxed.cost == 10);
  CHECK(relaxed.lower_bound == 5);  // half the heuristic tree
}

TEST_CASE("rejects unsuitable instances") {
  auto general = make_instance(path_graph(4),
                               {{"a", "1"}, {"b", "1"}, {"c", "1"}},
                               {{{0, 1}, {"a", "b"}},
                                {{1, 2}, {"b", "c"}},
                                {{2, 3}, {"a", "c"}}});
  CHECK_THROWS_AS(covnet::solve_sunflower(general), covnet::ShapeError);
  auto weighted = make_instance(covtest::make_graph(2, {{0, 1, "2"}}),
                                {{"a", "1"}}, {{{0, 1}, {"a"}}});
  CHECK_THROWS_AS(covnet::solve_sunflower(weighted), covnet::GraphError);
}

TEST_CASE("routing ignores packet identities") {
  covnet::GeneratorSpec spec;
  spec.kind = covnet::InstanceKind::kSunflower;
  spec.n = 9;
  spec.m = 13;
  spec.g = 3;
  spec.seed = 11;
  auto inst = covnet::generate_instance(spec);

  // same graph and terminals, entirely different demand family
  std::vector<covtest::GroupSpec> renamed;
  const char* petals[] = {"x", "y", "z"};
  for (int j = 0; j < inst.group_count(); ++j)
    renamed.push_back({inst.groups()[j].terminals, {"core", petals[j]}});
  auto other = make_instance(
      covnet::Graph(inst.graph()),
      {{"core", "7"}, {"x", "1/2"}, {"y", "5"}, {"z", "1/3"}}, renamed);

  auto a = covnet::solve_sunflower(inst);
  auto b = covnet::solve_sunflower(other);
  CHECK(a.spanner.spanner == b.spanner.spanner);
  CHECK(a.trees == b.trees);
}

TEST_CASE("heavier petals only raise the cost") {
  auto base = make_instance(path_graph(4),
                            {{"a", "1"}, {"b", "1"}, {"c", "1"}},
                            {{{0, 2}, {"a", "b"}}, {{1, 3}, {"a", "c"}}});
  auto heavy = make_instance(path_graph(4),
                             {{"a", "1"}, {"b", "4"}, {"c", "1"}},
                             {{{0, 2}, {"a", "b"}}, {{1, 3}, {"a", "c"}}});
  auto s1 = covnet::solve_sunflower(base);
  auto s2 = covnet::solve_sunflower(heavy);
  CHECK(s1.trees == s2.trees);
  CHECK(s2.cost >= s1.cost);
}

TEST_CASE("random sunflower instances stay within the certified ratio") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    covnet::GeneratorSpec spec;
    spec.kind = covnet::InstanceKind::kSunflower;
    spec.n = 6 + static_cast<int>(seed % 3);
    spec.m = spec.n + 2;
    spec.g = 2 + static_cast<int>(seed % 2);
    spec.seed = 5000 + seed;
    auto inst = covnet::generate_instance(spec);

    auto relaxed = covnet::solve_sunflower(inst, BoundMode::kRelaxed);
    CHECK(relaxed.lower_bound <= relaxed.cost);

    covnet::SunflowerSolution oracle;
    try {
      oracle = covnet::solve_sunflower(inst, BoundMode::kOracle);
    } catch (const covnet::OracleRefused&) {
      continue;
    }
    CHECK(oracle.cost == relaxed.cost);
    CHECK(relaxed.lower_bound <= oracle.lower_bound);
    CHECK(oracle.lower_bound <= oracle.cost);
    CHECK(oracle.cost <= oracle.ratio_bound() * oracle.lower_bound);
    covnet::validate_solution(inst, covnet::RoutingSolution{oracle.trees});
  }
}
