#include "covnet/sunflower.hpp"

#include <algorithm>

namespace covnet {

namespace {

std::vector<std::vector<int>> terminal_sets(const Instance& instance) {
  std::vector<std::vector<int>> out;
  for (const auto& g : instance.groups()) out.push_back(g.terminals);
  return out;
}

}  // namespace

Rational sunflower_lower_bound(const Instance& instance, BoundMode mode,
                               const OracleLimits& limits) {
  DemandShape shape = classify_demands(instance);
  if (!shape.is_sunflower)
    throw ShapeError("demand family is not a sunflower");
  const Graph& graph = instance.graph();
  const Rational core_weight = instance.demand_weight(shape.core);

  if (mode == BoundMode::kOracle) {
    auto [forest, forest_cost] =
        exact_steiner_forest(graph, terminal_sets(instance), limits);
    Rational bound = core_weight * forest_cost;
    for (int j = 0; j < instance.group_count(); ++j) {
      auto [tree, st] =
          exact_steiner_tree(graph, instance.groups()[j].terminals, limits);
      bound += instance.demand_weight(shape.petals[j]) * st;
    }
    return bound;
  }

  // Relaxed: St_G(X_j) >= heuristic/2; forest bound from vertex coverage on
  // unit graphs, else the largest per-group Steiner lower bound.
  std::vector<Rational> st_lower(instance.group_count());
  for (int j = 0; j < instance.group_count(); ++j) {
    Rational heur = graph.total_cost(
        steiner_mst_heuristic(graph, instance.groups()[j].terminals));
    st_lower[j] = heur / 2;
  }
  std::vector<char> covered(graph.vertex_count(), 0);
  for (const auto& g : instance.groups())
    for (int t : g.terminals) covered[t] = 1;
  bool full = std::all_of(covered.begin(), covered.end(),
                          [](char c) { return c != 0; });
  Rational forest_lower = 0;
  if (full && graph.unit_costs()) {
    forest_lower = Rational(graph.vertex_count()) / 2;
  } else {
    for (const auto& lb : st_lower) forest_lower = std::max(forest_lower, lb);
  }
  Rational bound = core_weight * forest_lower;
  for (int j = 0; j < instance.group_count(); ++j)
    bound += instance.demand_weight(shape.petals[j]) * st_lower[j];
  return bound;
}

SunflowerSolution solve_sunflower(const Instance& instance, BoundMode mode,
                                  const OracleLimits& limits) {
  DemandShape shape = classify_demands(instance);
  if (!shape.is_sunflower)
    throw ShapeError("demand family is not a sunflower");
  const Graph& graph = instance.graph();
  if (!graph.unit_costs())
    throw GraphError(
        "sunflower solver requires unit costs; run subdivide_edges first");

  SunflowerSolution sol;
  sol.spanner = build_group_spanner(graph, terminal_sets(instance));
  sol.L = sol.spanner.L;
  sol.bound_mode = mode;

  std::vector<Edge> sub_edges;
  for (int e : sol.spanner.spanner)
    sub_edges.push_back({graph.edge(e).u, graph.edge(e).v, graph.edge(e).cost});
  Graph spanner_graph(graph.vertex_count(), std::move(sub_edges));

  EdgeSet union_edges;
  for (int j = 0; j < instance.group_count(); ++j) {
    EdgeSet tree_in_h =
        steiner_mst_heuristic(spanner_graph, instance.groups()[j].terminals);
    EdgeSet tree;
    for (int e : tree_in_h) {
      auto idx = graph.edge_index(spanner_graph.edge(e).u, spanner_graph.edge(e).v);
      tree.push_back(*idx);
    }
    std::sort(tree.begin(), tree.end());
    union_edges = edge_set_union(union_edges, tree);
    sol.trees.push_back(std::move(tree));
  }

  // Common packets ride only on the union of the trees, which is the H of
  // the cost rewrite; petals pay for their own trees.
  sol.cost = instance.demand_weight(shape.core) * graph.total_cost(union_edges);
  for (int j = 0; j < instance.group_count(); ++j)
    sol.cost += instance.demand_weight(shape.petals[j]) *
                graph.total_cost(sol.trees[j]);

  sol.lower_bound = sunflower_lower_bound(instance, mode, limits);
  return sol;
}

}  // namespace covnet
