#include "covnet/solution.hpp"

#include <algorithm>
#include <set>

namespace covnet {

void validate_solution(const Instance& instance, const RoutingSolution& sol) {
  if (sol.trees.size() != instance.groups().size())
    throw SolutionError("solution has wrong number of trees");
  for (std::size_t j = 0; j < sol.trees.size(); ++j) {
    if (!is_steiner_tree(instance.graph(), sol.trees[j],
                         instance.groups()[j].terminals))
      throw SolutionError("tree " + std::to_string(j) +
                          " is not a tree spanning its terminal set");
  }
}

Rational load_cost(const Instance& instance, const RoutingSolution& sol) {
  validate_solution(instance, sol);
  const Graph& g = instance.graph();
  Rational total = 0;
  std::vector<char> in_union(instance.packet_count());
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    std::fill(in_union.begin(), in_union.end(), 0);
    bool used = false;
    for (std::size_t j = 0; j < sol.trees.size(); ++j) {
      if (!std::binary_search(sol.trees[j].begin(), sol.trees[j].end(), e))
        continue;
      used = true;
      for (int p : instance.groups()[j].demand) in_union[p] = 1;
    }
    if (!used) continue;
    Rational load = 0;
    for (int p = 0; p < instance.packet_count(); ++p)
      if (in_union[p]) load += instance.packet_weights()[p];
    total += g.edge(e).cost * load;
  }
  return total;
}

namespace {

// Union of H_D over demand sets D that contain the given demand.
EdgeSet superset_forest_union(const std::vector<PacketSet>& demand_sets,
                              const std::vector<EdgeSet>& forests,
                              const PacketSet& demand) {
  EdgeSet out;
  for (std::size_t d = 0; d < demand_sets.size(); ++d)
    if (packet_subset(demand, demand_sets[d]))
      out = edge_set_union(out, forests[d]);
  return out;
}

}  // namespace

Rational laminar_cost(const Instance& instance,
                      const std::vector<PacketSet>& demand_sets,
                      const std::vector<EdgeSet>& forests) {
  if (demand_sets.size() != forests.size())
    throw SolutionError("demand set / forest count mismatch");
  for (std::size_t j = 0; j < instance.groups().size(); ++j) {
    EdgeSet avail = superset_forest_union(demand_sets, forests,
                                          instance.groups()[j].demand);
    if (!connects(instance.graph(), avail, instance.groups()[j].terminals))
      throw SolutionError("group " + std::to_string(j) +
                          " is disconnected in its forest union");
  }
  Rational total = 0;
  for (std::size_t d = 0; d < demand_sets.size(); ++d)
    total += instance.demand_weight(demand_sets[d]) *
             instance.graph().total_cost(forests[d]);
  return total;
}

RoutingSolution induced_routing(const Instance& instance,
                                const std::vector<PacketSet>& demand_sets,
                                const std::vector<EdgeSet>& forests) {
  RoutingSolution sol;
  for (const auto& group : instance.groups()) {
    EdgeSet avail = superset_forest_union(demand_sets, forests, group.demand);
    auto labels = component_labels(instance.graph(), avail);
    int comp = labels[group.terminals[0]];
    EdgeSet tree;
    for (int idx : avail)
      if (labels[instance.graph().edge(idx).u] == comp) tree.push_back(idx);
    sol.trees.push_back(std::move(tree));
  }
  return sol;
}

}  // namespace covnet
