#pragma once

#include "covnet/instance.hpp"

namespace covnet {

struct SolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One Steiner tree per group, stored as edge indices into the instance graph.
struct RoutingSolution {
  std::vector<EdgeSet> trees;
};

// Throws SolutionError when some tree is not a tree spanning its group.
void validate_solution(const Instance& instance, const RoutingSolution& sol);

// Sum over edges of c_e times the weight of the union of demand sets routed
// over the edge.
Rational load_cost(const Instance& instance, const RoutingSolution& sol);

// Laminar rewrite: sum over demand sets of w(D) * c(H_D). `forests` maps the
// distinct demand sets (as given) to edge sets. Throws SolutionError if some
// group is disconnected in the union of forests of demand supersets.
Rational laminar_cost(const Instance& instance,
                      const std::vector<PacketSet>& demand_sets,
                      const std::vector<EdgeSet>& forests);

// The routing induced by laminar forests: tree j is the full component of
// X_j in the union of H_D over D containing D_j. load_cost of this routing
// equals laminar_cost whenever the forests are pruned solver output.
RoutingSolution induced_routing(const Instance& instance,
                                const std::vector<PacketSet>& demand_sets,
                                const std::vector<EdgeSet>& forests);

}  // namespace covnet
