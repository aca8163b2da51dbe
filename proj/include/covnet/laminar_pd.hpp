#pragma once

#include "covnet/solution.hpp"

namespace covnet {

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A positive dual variable y_{D,S}: the demand set (by family id) and the
// cut, stored as the sorted vertex set of a forest component.
struct DualVariable {
  int demand_id = -1;
  std::vector<int> cut;
  Rational value;
};

// The distinct demand sets of a laminar instance in processing order:
// increasing cardinality, ties by first appearance. Duplicate demand sets
// are merged, carrying all of their groups.
struct LaminarFamily {
  std::vector<PacketSet> sets;
  std::vector<std::vector<int>> exact_groups;     // groups with D_j == sets[d]
  std::vector<std::vector<int>> relevant_groups;  // groups with D_j contains sets[d]
};

// Throws ShapeError when the demand family is not laminar.
LaminarFamily build_family(const Instance& instance);

// Working state of one dual-ascent phase. base_load carries the accumulated
// dual load from already-processed subset phases; phase_load is this phase's
// own contribution. forest keeps F_D in order of edge addition.
struct PhaseState {
  int demand_id = -1;
  std::vector<Rational> base_load;
  std::vector<Rational> phase_load;
  std::vector<int> forest;
};

PhaseState init_phase(const Instance& instance, const LaminarFamily& family,
                      int demand_id,
                      const std::vector<std::vector<Rational>>& prior_loads);

// Components of F_D that separate some relevant terminal set, as sorted
// vertex sets ordered by smallest member.
std::vector<std::vector<int>> active_sets(const Instance& instance,
                                          const LaminarFamily& family,
                                          const PhaseState& state);

// Observer for the degree-replay invariant check; called once per inner
// iteration with the component label of every vertex and the active roots.
struct PhaseObserver {
  virtual ~PhaseObserver() = default;
  virtual void on_iteration(int demand_id, const std::vector<int>& component_of,
                            const std::vector<int>& active_roots) = 0;
};

// Runs the phase to completion: raise duals on active sets until an edge
// goes D-tight, add it to F_D, repeat until no active set remains. Dual
// feasibility is asserted after every raise. Throws InfeasibleError when a
// relevant group spans graph components.
void dual_ascent_phase(const Instance& instance, const LaminarFamily& family,
                       PhaseState& state, std::vector<DualVariable>& duals,
                       PhaseObserver* observer = nullptr);

// Reverse-delete pruning: demand sets in decreasing size (ties by id),
// edges in reverse order of addition; an edge is dropped iff every group
// with demand set exactly D stays connected without it. Returns sorted
// per-demand edge sets.
std::vector<EdgeSet> prune(const Instance& instance, const LaminarFamily& family,
                           const std::vector<std::vector<int>>& forests);

struct LaminarCertificate {
  std::vector<PacketSet> demand_sets;
  std::vector<EdgeSet> forests;  // pruned H_D, aligned with demand_sets
  std::vector<DualVariable> duals;
  Rational primal;
  Rational dual_value;
};

struct LaminarResult {
  RoutingSolution solution;
  LaminarCertificate certificate;
};

LaminarResult solve_laminar(const Instance& instance,
                            PhaseObserver* observer = nullptr);

// Exact evaluation of every dual constraint plus cut-validity of every
// positive variable. Empty result means feasible.
std::vector<std::string> check_dual_feasibility(
    const Instance& instance, const std::vector<DualVariable>& duals);

bool check_primal_feasibility(const Instance& instance,
                              const std::vector<PacketSet>& demand_sets,
                              const std::vector<EdgeSet>& forests);

// For every demand set D, the union of H_D' over supersets D' must be
// acyclic. Returns one message per violating demand set.
std::vector<std::string> check_forest_invariant(
    const Instance& instance, const LaminarCertificate& certificate);

// Replays the ascent against the final pruned forests and reports every
// non-isolated inactive component of degree exactly 1.
std::vector<std::string> check_inactive_degrees(
    const Instance& instance, const LaminarCertificate& certificate);

}  // namespace covnet
