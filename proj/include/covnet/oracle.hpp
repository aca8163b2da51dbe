#pragma once

#include "covnet/solution.hpp"

namespace covnet {

struct OracleRefused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  int max_terminals = 10;  // Dreyfus-Wagner terminal cap per group
  int max_edges = 14;      // exhaustive coverage enumeration cap
  int max_groups = 3;      // group cap for enumeration

  void validate() const;
  // Parses "e=14,g=3,k=10" (any subset of keys, any order).
  static OracleLimits parse(const std::string& text);
};

// Exact Steiner tree via the Dreyfus-Wagner dynamic program. Exponential in
// |X| only; refuses |X| beyond limits.max_terminals.
std::pair<EdgeSet, Rational> exact_steiner_tree(const Graph& graph,
                                                const std::vector<int>& terminals,
                                                const OracleLimits& limits = {});

// Exact Steiner forest: minimum over partitions of the groups of the sum of
// exact Steiner trees for each block's merged terminals.
std::pair<EdgeSet, Rational> exact_steiner_forest(
    const Graph& graph, const std::vector<std::vector<int>>& groups,
    const OracleLimits& limits = {});

// Exhaustive coverage-cost optimum: every group is assigned one of its
// inclusion-minimal Steiner trees; the assignment minimizing load_cost wins.
std::pair<RoutingSolution, Rational> exact_coverage_optimum(
    const Instance& instance, const OracleLimits& limits = {});

}  // namespace covnet
