#pragma once

#include "covnet/group_spanner.hpp"

namespace covnet {

enum class BoundMode { kOracle, kRelaxed };

struct SunflowerSolution {
  SpannerResult spanner;
  std::vector<EdgeSet> trees;  // H_j, one per group, inside the spanner
  Rational cost;               // w(P) c(union H_j) + sum_j w(P_j) c(H_j)
  Rational lower_bound;
  BoundMode bound_mode = BoundMode::kRelaxed;
  int L = 1;
  // ratio certificate: cost / lower_bound <= 14 + 8L when V covers terminals
  Rational ratio_bound() const { return Rational(14 + 8 * L); }
};

// Builds the group spanner from graph and terminal sets alone, then routes
// every group through an MST-heuristic Steiner tree inside it.
// Requires sunflower demands and unit costs.
SunflowerSolution solve_sunflower(const Instance& instance,
                                  BoundMode mode = BoundMode::kRelaxed,
                                  const OracleLimits& limits = {});

// w(P) c(F*) + sum_j w(P_j) St_G(X_j), exactly in oracle mode, safe
// underestimates in relaxed mode.
Rational sunflower_lower_bound(const Instance& instance, BoundMode mode,
                               const OracleLimits& limits = {});

}  // namespace covnet
