#pragma once

#include "covnet/oracle.hpp"

namespace covnet {

// Uniform rewrite of a group-spanner instance: every terminal set is grown
// to the vertex set of its MST-heuristic Steiner tree and ordered so each
// terminal after the first has a graph edge back to an earlier one.
struct UniformInstance {
  std::vector<std::vector<int>> orderings;  // per group: X'_j in preorder
  // satisfying[j][i] = (x_{j,i}, earlier terminal), valid for i >= 1.
  std::vector<std::vector<std::pair<int, int>>> satisfying;
  bool full_coverage = false;  // V == union of the X'_j
};

// Requires unit costs; throws GraphError otherwise (subdivide first).
UniformInstance make_uniform(const Graph& graph,
                             const std::vector<std::vector<int>>& groups);

// Oriented arc set maintained by the balancing procedure.
struct ArcState {
  explicit ArcState(int n) : out(n), in(n), outdeg(n, 0) {}
  std::vector<std::vector<int>> out;  // out-neighbors, unordered
  std::vector<std::vector<int>> in;   // in-neighbors
  std::vector<int> outdeg;

  void add_arc(int x, int y);
  void flip_arc(int from, int to);  // arc from->to becomes to->from
  int arc_count() const;
};

// Vertices reachable from x along arc directions within `depth` steps,
// in BFS order (x first; ties within a level by vertex id).
std::vector<int> gamma(const ArcState& arcs, int x, int depth);

// log-threshold: max(1, ceil(log2 g)).
int spanner_log_threshold(int group_count);

// True iff terminal i of group j has BFS distance > 2L to its predecessors
// in the subgraph `edges`. Terminal 0 is always satisfied.
bool is_unsatisfied(const Graph& graph, const EdgeSet& edges,
                    const UniformInstance& uniform, int group, int index, int L);

// One balancing step for an unsatisfied terminal: finds the nearest z in
// Gamma(x) with out-degree at most 1 (ties by vertex id), adds the
// satisfying edge to a1 and its arc to the state, and flips the arcs on the
// x-z path when x's out-degree would exceed 2. Returns false when no such z
// exists (the terminal waits for phase 2).
bool phase1_step(const Graph& graph, ArcState& arcs,
                 const UniformInstance& uniform, int group, int index, int L,
                 EdgeSet& a1);

struct SpannerResult {
  EdgeSet mst_edges;  // T
  EdgeSet a1;
  EdgeSet a2;
  EdgeSet spanner;  // H = T u A1 u A2
  int L = 1;
  int group_count = 0;
  bool full_coverage = false;
  bool outdeg_ok = true;  // max out-degree <= 2 held after every iteration
  int girth = 0;          // undirected girth of the final arc set; 0 = acyclic
};

SpannerResult build_group_spanner(const Graph& graph,
                                  const std::vector<std::vector<int>>& groups);

struct SpannerCheck {
  std::string name;
  bool pass = false;
  bool heuristic = false;  // surrogate check, not an exact oracle comparison
  std::string detail;
};

struct SpannerReport {
  std::vector<SpannerCheck> checks;
  bool all_exact_pass() const;
};

// Size bounds exactly; stretch via Dreyfus-Wagner for groups with at most
// `oracle_limit` terminals, heuristic cost comparison beyond that.
SpannerReport certify_spanner(const SpannerResult& result, const Graph& graph,
                              const std::vector<std::vector<int>>& groups,
                              int oracle_limit = 6);

}  // namespace covnet
