#include "covnet/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace covnet {

void OracleLimits::validate() const {
  if (max_terminals <= 0 || max_edges <= 0 || max_groups <= 0)
    throw ShapeError("oracle limits must be positive");
}

OracleLimits OracleLimits::parse(const std::string& text) {
  OracleLimits limits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("bad oracle limit token: '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("bad oracle limit value in '" + item + "'");
    }
    if (key == "e")
      limits.max_edges = value;
    else if (key == "g")
      limits.max_groups = value;
    else if (key == "k")
      limits.max_terminals = value;
    else
      throw ParseError("unknown oracle limit key: '" + key + "'");
  }
  limits.validate();
  return limits;
}

namespace {

struct DwBack {
  enum Kind { kNone, kEdge, kMerge } kind = kNone;
  int via = -1;   // kEdge: predecessor vertex; kMerge: unused
  int edge = -1;  // kEdge: graph edge index
  unsigned sub = 0;  // kMerge: one side of the split
};

struct DwTable {
  int n = 0;
  std::vector<std::vector<Rational>> cost;    // [mask][v]
  std::vector<std::vector<bool>> reached;
  std::vector<std::vector<DwBack>> back;
};

void dw_collect(const DwTable& dp, unsigned mask, int v, std::set<int>* edges) {
  const DwBack& b = dp.back[mask][v];
  switch (b.kind) {
    case DwBack::kNone:
      return;
    case DwBack::kEdge:
      edges->insert(b.edge);
      dw_collect(dp, mask, b.via, edges);
      return;
    case DwBack::kMerge:
      dw_collect(dp, b.sub, v, edges);
      dw_collect(dp, mask & ~b.sub, v, edges);
      return;
  }
}

}  // namespace

std::pair<EdgeSet, Rational> exact_steiner_tree(const Graph& graph,
                                                const std::vector<int>& terminals,
                                                const OracleLimits& limits) {
  limits.validate();
  std::vector<int> X(terminals);
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  if (static_cast<int>(X.size()) > limits.max_terminals)
    throw OracleRefused("exact_steiner_tree refused: " +
                        std::to_string(X.size()) + " terminals exceeds limit " +
                        std::to_string(limits.max_terminals));
  if (X.size() <= 1) return {EdgeSet{}, Rational(0)};

  const int n = graph.vertex_count();
  const int root = X.back();
  X.pop_back();  // dp masks range over the remaining terminals
  const int k = static_cast<int>(X.size());
  const unsigned full = (1u << k) - 1;

  DwTable dp;
  dp.n = n;
  dp.cost.assign(full + 1, std::vector<Rational>(n, Rational(0)));
  dp.reached.assign(full + 1, std::vector<bool>(n, false));
  dp.back.assign(full + 1, std::vector<DwBack>(n));

  for (unsigned mask = 1; mask <= full; ++mask) {
    // Merge step: split the terminal set at v.
    for (int v = 0; v < n; ++v) {
      for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        if (!(sub & (mask & -mask))) continue;  // canonical halves only
        unsigned rest = mask & ~sub;
        if (!rest) continue;
        if (!dp.reached[sub][v] || !dp.reached[rest][v]) continue;
        Rational cand = dp.cost[sub][v] + dp.cost[rest][v];
        if (!dp.reached[mask][v] || cand < dp.cost[mask][v]) {
          dp.reached[mask][v] = true;
          dp.cost[mask][v] = cand;
          dp.back[mask][v] = {DwBack::kMerge, -1, -1, sub};
        }
      }
    }
    // Singleton base case.
    if ((mask & (mask - 1)) == 0) {
      int i = 0;
      while (!(mask & (1u << i))) ++i;
      int t = X[i];
      if (!dp.reached[mask][t] || dp.cost[mask][t] > 0) {
        dp.reached[mask][t] = true;
        dp.cost[mask][t] = 0;
        dp.back[mask][t] = {};
      }
    }
    // Grow step: Dijkstra over vertices with dp[mask][.] as sources.
    std::vector<bool> done(n, false);
    for (;;) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (done[v] || !dp.reached[mask][v]) continue;
        if (best == -1 || dp.cost[mask][v] < dp.cost[mask][best]) best = v;
      }
      if (best == -1) break;
      done[best] = true;
      for (auto [w, idx] : graph.adjacency()[best]) {
        Rational cand = dp.cost[mask][best] + graph.edge(idx).cost;
        if (!dp.reached[mask][w] || cand < dp.cost[mask][w]) {
          dp.reached[mask][w] = true;
          dp.cost[mask][w] = cand;
          dp.back[mask][w] = {DwBack::kEdge, best, idx, 0};
        }
      }
    }
  }

  if (!dp.reached[full][root])
    throw GraphError("terminals are in different components");
  std::set<int> edges;
  dw_collect(dp, full, root, &edges);
  return {EdgeSet(edges.begin(), edges.end()), dp.cost[full][root]};
}

namespace {

// Enumerates set partitions of {0..g-1}; calls fn with block assignment.
void for_each_partition(int g, std::vector<int>& block, int next_free,
                        int index, const std::function<void(const std::vector<int>&)>& fn) {
  if (index == g) {
    fn(block);
    return;
  }
  for (int b = 0; b < next_free; ++b) {
    block[index] = b;
    for_each_partition(g, block, next_free, index + 1, fn);
  }
  block[index] = next_free;
  for_each_partition(g, block, next_free + 1, index + 1, fn);
  block[index] = -1;
}

}  // namespace

std::pair<EdgeSet, Rational> exact_steiner_forest(
    const Graph& graph, const std::vector<std::vector<int>>& groups,
    const OracleLimits& limits) {
  limits.validate();
  if (static_cast<int>(groups.size()) > limits.max_groups)
    throw OracleRefused("exact_steiner_forest refused: " +
                        std::to_string(groups.size()) + " groups exceeds limit " +
                        std::to_string(limits.max_groups));
  if (groups.empty()) return {EdgeSet{}, Rational(0)};

  bool have_best = false;
  Rational best_cost = 0;
  EdgeSet best_edges;
  std::vector<int> block(groups.size(), -1);
  for_each_partition(
      static_cast<int>(groups.size()), block, 0, 0,
      [&](const std::vector<int>& assignment) {
        int blocks = *std::max_element(assignment.begin(), assignment.end()) + 1;
        Rational total = 0;
        EdgeSet edges;
        for (int b = 0; b < blocks; ++b) {
          std::vector<int> merged;
          for (std::size_t j = 0; j < groups.size(); ++j)
            if (assignment[j] == b)
              merged.insert(merged.end(), groups[j].begin(), groups[j].end());
          auto [tree, cost] = exact_steiner_tree(graph, merged, limits);
          total += cost;
          edges = edge_set_union(edges, tree);
        }
        if (!have_best || total < best_cost) {
          have_best = true;
          best_cost = total;
          best_edges = edges;
        }
      });
  return {best_edges, best_cost};
}

namespace {

// All inclusion-minimal trees spanning the terminal set, as edge-index lists
// sorted by (cost, edge set), enumerated over subsets of the edge list.
std::vector<std::pair<EdgeSet, Rational>> minimal_steiner_trees(
    const Graph& graph, const std::vector<int>& terminals) {
  const int m = static_cast<int>(graph.edges().size());
  std::set<int> term(terminals.begin(), terminals.end());
  std::vector<std::pair<EdgeSet, Rational>> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    EdgeSet edges;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) edges.push_back(e);
    if (!is_steiner_tree(graph, edges, terminals)) continue;
    std::map<int, int> degree;
    for (int e : edges) {
      ++degree[graph.edge(e).u];
      ++degree[graph.edge(e).v];
    }
    bool minimal = true;
    for (auto [v, d] : degree)
      if (d == 1 && !term.count(v)) {
        minimal = false;
        break;
      }
    if (minimal) out.emplace_back(std::move(edges), graph.total_cost(edges));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

struct CoverageSearch {
  const Instance& instance;
  std::vector<const std::vector<std::pair<EdgeSet, Rational>>*> candidates;
  std::vector<int> chosen;
  std::vector<int> best;
  Rational best_cost = 0;
  bool have_best = false;

  // Partial load cost of the first `depth` assigned trees. Monotone in added
  // trees, so it is a valid bound for pruning.
  Rational partial_cost(int depth) const {
    const Graph& g = instance.graph();
    Rational total = 0;
    std::vector<char> in_union(instance.packet_count());
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
      std::fill(in_union.begin(), in_union.end(), 0);
      bool used = false;
      for (int j = 0; j < depth; ++j) {
        const EdgeSet& tree = (*candidates[j])[chosen[j]].first;
        if (!std::binary_search(tree.begin(), tree.end(), e)) continue;
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

  void search(int depth) {
    if (have_best && partial_cost(depth) >= best_cost) return;
    if (depth == static_cast<int>(candidates.size())) {
      Rational cost = partial_cost(depth);
      if (!have_best || cost < best_cost) {
        have_best = true;
        best_cost = cost;
        best = chosen;
      }
      return;
    }
    for (std::size_t i = 0; i < candidates[depth]->size(); ++i) {
      chosen[depth] = static_cast<int>(i);
      search(depth + 1);
    }
  }
};

}  // namespace

std::pair<RoutingSolution, Rational> exact_coverage_optimum(
    const Instance& instance, const OracleLimits& limits) {
  limits.validate();
  const int m = static_cast<int>(instance.graph().edges().size());
  if (m > limits.max_edges)
    throw OracleRefused("exact_coverage_optimum refused: " + std::to_string(m) +
                        " edges exceeds limit " + std::to_string(limits.max_edges));
  if (instance.group_count() > limits.max_groups)
    throw OracleRefused("exact_coverage_optimum refused: " +
                        std::to_string(instance.group_count()) +
                        " groups exceeds limit " + std::to_string(limits.max_groups));

  // Tree lists are memoized per distinct terminal set.
  std::map<std::vector<int>, std::vector<std::pair<EdgeSet, Rational>>> memo;
  CoverageSearch search{instance, {}, {}, {}, Rational(0), false};
  for (const auto& group : instance.groups()) {
    auto it = memo.find(group.terminals);
    if (it == memo.end()) {
      auto trees = minimal_steiner_trees(instance.graph(), group.terminals);
      if (trees.empty())
        throw GraphError("group terminals are in different components");
      it = memo.emplace(group.terminals, std::move(trees)).first;
    }
    search.candidates.push_back(&it->second);
  }
  search.chosen.assign(instance.group_count(), 0);
  search.search(0);

  RoutingSolution sol;
  for (int j = 0; j < instance.group_count(); ++j)
    sol.trees.push_back((*search.candidates[j])[search.best[j]].first);
  return {sol, search.best_cost};
}

}  // namespace covnet
