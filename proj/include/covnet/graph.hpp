#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "covnet/rational.hpp"

namespace covnet {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;  // u < v after normalization
  int v = 0;
  Rational cost;
};

// An edge set is a sorted list of indices into Graph::edges().
using EdgeSet = std::vector<int>;

// Undirected graph with nonnegative exact-rational edge costs. Construction
// normalizes endpoints to u < v, rejects self-loops, collapses parallel edges
// to the minimum-cost representative, and sorts edges by (cost, u, v). That
// sorted order is the canonical tie-break order used everywhere.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int idx) const { return edges_[idx]; }

  // (neighbor, edge index) lists per vertex, neighbors in edge order.
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const {
    return adj_;
  }

  // Index of edge {u,v}, or nullopt if absent.
  std::optional<int> edge_index(int u, int v) const;

  bool unit_costs() const;
  Rational total_cost(const EdgeSet& edge_set) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0), components_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) const;
  bool unite(int a, int b);
  bool same(int a, int b) const { return find(a) == find(b); }
  int components() const { return components_; }

 private:
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

// Kruskal MST under the canonical edge order. Throws GraphError on a
// disconnected graph, naming one separated component.
EdgeSet mst(const Graph& graph);

struct ShortestPaths {
  std::vector<Rational> dist;
  std::vector<bool> reached;
  std::vector<int> parent_edge;  // -1 at source / unreached
  std::vector<int> parent_vertex;
};

ShortestPaths dijkstra(const Graph& graph, int source);

// MST heuristic for Steiner trees: MST of the metric closure over X, closure
// edges expanded to shortest paths, cycles pruned, non-terminal leaves
// removed. Cost is at most twice the optimum. Throws if X is split across
// components.
EdgeSet steiner_mst_heuristic(const Graph& graph, const std::vector<int>& terminals);

// Replaces each edge of integer cost c by a path of c unit edges through
// fresh vertices. Original vertex ids are preserved. Throws on non-integer
// or non-positive costs.
Graph subdivide_edges(const Graph& graph);

// Component label per vertex for the subgraph restricted to edge_set.
std::vector<int> component_labels(const Graph& graph, const EdgeSet& edge_set);

// True iff all given vertices lie in one component of edge_set.
bool connects(const Graph& graph, const EdgeSet& edge_set,
              const std::vector<int>& vertices);

// True iff edge_set is acyclic.
bool is_forest(const Graph& graph, const EdgeSet& edge_set);

// True iff edge_set is a tree spanning exactly the vertices it touches and
// containing all terminals (a lone terminal with no edges counts when
// terminals has size <= 1).
bool is_steiner_tree(const Graph& graph, const EdgeSet& edge_set,
                     const std::vector<int>& terminals);

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b);

// Repeatedly removes degree-1 vertices outside `keep`.
EdgeSet prune_leaves(const Graph& graph, EdgeSet edge_set,
                     const std::vector<int>& keep);

}  // namespace covnet
