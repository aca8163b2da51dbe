#include "covnet/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace covnet {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  std::map<std::pair<int, int>, Rational> best;
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw GraphError("edge endpoint out of range: (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ")");
    }
    if (e.cost < 0) throw GraphError("negative edge cost");
    auto key = std::minmax(e.u, e.v);
    auto it = best.find(key);
    if (it == best.end() || e.cost < it->second) best[key] = e.cost;
  }
  edges_.reserve(best.size());
  for (auto& [key, cost] : best) edges_.push_back({key.first, key.second, cost});
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  adj_.assign(vertex_count_, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj_[edges_[i].u].emplace_back(edges_[i].v, i);
    adj_[edges_[i].v].emplace_back(edges_[i].u, i);
  }
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || u >= vertex_count_) return std::nullopt;
  for (auto [w, idx] : adj_[u])
    if (w == v) return idx;
  return std::nullopt;
}

bool Graph::unit_costs() const {
  for (const auto& e : edges_)
    if (e.cost != 1) return false;
  return true;
}

Rational Graph::total_cost(const EdgeSet& edge_set) const {
  Rational sum = 0;
  for (int idx : edge_set) sum += edges_[idx].cost;
  return sum;
}

int UnionFind::find(int x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

EdgeSet mst(const Graph& graph) {
  UnionFind uf(graph.vertex_count());
  EdgeSet tree;
  for (int i = 0; i < static_cast<int>(graph.edges().size()); ++i) {
    const Edge& e = graph.edge(i);
    if (uf.unite(e.u, e.v)) tree.push_back(i);
  }
  if (graph.vertex_count() > 0 && uf.components() > 1) {
    int root = uf.find(0);
    std::ostringstream msg;
    msg << "graph is disconnected; separated component {";
    bool first = true;
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (uf.find(v) == root) {
        msg << (first ? "" : ",") << v;
        first = false;
      }
    }
    msg << "}";
    throw GraphError(msg.str());
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

ShortestPaths dijkstra(const Graph& graph, int source) {
  const int n = graph.vertex_count();
  ShortestPaths sp;
  sp.dist.assign(n, Rational(0));
  sp.reached.assign(n, false);
  sp.parent_edge.assign(n, -1);
  sp.parent_vertex.assign(n, -1);
  std::vector<bool> finalized(n, false);
  sp.reached[source] = true;
  for (;;) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!sp.reached[v] || finalized[v]) continue;
      if (best == -1 || sp.dist[v] < sp.dist[best]) best = v;
    }
    if (best == -1) break;
    finalized[best] = true;
    for (auto [w, idx] : graph.adjacency()[best]) {
      Rational cand = sp.dist[best] + graph.edge(idx).cost;
      if (!sp.reached[w] || cand < sp.dist[w]) {
        sp.reached[w] = true;
        sp.dist[w] = cand;
        sp.parent_edge[w] = idx;
        sp.parent_vertex[w] = best;
      }
    }
  }
  return sp;
}

EdgeSet prune_leaves(const Graph& graph, EdgeSet edge_set,
                     const std::vector<int>& terminals) {
  std::set<int> keep(terminals.begin(), terminals.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> degree;
    for (int idx : edge_set) {
      ++degree[graph.edge(idx).u];
      ++degree[graph.edge(idx).v];
    }
    EdgeSet next;
    for (int idx : edge_set) {
      const Edge& e = graph.edge(idx);
      bool drop = (degree[e.u] == 1 && !keep.count(e.u)) ||
                  (degree[e.v] == 1 && !keep.count(e.v));
      if (drop)
        changed = true;
      else
        next.push_back(idx);
    }
    edge_set = std::move(next);
  }
  return edge_set;
}

EdgeSet steiner_mst_heuristic(const Graph& graph,
                              const std::vector<int>& terminals) {
  if (terminals.size() <= 1) return {};
  std::vector<int> X(terminals);
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());

  std::vector<ShortestPaths> sp;
  sp.reserve(X.size());
  for (int t : X) sp.push_back(dijkstra(graph, t));
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      if (!sp[i].reached[X[j]])
        throw GraphError("terminals " + std::to_string(X[i]) + " and " +
                         std::to_string(X[j]) + " are in different components");

  // Kruskal on the metric closure, tie-break by terminal indices.
  struct ClosureEdge {
    Rational cost;
    int i, j;
  };
  std::vector<ClosureEdge> closure;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      closure.push_back({sp[i].dist[X[j]], static_cast<int>(i), static_cast<int>(j)});
  std::sort(closure.begin(), closure.end(),
            [](const ClosureEdge& a, const ClosureEdge& b) {
              if (a.cost != b.cost) return a.cost < b.cost;
              if (a.i != b.i) return a.i < b.i;
              return a.j < b.j;
            });
  UnionFind uf(static_cast<int>(X.size()));
  std::set<int> used;
  for (const auto& ce : closure) {
    if (!uf.unite(ce.i, ce.j)) continue;
    // Expand the closure edge to the shortest path from X[i].
    int v = X[ce.j];
    while (v != X[ce.i]) {
      used.insert(sp[ce.i].parent_edge[v]);
      v = sp[ce.i].parent_vertex[v];
    }
  }

  // Expanded paths may overlap; take an MST of the expanded subgraph and
  // strip leaves that are not terminals.
  UnionFind sub_uf(graph.vertex_count());
  EdgeSet tree;
  for (int idx = 0; idx < static_cast<int>(graph.edges().size()); ++idx) {
    if (!used.count(idx)) continue;
    if (sub_uf.unite(graph.edge(idx).u, graph.edge(idx).v)) tree.push_back(idx);
  }
  return prune_leaves(graph, tree, X);
}

Graph subdivide_edges(const Graph& graph) {
  for (const auto& e : graph.edges()) {
    if (!is_integer(e.cost) || e.cost <= 0)
      throw GraphError(
          "subdivide_edges requires positive integer costs; scale the "
          "instance first (offending cost " +
          rational_to_string(e.cost) + ")");
  }
  int next = graph.vertex_count();
  std::vector<Edge> out;
  for (const auto& e : graph.edges()) {
    long long c = static_cast<long long>(boost::multiprecision::numerator(e.cost));
    int prev = e.u;
    for (long long k = 1; k < c; ++k) {
      out.push_back({prev, next, Rational(1)});
      prev = next++;
    }
    out.push_back({prev, e.v, Rational(1)});
  }
  return Graph(next, std::move(out));
}

std::vector<int> component_labels(const Graph& graph, const EdgeSet& edge_set) {
  UnionFind uf(graph.vertex_count());
  for (int idx : edge_set) uf.unite(graph.edge(idx).u, graph.edge(idx).v);
  std::vector<int> label(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) label[v] = uf.find(v);
  return label;
}

bool connects(const Graph& graph, const EdgeSet& edge_set,
              const std::vector<int>& vertices) {
  if (vertices.size() <= 1) return true;
  UnionFind uf(graph.vertex_count());
  for (int idx : edge_set) uf.unite(graph.edge(idx).u, graph.edge(idx).v);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (!uf.same(vertices[0], vertices[i])) return false;
  return true;
}

bool is_forest(const Graph& graph, const EdgeSet& edge_set) {
  UnionFind uf(graph.vertex_count());
  for (int idx : edge_set)
    if (!uf.unite(graph.edge(idx).u, graph.edge(idx).v)) return false;
  return true;
}

bool is_steiner_tree(const Graph& graph, const EdgeSet& edge_set,
                     const std::vector<int>& terminals) {
  if (edge_set.empty()) return terminals.size() <= 1;
  std::set<int> touched;
  UnionFind uf(graph.vertex_count());
  for (int idx : edge_set) {
    touched.insert(graph.edge(idx).u);
    touched.insert(graph.edge(idx).v);
    if (!uf.unite(graph.edge(idx).u, graph.edge(idx).v)) return false;
  }
  if (edge_set.size() != touched.size() - 1) return false;
  int root = uf.find(*touched.begin());
  for (int v : touched)
    if (uf.find(v) != root) return false;
  for (int t : terminals)
    if (!touched.count(t)) return false;
  return true;
}

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace covnet
