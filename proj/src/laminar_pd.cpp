#include "covnet/laminar_pd.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace covnet {

LaminarFamily build_family(const Instance& instance) {
  DemandShape shape = classify_demands(instance);
  if (!shape.is_laminar)
    throw ShapeError("demand family is not laminar");

  LaminarFamily family;
  std::map<PacketSet, int> index;
  std::vector<int> order;
  for (int j = 0; j < instance.group_count(); ++j) {
    const PacketSet& d = instance.groups()[j].demand;
    auto it = index.find(d);
    if (it == index.end()) {
      it = index.emplace(d, static_cast<int>(family.sets.size())).first;
      family.sets.push_back(d);
      family.exact_groups.emplace_back();
    }
    family.exact_groups[it->second].push_back(j);
  }
  // Processing order: increasing cardinality, ties by first appearance.
  std::vector<int> perm(family.sets.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return family.sets[a].size() < family.sets[b].size();
  });
  LaminarFamily ordered;
  for (int i : perm) {
    ordered.sets.push_back(family.sets[i]);
    ordered.exact_groups.push_back(family.exact_groups[i]);
  }
  ordered.relevant_groups.resize(ordered.sets.size());
  for (std::size_t d = 0; d < ordered.sets.size(); ++d)
    for (int j = 0; j < instance.group_count(); ++j)
      if (packet_subset(ordered.sets[d], instance.groups()[j].demand))
        ordered.relevant_groups[d].push_back(j);
  return ordered;
}

PhaseState init_phase(const Instance& instance, const LaminarFamily& family,
                      int demand_id,
                      const std::vector<std::vector<Rational>>& prior_loads) {
  const int m = static_cast<int>(instance.graph().edges().size());
  PhaseState state;
  state.demand_id = demand_id;
  state.base_load.assign(m, Rational(0));
  state.phase_load.assign(m, Rational(0));
  for (std::size_t d = 0; d < family.sets.size(); ++d) {
    if (static_cast<int>(d) == demand_id) continue;
    if (prior_loads[d].empty()) continue;
    if (!packet_subset(family.sets[d], family.sets[demand_id])) continue;
    for (int e = 0; e < m; ++e) state.base_load[e] += prior_loads[d][e];
  }
  return state;
}

namespace {

UnionFind forest_components(const Instance& instance, const PhaseState& state) {
  UnionFind uf(instance.graph().vertex_count());
  for (int e : state.forest)
    uf.unite(instance.graph().edge(e).u, instance.graph().edge(e).v);
  return uf;
}

// Roots of components that separate some relevant terminal set.
std::set<int> active_roots(const Instance& instance, const LaminarFamily& family,
                           const PhaseState& state, const UnionFind& uf) {
  std::set<int> roots;
  for (int j : family.relevant_groups[state.demand_id]) {
    const auto& X = instance.groups()[j].terminals;
    std::map<int, int> count;
    for (int t : X) ++count[uf.find(t)];
    for (auto [root, c] : count)
      if (c < static_cast<int>(X.size())) roots.insert(root);
  }
  return roots;
}

std::vector<int> component_vertices(const Instance& instance,
                                    const UnionFind& uf, int root) {
  std::vector<int> out;
  for (int v = 0; v < instance.graph().vertex_count(); ++v)
    if (uf.find(v) == root) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::vector<int>> active_sets(const Instance& instance,
                                          const LaminarFamily& family,
                                          const PhaseState& state) {
  UnionFind uf = forest_components(instance, state);
  std::vector<std::vector<int>> out;
  for (int root : active_roots(instance, family, state, uf))
    out.push_back(component_vertices(instance, uf, root));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

void dual_ascent_phase(const Instance& instance, const LaminarFamily& family,
                       PhaseState& state, std::vector<DualVariable>& duals,
                       PhaseObserver* observer) {
  const Graph& graph = instance.graph();
  const Rational weight = instance.demand_weight(family.sets[state.demand_id]);
  UnionFind uf = forest_components(instance, state);
  std::map<std::vector<int>, Rational> raised;

  for (;;) {
    std::set<int> active = active_roots(instance, family, state, uf);
    if (active.empty()) break;

    if (observer) {
      std::vector<int> label(graph.vertex_count());
      for (int v = 0; v < graph.vertex_count(); ++v) label[v] = uf.find(v);
      observer->on_iteration(state.demand_id, label,
                             std::vector<int>(active.begin(), active.end()));
    }

    // Smallest Delta over edges crossing at least one active component;
    // ties resolve to the earliest edge in canonical order.
    int tight_edge = -1;
    Rational best_delta = 0;
    for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) {
      int ru = uf.find(graph.edge(e).u);
      int rv = uf.find(graph.edge(e).v);
      if (ru == rv) continue;
      int rate = (active.count(ru) ? 1 : 0) + (active.count(rv) ? 1 : 0);
      if (rate == 0) continue;
      Rational slack = weight * graph.edge(e).cost - state.base_load[e] -
                       state.phase_load[e];
      assert(slack >= 0);
      Rational delta = slack / rate;
      if (tight_edge == -1 || delta < best_delta) {
        tight_edge = e;
        best_delta = delta;
      }
    }
    if (tight_edge == -1)
      throw InfeasibleError(
          "instance infeasible: a terminal set with demand containing demand "
          "set " +
          std::to_string(state.demand_id) + " spans graph components");

    for (int root : active) {
      raised[component_vertices(instance, uf, root)] += best_delta;
    }
    for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) {
      int ru = uf.find(graph.edge(e).u);
      int rv = uf.find(graph.edge(e).v);
      if (ru == rv) continue;
      int rate = (active.count(ru) ? 1 : 0) + (active.count(rv) ? 1 : 0);
      if (rate == 0) continue;
      state.phase_load[e] += best_delta * rate;
      // Dual feasibility after every raise, exactly.
      assert(state.base_load[e] + state.phase_load[e] <=
             weight * graph.edge(e).cost);
    }
    state.forest.push_back(tight_edge);
    uf.unite(graph.edge(tight_edge).u, graph.edge(tight_edge).v);
  }

  for (auto& [cut, value] : raised)
    if (value > 0) duals.push_back({state.demand_id, cut, value});
}

std::vector<EdgeSet> prune(const Instance& instance, const LaminarFamily& family,
                           const std::vector<std::vector<int>>& forests) {
  const int k = static_cast<int>(family.sets.size());
  std::vector<std::vector<int>> pruned(forests);  // in addition order

  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return family.sets[a].size() > family.sets[b].size();
  });

  for (int d : order) {
    EdgeSet superset_union;
    for (int d2 = 0; d2 < k; ++d2) {
      if (d2 == d || family.sets[d2].size() < family.sets[d].size()) continue;
      if (family.sets[d2] == family.sets[d]) continue;
      if (!packet_subset(family.sets[d], family.sets[d2])) continue;
      EdgeSet sorted(pruned[d2]);
      std::sort(sorted.begin(), sorted.end());
      superset_union = edge_set_union(superset_union, sorted);
    }
    for (int pos = static_cast<int>(pruned[d].size()) - 1; pos >= 0; --pos) {
      int e = pruned[d][pos];
      EdgeSet candidate(superset_union);
      for (int other : pruned[d])
        if (other != e) candidate.push_back(other);
      std::sort(candidate.begin(), candidate.end());
      candidate.erase(std::unique(candidate.begin(), candidate.end()),
                      candidate.end());
      bool removable = true;
      for (int j : family.exact_groups[d]) {
        if (!connects(instance.graph(), candidate,
                      instance.groups()[j].terminals)) {
          removable = false;
          break;
        }
      }
      if (removable) pruned[d].erase(pruned[d].begin() + pos);
    }
  }

  std::vector<EdgeSet> out(pruned.begin(), pruned.end());
  for (auto& h : out) std::sort(h.begin(), h.end());
  return out;
}

LaminarResult solve_laminar(const Instance& instance, PhaseObserver* observer) {
  LaminarFamily family = build_family(instance);
  const int k = static_cast<int>(family.sets.size());

  std::vector<std::vector<Rational>> loads(k);
  std::vector<std::vector<int>> forests(k);
  std::vector<DualVariable> duals;
  for (int d = 0; d < k; ++d) {
    PhaseState state = init_phase(instance, family, d, loads);
    dual_ascent_phase(instance, family, state, duals, observer);
    loads[d] = std::move(state.phase_load);
    forests[d] = std::move(state.forest);
  }

  LaminarCertificate cert;
  cert.demand_sets = family.sets;
  cert.forests = prune(instance, family, forests);
  cert.duals = std::move(duals);
  cert.primal = laminar_cost(instance, cert.demand_sets, cert.forests);
  cert.dual_value = 0;
  for (const auto& y : cert.duals) cert.dual_value += y.value;

  // Trees: the component of each group in its forest union, with leaves not
  // needed for the terminals stripped.
  RoutingSolution sol = induced_routing(instance, cert.demand_sets, cert.forests);
  for (std::size_t j = 0; j < sol.trees.size(); ++j)
    sol.trees[j] = prune_leaves(instance.graph(), sol.trees[j],
                                instance.groups()[j].terminals);
  return {std::move(sol), std::move(cert)};
}

std::vector<std::string> check_dual_feasibility(
    const Instance& instance, const std::vector<DualVariable>& duals) {
  LaminarFamily family = build_family(instance);
  const Graph& graph = instance.graph();
  std::vector<std::string> violations;

  auto crosses = [&](const std::vector<int>& cut, int e) {
    bool u_in = std::binary_search(cut.begin(), cut.end(), graph.edge(e).u);
    bool v_in = std::binary_search(cut.begin(), cut.end(), graph.edge(e).v);
    return u_in != v_in;
  };

  for (const auto& y : duals) {
    if (y.value <= 0) {
      violations.push_back("non-positive stored dual for demand " +
                           std::to_string(y.demand_id));
      continue;
    }
    if (y.demand_id < 0 || y.demand_id >= static_cast<int>(family.sets.size())) {
      violations.push_back("dual references unknown demand id " +
                           std::to_string(y.demand_id));
      continue;
    }
    bool separates = false;
    for (int j : family.relevant_groups[y.demand_id]) {
      const auto& X = instance.groups()[j].terminals;
      std::size_t inside = 0;
      for (int t : X)
        if (std::binary_search(y.cut.begin(), y.cut.end(), t)) ++inside;
      if (inside > 0 && inside < X.size()) {
        separates = true;
        break;
      }
    }
    if (!separates)
      violations.push_back("cut for demand " + std::to_string(y.demand_id) +
                           " separates no relevant terminal set");
  }

  for (std::size_t d = 0; d < family.sets.size(); ++d) {
    Rational weight = instance.demand_weight(family.sets[d]);
    for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) {
      Rational lhs = 0;
      for (const auto& y : duals) {
        if (!packet_subset(family.sets[y.demand_id], family.sets[d])) continue;
        if (crosses(y.cut, e)) lhs += y.value;
      }
      if (lhs > weight * graph.edge(e).cost) {
        std::ostringstream msg;
        msg << "dual constraint violated at edge (" << graph.edge(e).u << ","
            << graph.edge(e).v << ") demand " << d << ": "
            << rational_to_string(lhs) << " > "
            << rational_to_string(weight * graph.edge(e).cost);
        violations.push_back(msg.str());
      }
    }
  }
  return violations;
}

bool check_primal_feasibility(const Instance& instance,
                              const std::vector<PacketSet>& demand_sets,
                              const std::vector<EdgeSet>& forests) {
  for (const auto& group : instance.groups()) {
    EdgeSet avail;
    for (std::size_t d = 0; d < demand_sets.size(); ++d)
      if (packet_subset(group.demand, demand_sets[d]))
        avail = edge_set_union(avail, forests[d]);
    if (!connects(instance.graph(), avail, group.terminals)) return false;
  }
  return true;
}

std::vector<std::string> check_forest_invariant(
    const Instance& instance, const LaminarCertificate& certificate) {
  std::vector<std::string> violations;
  for (std::size_t d = 0; d < certificate.demand_sets.size(); ++d) {
    EdgeSet u;
    for (std::size_t d2 = 0; d2 < certificate.demand_sets.size(); ++d2)
      if (packet_subset(certificate.demand_sets[d], certificate.demand_sets[d2]))
        u = edge_set_union(u, certificate.forests[d2]);
    if (!is_forest(instance.graph(), u))
      violations.push_back("superset forest union for demand set " +
                           std::to_string(d) + " contains a cycle");
  }
  return violations;
}

namespace {

class DegreeReplay : public PhaseObserver {
 public:
  DegreeReplay(const Instance& instance, const LaminarCertificate& cert)
      : instance_(instance), cert_(cert) {}

  void on_iteration(int demand_id, const std::vector<int>& component_of,
                    const std::vector<int>& active_roots) override {
    // Union of final pruned forests over supersets of this demand set.
    EdgeSet h_union;
    for (std::size_t d = 0; d < cert_.demand_sets.size(); ++d)
      if (packet_subset(cert_.demand_sets[demand_id], cert_.demand_sets[d]))
        h_union = edge_set_union(h_union, cert_.forests[d]);

    std::map<int, int> degree;
    for (int e : h_union) {
      int ru = component_of[instance_.graph().edge(e).u];
      int rv = component_of[instance_.graph().edge(e).v];
      if (ru == rv) continue;
      ++degree[ru];
      ++degree[rv];
    }
    std::set<int> active(active_roots.begin(), active_roots.end());
    for (auto [root, deg] : degree) {
      if (active.count(root)) continue;
      if (deg == 1)
        violations.push_back("inactive component rooted at " +
                             std::to_string(root) + " has degree 1 in phase " +
                             std::to_string(demand_id));
    }
  }

  std::vector<std::string> violations;

 private:
  const Instance& instance_;
  const LaminarCertificate& cert_;
};

}  // namespace

std::vector<std::string> check_inactive_degrees(
    const Instance& instance, const LaminarCertificate& certificate) {
  DegreeReplay replay(instance, certificate);
  solve_laminar(instance, &replay);
  return replay.violations;
}

}  // namespace covnet
