#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "covnet/instance.hpp"

namespace covtest {

using covnet::Graph;
using covnet::Instance;
using covnet::Rational;

struct EdgeSpec {
  int u;
  int v;
  std::string cost = "1";
};

inline Graph make_graph(int n, const std::vector<EdgeSpec>& edges) {
  std::vector<covnet::Edge> es;
  for (const auto& e : edges)
    es.push_back({e.u, e.v, covnet::parse_rational(e.cost)});
  return Graph(n, std::move(es));
}

inline Graph path_graph(int n) {
  std::vector<EdgeSpec> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return make_graph(n, es);
}

inline Graph cycle_graph(int n) {
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return make_graph(n, es);
}

struct GroupSpec {
  std::vector<int> terminals;
  std::vector<std::string> demand;
};

inline Instance make_instance(
    Graph graph, const std::vector<std::pair<std::string, std::string>>& packets,
    const std::vector<GroupSpec>& group_specs) {
  std::vector<std::string> names;
  std::vector<Rational> weights;
  std::map<std::string, int> intern;
  for (const auto& [name, weight] : packets) {
    intern[name] = static_cast<int>(names.size());
    names.push_back(name);
    weights.push_back(covnet::parse_rational(weight));
  }
  std::vector<covnet::Group> groups;
  for (const auto& spec : group_specs) {
    covnet::Group g;
    g.terminals = spec.terminals;
    for (const auto& pid : spec.demand) g.demand.push_back(intern.at(pid));
    groups.push_back(std::move(g));
  }
  return Instance(std::move(graph), std::move(names), std::move(weights),
                  std::move(groups));
}

}  // namespace covtest
