#include "covnet/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>

namespace covnet {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected rational string or integer, got " + j.dump());
}

Json edge_pairs(const Graph& graph, const EdgeSet& edges) {
  Json out = Json::array();
  for (int e : edges)
    out.push_back(Json::array({graph.edge(e).u, graph.edge(e).v}));
  return out;
}

EdgeSet edge_pairs_parse(const Graph& graph, const Json& j,
                         const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of [u,v]");
  EdgeSet out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(what + ": expected [u,v], got " + pair.dump());
    auto idx = graph.edge_index(pair[0].get<int>(), pair[1].get<int>());
    if (!idx)
      throw ParseError(what + ": edge (" + pair[0].dump() + "," + pair[1].dump() +
                       ") is not in the graph");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json graph;
  graph["n"] = instance.graph().vertex_count();
  Json edges = Json::array();
  for (const auto& e : instance.graph().edges())
    edges.push_back(Json::array({e.u, e.v, rational_to_string(e.cost)}));
  graph["edges"] = edges;

  Json packets = Json::object();
  for (int p = 0; p < instance.packet_count(); ++p)
    packets[instance.packet_names()[p]] =
        rational_to_string(instance.packet_weights()[p]);

  Json groups = Json::array();
  for (const auto& g : instance.groups()) {
    std::vector<std::string> names;
    for (int p : g.demand) names.push_back(instance.packet_names()[p]);
    std::sort(names.begin(), names.end());  // independent of intern order
    groups.push_back(Json{{"terminals", g.terminals}, {"demand", names}});
  }
  return Json{{"graph", graph}, {"packets", packets}, {"groups", groups}};
}

Instance instance_from_json(const Json& j) {
  try {
    const Json& jg = j.at("graph");
    int n = jg.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& je : jg.at("edges")) {
      if (!je.is_array() || je.size() != 3)
        throw ParseError("graph.edges entries must be [u, v, cost]");
      edges.push_back({je[0].get<int>(), je[1].get<int>(),
                       rational_from_json(je[2])});
    }
    Graph graph(n, std::move(edges));

    std::vector<std::string> names;
    std::vector<Rational> weights;
    std::map<std::string, int> intern;
    auto intern_packet = [&](const std::string& pid) {
      auto it = intern.find(pid);
      if (it != intern.end()) return it->second;
      int idx = static_cast<int>(names.size());
      intern.emplace(pid, idx);
      names.push_back(pid);
      weights.push_back(Rational(1));
      return idx;
    };
    if (j.contains("packets"))
      for (const auto& [pid, w] : j.at("packets").items())
        weights[intern_packet(pid)] = rational_from_json(w);

    std::vector<Group> groups;
    for (const auto& jgr : j.at("groups")) {
      Group group;
      for (const auto& t : jgr.at("terminals"))
        group.terminals.push_back(t.get<int>());
      for (const auto& pid : jgr.at("demand"))
        group.demand.push_back(intern_packet(pid.get<std::string>()));
      groups.push_back(std::move(group));
    }
    return Instance(std::move(graph), std::move(names), std::move(weights),
                    std::move(groups));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

Json solution_to_json(const Instance& instance, const RoutingSolution& sol) {
  Json trees = Json::array();
  for (const auto& tree : sol.trees)
    trees.push_back(edge_pairs(instance.graph(), tree));
  return Json{{"trees", trees},
              {"cost", rational_to_string(load_cost(instance, sol))}};
}

RoutingSolution solution_from_json(const Instance& instance, const Json& j) {
  try {
    RoutingSolution sol;
    for (const auto& tree : j.at("trees"))
      sol.trees.push_back(edge_pairs_parse(instance.graph(), tree, "tree"));
    return sol;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed solution: ") + e.what());
  }
}

Json certificate_to_json(const Instance& instance,
                         const LaminarCertificate& cert) {
  Json demands = Json::array();
  for (const auto& d : cert.demand_sets) {
    Json set = Json::array();
    for (int p : d) set.push_back(instance.packet_names()[p]);
    demands.push_back(set);
  }
  Json forests = Json::array();
  for (const auto& h : cert.forests)
    forests.push_back(edge_pairs(instance.graph(), h));
  Json duals = Json::array();
  for (const auto& y : cert.duals)
    duals.push_back(Json{{"demand", y.demand_id},
                         {"cut", y.cut},
                         {"value", rational_to_string(y.value)}});
  return Json{{"demands", demands},
              {"forests", forests},
              {"duals", duals},
              {"primal", rational_to_string(cert.primal)},
              {"dual", rational_to_string(cert.dual_value)},
              {"ratio_bound", "2"}};
}

LaminarCertificate certificate_from_json(const Instance& instance,
                                         const Json& j) {
  try {
    std::map<std::string, int> lookup;
    for (int p = 0; p < instance.packet_count(); ++p)
      lookup[instance.packet_names()[p]] = p;
    LaminarCertificate cert;
    for (const auto& jd : j.at("demands")) {
      PacketSet set;
      for (const auto& pid : jd) {
        auto it = lookup.find(pid.get<std::string>());
        if (it == lookup.end())
          throw ParseError("certificate references unknown packet " + pid.dump());
        set.push_back(it->second);
      }
      std::sort(set.begin(), set.end());
      cert.demand_sets.push_back(std::move(set));
    }
    for (const auto& jf : j.at("forests"))
      cert.forests.push_back(edge_pairs_parse(instance.graph(), jf, "forest"));
    for (const auto& jy : j.at("duals")) {
      DualVariable y;
      y.demand_id = jy.at("demand").get<int>();
      for (const auto& v : jy.at("cut")) y.cut.push_back(v.get<int>());
      std::sort(y.cut.begin(), y.cut.end());
      y.value = rational_from_json(jy.at("value"));
      cert.duals.push_back(std::move(y));
    }
    cert.primal = rational_from_json(j.at("primal"));
    cert.dual_value = rational_from_json(j.at("dual"));
    return cert;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

Json spanner_to_json(const Graph& graph, const SpannerResult& result,
                     const SpannerReport* report) {
  Json certificates{{"T_size", result.mst_edges.size()},
                    {"A1_size", result.a1.size()},
                    {"A2_size", result.a2.size()},
                    {"girth", result.girth},
                    {"outdeg_ok", result.outdeg_ok},
                    {"full_coverage", result.full_coverage}};
  if (report) {
    Json checks = Json::array();
    for (const auto& c : report->checks)
      checks.push_back(Json{{"name", c.name},
                            {"pass", c.pass},
                            {"heuristic", c.heuristic},
                            {"detail", c.detail}});
    certificates["checks"] = checks;
  }
  return Json{{"H", edge_pairs(graph, result.spanner)},
              {"A1", edge_pairs(graph, result.a1)},
              {"A2", edge_pairs(graph, result.a2)},
              {"T", edge_pairs(graph, result.mst_edges)},
              {"L", result.L},
              {"g", result.group_count},
              {"certificates", certificates}};
}

Json sunflower_to_json(const Instance& instance, const SunflowerSolution& sol) {
  Json trees = Json::array();
  for (const auto& tree : sol.trees)
    trees.push_back(edge_pairs(instance.graph(), tree));
  Rational ratio =
      sol.lower_bound > 0 ? sol.cost / sol.lower_bound : Rational(0);
  return Json{{"trees", trees},
              {"cost", rational_to_string(sol.cost)},
              {"lower_bound", rational_to_string(sol.lower_bound)},
              {"bound_mode",
               sol.bound_mode == BoundMode::kOracle ? "oracle" : "relaxed"},
              {"ratio", rational_to_string(ratio)},
              {"ratio_bound", rational_to_string(sol.ratio_bound())},
              {"L", sol.L},
              {"H", edge_pairs(instance.graph(), sol.spanner.spanner)}};
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

Instance load_instance(const std::string& path) {
  return instance_from_json(load_json(path));
}

std::string json_to_text(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << json_to_text(j);
}

}  // namespace covnet
