#include "covnet/instance.hpp"

#include <algorithm>

namespace covnet {

Instance::Instance(Graph graph, std::vector<std::string> packet_names,
                   std::vector<Rational> packet_weights,
                   std::vector<Group> groups)
    : graph_(std::move(graph)),
      packet_names_(std::move(packet_names)),
      packet_weights_(std::move(packet_weights)),
      groups_(std::move(groups)) {
  if (packet_names_.size() != packet_weights_.size())
    throw ShapeError("packet name/weight size mismatch");
  for (const auto& w : packet_weights_)
    if (w <= 0) throw ShapeError("packet weights must be positive");
  for (auto& g : groups_) {
    std::sort(g.terminals.begin(), g.terminals.end());
    g.terminals.erase(std::unique(g.terminals.begin(), g.terminals.end()),
                      g.terminals.end());
    std::sort(g.demand.begin(), g.demand.end());
    g.demand.erase(std::unique(g.demand.begin(), g.demand.end()), g.demand.end());
    if (g.terminals.size() < 2)
      throw ShapeError("every group needs at least 2 terminals");
    if (g.demand.empty()) throw ShapeError("every demand set must be nonempty");
    for (int t : g.terminals)
      if (t < 0 || t >= graph_.vertex_count())
        throw ShapeError("terminal id out of range: " + std::to_string(t));
    for (int p : g.demand)
      if (p < 0 || p >= packet_count())
        throw ShapeError("packet id out of range in demand set");
  }
}

Rational Instance::demand_weight(const PacketSet& demand) const {
  Rational sum = 0;
  for (int p : demand) sum += packet_weights_[p];
  return sum;
}

PacketSet packet_intersection(const PacketSet& a, const PacketSet& b) {
  PacketSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

PacketSet packet_difference(const PacketSet& a, const PacketSet& b) {
  PacketSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool packet_subset(const PacketSet& a, const PacketSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

DemandShape classify_demands(const Instance& instance) {
  const auto& groups = instance.groups();
  DemandShape shape;

  shape.is_laminar = true;
  for (std::size_t i = 0; i < groups.size() && shape.is_laminar; ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto& a = groups[i].demand;
      const auto& b = groups[j].demand;
      auto inter = packet_intersection(a, b);
      if (inter.empty() || inter == a || inter == b) continue;
      shape.is_laminar = false;
      break;
    }
  }

  if (groups.size() <= 1) {
    shape.is_sunflower = !groups.empty();
    if (shape.is_sunflower) {
      shape.core = {};
      shape.petals = {groups[0].demand};
    }
  } else {
    PacketSet core = packet_intersection(groups[0].demand, groups[1].demand);
    shape.is_sunflower = true;
    for (std::size_t i = 0; i < groups.size() && shape.is_sunflower; ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        if (packet_intersection(groups[i].demand, groups[j].demand) != core) {
          shape.is_sunflower = false;
          break;
        }
    if (shape.is_sunflower) {
      shape.core = core;
      for (const auto& g : groups)
        shape.petals.push_back(packet_difference(g.demand, core));
    }
  }

  if (shape.is_laminar)
    shape.tag = DemandTag::kLaminar;
  else if (shape.is_sunflower)
    shape.tag = DemandTag::kSunflower;
  else
    shape.tag = DemandTag::kGeneral;
  return shape;
}

}  // namespace covnet
