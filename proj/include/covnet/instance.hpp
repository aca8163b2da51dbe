#pragma once

#include <map>
#include <string>
#include <vector>

#include "covnet/graph.hpp"

namespace covnet {

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Packet ids are interned; a demand set is a sorted list of packet indices.
using PacketSet = std::vector<int>;

struct Group {
  std::vector<int> terminals;  // sorted, |terminals| >= 2
  PacketSet demand;            // sorted, nonempty
};

class Instance {
 public:
  Instance(Graph graph, std::vector<std::string> packet_names,
           std::vector<Rational> packet_weights, std::vector<Group> groups);

  const Graph& graph() const { return graph_; }
  const std::vector<Group>& groups() const { return groups_; }
  int group_count() const { return static_cast<int>(groups_.size()); }
  int packet_count() const { return static_cast<int>(packet_names_.size()); }
  const std::vector<std::string>& packet_names() const { return packet_names_; }
  const std::vector<Rational>& packet_weights() const { return packet_weights_; }

  Rational demand_weight(const PacketSet& demand) const;

 private:
  Graph graph_;
  std::vector<std::string> packet_names_;
  std::vector<Rational> packet_weights_;
  std::vector<Group> groups_;
};

enum class DemandTag { kLaminar, kSunflower, kGeneral };

struct DemandShape {
  DemandTag tag = DemandTag::kGeneral;
  bool is_laminar = false;
  bool is_sunflower = false;
  PacketSet core;                  // sunflower only
  std::vector<PacketSet> petals;   // sunflower only, one per group
};

// Pairwise intersection tests. A family that is both laminar and sunflower
// (e.g. pairwise disjoint demands) is tagged laminar with both flags set.
DemandShape classify_demands(const Instance& instance);

PacketSet packet_intersection(const PacketSet& a, const PacketSet& b);
PacketSet packet_difference(const PacketSet& a, const PacketSet& b);
bool packet_subset(const PacketSet& a, const PacketSet& b);

}  // namespace covnet
