#pragma once

#include <cstdint>

#include "covnet/instance.hpp"

namespace covnet {

enum class InstanceKind { kLaminar, kSunflower, kUniformPairs };

struct GeneratorSpec {
  InstanceKind kind = InstanceKind::kLaminar;
  int n = 8;          // vertices
  int m = 12;         // edges (>= n-1)
  int g = 3;          // groups; uniform-pairs may emit more to cover V
  int depth = 2;      // laminar nesting depth
  std::uint64_t seed = 0;
  int max_cost = 4;   // laminar edge costs drawn from 1..max_cost
};

InstanceKind parse_kind(const std::string& text);
std::string kind_to_string(InstanceKind kind);

// Deterministic: same spec yields the identical instance.
Instance generate_instance(const GeneratorSpec& spec);

}  // namespace covnet
