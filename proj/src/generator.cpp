#include "covnet/generator.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace covnet {

namespace {

// mt19937_64 with a rejection-based bounded draw; the standard distributions
// are not portable across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t next(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return r % bound;
  }

  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[next(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

Graph random_connected_graph(Rng& rng, int n, int m, bool unit, int max_cost) {
  if (m < n - 1) throw ShapeError("generator needs m >= n-1 for connectivity");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m > max_edges) throw ShapeError("generator: m exceeds simple-graph bound");

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);

  std::set<std::pair<int, int>> chosen;
  auto key = [](int a, int b) {
    return std::pair<int, int>(std::min(a, b), std::max(a, b));
  };
  for (int i = 1; i < n; ++i)
    chosen.insert(key(perm[i], perm[rng.uniform(0, i - 1)]));
  while (static_cast<int>(chosen.size()) < m) {
    int u = rng.uniform(0, n - 1);
    int v = rng.uniform(0, n - 1);
    if (u != v) chosen.insert(key(u, v));
  }

  std::vector<Edge> edges;
  for (auto [u, v] : chosen) {
    Rational cost = unit ? Rational(1) : Rational(rng.uniform(1, max_cost));
    edges.push_back({u, v, cost});
  }
  return Graph(n, std::move(edges));
}

std::vector<int> random_terminals(Rng& rng, int n, int size) {
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  rng.shuffle(verts);
  verts.resize(size);
  std::sort(verts.begin(), verts.end());
  return verts;
}

// Random laminar family: nodes of a recursive binary split of the universe.
void split_recursive(Rng& rng, const PacketSet& set, int depth,
                     std::vector<PacketSet>* family) {
  family->push_back(set);
  if (depth <= 0 || set.size() < 2) return;
  int cut = rng.uniform(1, static_cast<int>(set.size()) - 1);
  PacketSet left(set.begin(), set.begin() + cut);
  PacketSet right(set.begin() + cut, set.end());
  split_recursive(rng, left, depth - 1, family);
  split_recursive(rng, right, depth - 1, family);
}

}  // namespace

InstanceKind parse_kind(const std::string& text) {
  if (text == "laminar") return InstanceKind::kLaminar;
  if (text == "sunflower") return InstanceKind::kSunflower;
  if (text == "uniform-pairs") return InstanceKind::kUniformPairs;
  throw ParseError("unknown instance kind: '" + text + "'");
}

std::string kind_to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kLaminar: return "laminar";
    case InstanceKind::kSunflower: return "sunflower";
    case InstanceKind::kUniformPairs: return "uniform-pairs";
  }
  return "?";
}

Instance generate_instance(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const bool unit = spec.kind != InstanceKind::kLaminar;
  Graph graph = random_connected_graph(rng, spec.n, spec.m, unit, spec.max_cost);

  std::vector<Group> groups;
  int packet_count = 0;

  switch (spec.kind) {
    case InstanceKind::kLaminar: {
      int universe = std::max(2, std::min(6, spec.depth + 2));
      PacketSet all(universe);
      for (int p = 0; p < universe; ++p) all[p] = p;
      std::vector<PacketSet> family;
      split_recursive(rng, all, spec.depth, &family);
      for (int j = 0; j < spec.g; ++j) {
        Group group;
        group.demand = family[rng.uniform(0, static_cast<int>(family.size()) - 1)];
        int size = rng.uniform(2, std::min(4, spec.n));
        group.terminals = random_terminals(rng, spec.n, size);
        groups.push_back(std::move(group));
      }
      packet_count = universe;
      break;
    }
    case InstanceKind::kSunflower: {
      int core = rng.uniform(1, 2);
      int next_packet = core;
      for (int j = 0; j < spec.g; ++j) {
        Group group;
        for (int p = 0; p < core; ++p) group.demand.push_back(p);
        int petal = rng.uniform(1, 2);
        for (int p = 0; p < petal; ++p) group.demand.push_back(next_packet++);
        int size = rng.uniform(2, std::min(4, spec.n));
        group.terminals = random_terminals(rng, spec.n, size);
        groups.push_back(std::move(group));
      }
      packet_count = next_packet;
      break;
    }
    case InstanceKind::kUniformPairs: {
      // Adjacent pairs covering every vertex, then extras up to g groups.
      std::vector<int> edge_order(graph.edges().size());
      for (std::size_t i = 0; i < edge_order.size(); ++i)
        edge_order[i] = static_cast<int>(i);
      rng.shuffle(edge_order);
      std::vector<char> covered(spec.n, 0);
      std::vector<int> picked;
      for (int e : edge_order) {
        if (covered[graph.edge(e).u] && covered[graph.edge(e).v]) continue;
        covered[graph.edge(e).u] = covered[graph.edge(e).v] = 1;
        picked.push_back(e);
      }
      for (int e : edge_order) {
        if (static_cast<int>(picked.size()) >= spec.g) break;
        if (std::find(picked.begin(), picked.end(), e) == picked.end())
          picked.push_back(e);
      }
      // Sunflower demands {0, j+1}: packet 0 common, one packet per group.
      for (std::size_t j = 0; j < picked.size(); ++j) {
        Group group;
        group.terminals = {graph.edge(picked[j]).u, graph.edge(picked[j]).v};
        group.demand = {0, static_cast<int>(j) + 1};
        groups.push_back(std::move(group));
      }
      packet_count = static_cast<int>(picked.size()) + 1;
      break;
    }
  }

  std::vector<std::string> names;
  std::vector<Rational> weights;
  for (int p = 0; p < packet_count; ++p) {
    names.push_back("p" + std::to_string(p));
    weights.push_back(Rational(1));
  }
  return Instance(std::move(graph), std::move(names), std::move(weights),
                  std::move(groups));
}

}  // namespace covnet
