#pragma once

// Test fixtures and independent oracles. The oracles here work straight from
// the instance description (bitmask enumeration, explicit unions, DFS cycle
// search) and never call the library's evaluators or matroid classes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "robcore/instance.hpp"
#include "robcore/random.hpp"

namespace fixtures {

using robcore::Instance;
using robcore::ItemId;
using robcore::ItemSet;
using robcore::MatroidSpec;

// Letter names used in the hand traces.
inline constexpr ItemId a = 0, b = 1, c = 2, e = 3, x = 4;

inline Instance make_instance(std::vector<ItemId> ids, robcore::FunctionSpec fn, std::vector<MatroidSpec> ms) {
  Instance inst;
  inst.name = "fixture";
  for (ItemId id : ids) inst.items.push_back({id, inst.items.size()});
  inst.function = std::move(fn);
  inst.matroids = std::move(ms);
  return inst;
}

inline Instance modular(std::map<ItemId, double> values, std::vector<MatroidSpec> ms) {
  std::vector<ItemId> ids;
  for (const auto& [id, v] : values) ids.push_back(id);
  return make_instance(ids, robcore::ModularSpec{std::move(values)}, std::move(ms));
}

/// Modular a:1, b:1, c:3, e:5 under uniform k=2, streamed a, b, c, e.
inline Instance scenario_s1() {
  return modular({{a, 1}, {b, 1}, {c, 3}, {e, 5}}, {robcore::UniformSpec{2}});
}

/// Random instance for property checks; kinds rotate over the three
/// utility families, p in {1, 2} (uniform, optionally with a partition).
inline Instance random_instance(std::uint64_t seed, std::size_t n, std::size_t p, std::int64_t k,
                                int kind_index) {
  robcore::GeneratorConfig cfg;
  cfg.kind = static_cast<robcore::GeneratorKind>(kind_index % 3);
  cfg.n = n;
  cfg.k = k;
  cfg.universe = n + 5;
  cfg.cover_size = 4;
  cfg.clients = 4;
  cfg.max_weight = 9;
  if (p == 2) {
    cfg.partition_groups = 3;
    cfg.partition_capacity = 1 + static_cast<std::int64_t>(seed % 2);
  }
  return robcore::generate_synthetic(cfg, seed);
}

// ---- independent oracles -------------------------------------------------

inline double naive_value(const Instance& inst, const ItemSet& set) {
  if (const auto* m = std::get_if<robcore::ModularSpec>(&inst.function)) {
    double total = 0;
    for (ItemId id : set) {
      auto it = m->values.find(id);
      if (it != m->values.end()) total += it->second;
    }
    return total;
  }
  if (const auto* cov = std::get_if<robcore::CoverageSpec>(&inst.function)) {
    std::set<std::int64_t> covered;
    for (ItemId id : set) {
      auto it = cov->covers.find(id);
      if (it != cov->covers.end()) covered.insert(it->second.begin(), it->second.end());
    }
    double total = 0;
    for (auto el : covered) total += cov->universe_weights[static_cast<std::size_t>(el)];
    return total;
  }
  const auto& fac = std::get<robcore::FacilitySpec>(inst.function);
  double total = 0;
  for (std::int64_t client = 0; client < fac.clients; ++client) {
    double best = 0;
    for (ItemId id : set) {
      auto it = fac.weights.find(id);
      if (it != fac.weights.end()) best = std::max(best, it->second[static_cast<std::size_t>(client)]);
    }
    total += best;
  }
  return total;
}

// Cycle search by DFS over the edge multigraph of `set`.
inline bool naive_graph_acyclic(const robcore::GraphicSpec& g, const ItemSet& set) {
  const auto nv = static_cast<std::size_t>(g.vertices);
  std::vector<std::vector<std::pair<std::size_t, ItemId>>> adj(nv);
  for (ItemId id : set) {
    const auto& ends = g.edges.at(id);
    if (ends[0] == ends[1]) return false;
    adj[static_cast<std::size_t>(ends[0])].push_back({static_cast<std::size_t>(ends[1]), id});
    adj[static_cast<std::size_t>(ends[1])].push_back({static_cast<std::size_t>(ends[0]), id});
  }
  std::vector<int> seen(nv, 0);
  std::function<bool(std::size_t, ItemId, bool)> dfs = [&](std::size_t v, ItemId via, bool root) {
    seen[v] = 1;
    for (const auto& [w, edge] : adj[v]) {
      if (!root && edge == via) continue;
      if (seen[w]) return false;
      if (!dfs(w, edge, false)) return false;
    }
    return true;
  };
  for (std::size_t v = 0; v < nv; ++v) {
    if (!seen[v] && !dfs(v, 0, true)) return false;
  }
  return true;
}

inline bool naive_independent(const MatroidSpec& spec, const ItemSet& set) {
  if (const auto* u = std::get_if<robcore::UniformSpec>(&spec)) {
    return static_cast<std::int64_t>(set.size()) <= u->k;
  }
  if (const auto* part = std::get_if<robcore::PartitionSpec>(&spec)) {
    for (std::size_t g = 0; g < part->groups.size(); ++g) {
      std::int64_t count = 0;
      for (ItemId id : part->groups[g]) count += std::binary_search(set.begin(), set.end(), id) ? 1 : 0;
      if (count > part->capacities[g]) return false;
    }
    return true;
  }
  return naive_graph_acyclic(std::get<robcore::GraphicSpec>(spec), set);
}

inline bool naive_feasible(const Instance& inst, const ItemSet& set) {
  return std::all_of(inst.matroids.begin(), inst.matroids.end(),
                     [&](const auto& m) { return naive_independent(m, set); });
}

inline ItemSet subset_of(const std::vector<ItemId>& sorted_ids, std::uint64_t mask) {
  ItemSet out;
  for (std::size_t i = 0; i < sorted_ids.size(); ++i) {
    if (mask >> i & 1U) out.push_back(sorted_ids[i]);
  }
  return out;
}

struct EnumeratedOptimum {
  double value = 0;
  std::size_t rank = 0;
};

/// Optimum value and maximum feasible size over all 2^|ground| subsets.
inline EnumeratedOptimum enumerate_all(const Instance& inst, ItemSet ground) {
  EnumeratedOptimum best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ground.size()); ++mask) {
    const ItemSet s = subset_of(ground, mask);
    if (!naive_feasible(inst, s)) continue;
    best.value = std::max(best.value, naive_value(inst, s));
    best.rank = std::max(best.rank, s.size());
  }
  return best;
}

inline ItemSet all_ids(const Instance& inst) {
  return robcore::make_set(inst.stream());
}

}  // namespace fixtures
