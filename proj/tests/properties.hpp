#pragma once

// Randomized and exhaustive property checks shared by the unit tests and
// the acceptance binary. Each returns the number of violations found.

#include <cstdint>
#include <string>
#include <vector>

#include "robcore/matroid.hpp"
#include "robcore/submodular.hpp"
#include "support.hpp"

namespace properties {

struct OracleViolations {
  std::size_t normalization = 0;
  std::size_t monotonicity = 0;
  std::size_t submodularity = 0;
  std::size_t agreement = 0;  // library value differs from the independent evaluator
};

/// `cases` random (S ⊆ T, v ∉ T) triples on random instances of `kind`.
inline OracleViolations check_oracle_properties(robcore::GeneratorKind kind, std::size_t cases,
                                                std::uint64_t seed) {
  OracleViolations found;
  robcore::Rng rng(seed);
  for (std::size_t trial = 0; trial < cases; ++trial) {
    robcore::GeneratorConfig cfg;
    cfg.kind = kind;
    cfg.n = static_cast<std::size_t>(rng.between(2, 14));
    cfg.k = 3;
    cfg.universe = static_cast<std::size_t>(rng.between(1, 20));
    cfg.cover_size = static_cast<std::size_t>(rng.between(1, 6));
    cfg.clients = static_cast<std::size_t>(rng.between(1, 6));
    cfg.max_weight = rng.between(1, 20);
    const auto inst = robcore::generate_synthetic(cfg, rng.next());
    auto oracle = robcore::UtilityOracle::from_instance(inst);

    if (oracle.eval(robcore::ItemSet{}) != 0.0) ++found.normalization;

    // T: random subset; S: random subset of T; v: random item outside T (if any).
    const auto ids = fixtures::all_ids(inst);
    robcore::ItemSet t, s, outside;
    for (auto id : ids) {
      if (rng.below(2)) {
        t.push_back(id);
        if (rng.below(2)) s.push_back(id);
      } else {
        outside.push_back(id);
      }
    }
    const double fs = oracle.eval(s);
    const double ft = oracle.eval(t);
    if (fs > ft) ++found.monotonicity;
    if (fs != fixtures::naive_value(inst, s) || ft != fixtures::naive_value(inst, t)) ++found.agreement;
    if (!outside.empty()) {
      const auto v = outside[rng.below(outside.size())];
      const double gain_s = oracle.marginal(v, s);
      const double gain_t = oracle.marginal(v, t);
      if (gain_t > gain_s) ++found.submodularity;
      if (gain_t < 0) ++found.monotonicity;
    }
  }
  return found;
}

struct MatroidViolations {
  std::size_t downward = 0;
  std::size_t augmentation = 0;
  std::size_t extension = 0;  // can_extend disagrees with is_independent(S + v)
  std::size_t agreement = 0;  // library disagrees with the naive oracle
  std::size_t rank = 0;       // analytic rank differs from the enumerated one
};

/// Exhaustive over all subsets (n <= 10): both matroid axioms, can_extend,
/// agreement with the independent oracle, and the rank.
inline MatroidViolations check_matroid_axioms(const robcore::Instance& inst, std::size_t member) {
  MatroidViolations found;
  const auto pm = robcore::PMatroid::from_instance(inst);
  const auto& m = pm.member(member);
  const auto ids = fixtures::all_ids(inst);
  const std::size_t n = ids.size();
  const std::uint64_t count = std::uint64_t{1} << n;

  std::vector<char> independent(count);
  std::size_t enumerated_rank = 0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto s = fixtures::subset_of(ids, mask);
    independent[mask] = m.is_independent(s);
    if (independent[mask] != fixtures::naive_independent(inst.matroids[member], s)) ++found.agreement;
    if (independent[mask]) enumerated_rank = std::max(enumerated_rank, s.size());
  }
  if (m.rank() != enumerated_rank) ++found.rank;

  for (std::uint64_t y = 0; y < count; ++y) {
    if (!independent[y]) continue;
    // Downward closedness: every subset of an independent set is independent.
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      if (!independent[x]) ++found.downward;
      if (x == 0) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (y >> i & 1U) continue;
      const auto s = fixtures::subset_of(ids, y);
      if (m.can_extend(s, ids[i]) != static_cast<bool>(independent[y | (std::uint64_t{1} << i)])) ++found.extension;
    }
  }
  // Augmentation: |X| < |Y| independent => X + v independent for some v in Y \ X.
  for (std::uint64_t x = 0; x < count; ++x) {
    if (!independent[x]) continue;
    const int size_x = __builtin_popcountll(x);
    for (std::uint64_t y = 0; y < count; ++y) {
      if (!independent[y] || __builtin_popcountll(y) <= size_x) continue;
      bool augmented = false;
      for (std::uint64_t rest = y & ~x; rest && !augmented; rest &= rest - 1) {
        augmented = independent[x | (rest & (~rest + 1))];
      }
      if (!augmented) ++found.augmentation;
    }
  }
  return found;
}

/// Small matroids covering every kind, n <= 10.
inline std::vector<robcore::Instance> axiom_test_instances(std::uint64_t seed, std::size_t count) {
  std::vector<robcore::Instance> out;
  robcore::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(1, 10));
    std::vector<robcore::ItemId> ids;
    std::map<robcore::ItemId, double> values;
    for (std::size_t j = 0; j < n; ++j) {
      ids.push_back(static_cast<robcore::ItemId>(j * 3 + 1));
      values[ids.back()] = 1;
    }
    robcore::MatroidSpec spec;
    switch (i % 3) {
      case 0:
        spec = robcore::UniformSpec{rng.between(1, static_cast<std::int64_t>(n) + 1)};
        break;
      case 1: {
        robcore::PartitionSpec part;
        const auto groups = static_cast<std::size_t>(rng.between(1, 4));
        part.groups.resize(groups);
        for (auto id : ids) {
          // Some items stay ungrouped.
          const auto g = rng.below(groups + 1);
          if (g < groups) part.groups[g].push_back(id);
        }
        for (std::size_t g = 0; g < groups; ++g) part.capacities.push_back(rng.between(1, 3));
        spec = part;
        break;
      }
      default: {
        robcore::GraphicSpec g;
        g.vertices = rng.between(2, 6);
        for (auto id : ids) {
          const auto u = rng.between(0, g.vertices - 1);
          auto v = rng.between(0, g.vertices - 2);
          if (v >= u) ++v;
          g.edges[id] = {u, v};
        }
        spec = g;
        break;
      }
    }
    out.push_back(fixtures::modular(values, {spec}));
  }
  return out;
}

}  // namespace properties
