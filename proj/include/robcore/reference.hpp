#pragma once

#include <span>
#include <vector>

#include "robcore/matroid.hpp"
#include "robcore/robust.hpp"
#include "robcore/submodular.hpp"

namespace robcore {

struct Optimum {
  ItemSet set;
  double value = 0.0;
};

/// Exact maximizer of f over feasible subsets of `ground`, by depth-first
/// enumeration of independent sets in increasing id order. Ties go to the
/// lexicographically smallest id set. Throws GuardExceeded when
/// |ground| > guard.
Optimum brute_force_opt(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> ground,
                        std::size_t guard = kExactSearchGuard);

/// Offline greedy: repeatedly adds the feasible item of largest positive
/// marginal gain (smallest id on ties). Returns items in the order picked.
std::vector<ItemId> greedy(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> ground);

/// f(exc_run(stream).solution \ D): the exchange algorithm without a buffer.
double nonrobust_baseline(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream, double alpha,
                          const DeletionSet& deletions);

}  // namespace robcore
