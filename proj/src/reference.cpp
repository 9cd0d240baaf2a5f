#include "robcore/reference.hpp"

#include <algorithm>
#include <string>

#include "robcore/exchange.hpp"

namespace robcore {

Optimum brute_force_opt(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> ground,
                        std::size_t guard) {
  const ItemSet items = make_set(ground);
  if (items.size() > guard) {
    throw GuardExceeded("brute force over " + std::to_string(items.size()) + " items exceeds the guard " +
                        std::to_string(guard));
  }
  Optimum best{{}, oracle.eval(ItemSet{})};
  ItemSet current;
  // Pre-order over increasing ids visits sets in lexicographic order, so
  // keeping only strict improvements yields the smallest tied set.
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < items.size(); ++i) {
      current.push_back(items[i]);
      if (pm.feasible(current)) {
        const double value = oracle.eval(current);
        if (value > best.value) best = {current, value};
        self(self, i + 1);
      }
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

std::vector<ItemId> greedy(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> ground) {
  ItemSet remaining = make_set(ground);
  ItemSet chosen;
  std::vector<ItemId> order;
  for (;;) {
    bool found = false;
    ItemId best = 0;
    double best_gain = 0.0;
    for (ItemId v : remaining) {
      if (!pm.feasible(with(chosen, v))) continue;
      const double gain = oracle.marginal(v, chosen);
      if (gain > best_gain) {
        found = true;
        best = v;
        best_gain = gain;
      }
    }
    if (!found) break;
    chosen = with(std::move(chosen), best);
    remaining = without(std::move(remaining), best);
    order.push_back(best);
  }
  return order;
}

double nonrobust_baseline(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream, double alpha,
                          const DeletionSet& deletions) {
  const ExchangeState state = exc_run(oracle, pm, stream, alpha);
  return oracle.eval(set_minus(state.solution, deletions.ids));
}

}  // namespace robcore
