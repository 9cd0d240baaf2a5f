#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "robcore/item_set.hpp"
#include "robcore/matroid.hpp"
#include "robcore/submodular.hpp"

namespace robcore {

struct Acceptance {
  ItemId id = 0;
  double weight = 0.0;
  friend bool operator==(const Acceptance&, const Acceptance&) = default;
};

/// Solution maintained by the exchange algorithm.
///
/// Each accepted item's weight is its marginal gain against the solution at
/// the moment it was accepted and is never changed afterwards. `swapped`
/// holds items that were accepted and later exchanged out, so the accept log
/// always lists exactly solution ∪ swapped.
struct ExchangeState {
  explicit ExchangeState(double alpha);

  double alpha;
  ItemSet solution;
  std::map<ItemId, double> weights;
  ItemSet swapped;
  std::vector<Acceptance> accept_log;
  /// Independence tests issued by exchange_candidates. Not oracle queries.
  std::uint64_t matroid_probes = 0;

  /// Sum of frozen weights. Throws ContractViolation for a never-accepted id.
  double weight_of(std::span<const ItemId> set) const;
  double solution_weight() const { return weight_of(solution); }
  double swapped_weight() const { return weight_of(swapped); }

  /// solution <- solution + v - removed; freezes w(v); moves `removed` to swapped.
  void accept(ItemId v, double weight, const ItemSet& removed);
};

/// For every member j where solution + v is dependent, the minimum-weight
/// u in the solution (smallest id on ties) with solution + v - u independent
/// in j. Returned as a set. Throws StructuralError when a violated member
/// cannot be repaired by one removal.
ItemSet exchange_candidates(ExchangeState& state, const PMatroid& pm, ItemId v);

struct StepDecision {
  bool accepted = false;
  double gain = 0.0;  // f(v | I) before the step
  ItemSet removed;    // the exchange set, whether or not it was applied
};

/// One arrival of the exchange algorithm: accept v when
/// f(v | I) >= (1 + alpha) * w(Sw).
StepDecision exc_step(ExchangeState& state, const PMatroid& pm, UtilityOracle& oracle, ItemId v);

ExchangeState exc_run(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream, double alpha);

/// Approximation constant (p(α+1) − 1)(α+1)/α + 1 + 1/α; equals 4p at α = 1.
double c_alpha(double alpha, std::size_t p);

}  // namespace robcore
