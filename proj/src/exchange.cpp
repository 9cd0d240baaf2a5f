#include "robcore/exchange.hpp"

#include <limits>
#include <string>

namespace robcore {

ExchangeState::ExchangeState(double a) : alpha(a) {
  if (!(alpha > 0.0)) throw ContractViolation("exchange parameter alpha must be positive");
}

double ExchangeState::weight_of(std::span<const ItemId> set) const {
  double total = 0.0;
  for (ItemId id : set) {
    auto it = weights.find(id);
    if (it == weights.end()) throw ContractViolation("item " + std::to_string(id) + " has no frozen weight");
    total += it->second;
  }
  return total;
}

void ExchangeState::accept(ItemId v, double weight, const ItemSet& removed) {
  if (!weights.emplace(v, weight).second) {
    throw ContractViolation("item " + std::to_string(v) + " was already accepted once");
  }
  for (ItemId u : removed) {
    if (!contains(solution, u)) throw ContractViolation("exchange removes an item outside the solution");
    solution = without(std::move(solution), u);
    swapped = with(std::move(swapped), u);
  }
  solution = with(std::move(solution), v);
  accept_log.push_back({v, weight});
}

ItemSet exchange_candidates(ExchangeState& state, const PMatroid& pm, ItemId v) {
  if (contains(state.solution, v)) {
    throw ContractViolation("exchange_candidates: item " + std::to_string(v) + " is already in the solution");
  }
  const ItemSet extended = with(state.solution, v);
  ItemSet removal;
  for (std::size_t j = 0; j < pm.p(); ++j) {
    const Matroid& m = pm.member(j);
    ++state.matroid_probes;
    if (m.is_independent(extended)) continue;

    bool found = false;
    ItemId best = 0;
    double best_weight = std::numeric_limits<double>::infinity();
    // The solution is sorted by id, so a strict < keeps the smallest id on ties.
    for (ItemId u : state.solution) {
      const double w = state.weights.at(u);
      if (found && w >= best_weight) continue;
      ++state.matroid_probes;
      if (m.is_independent(without(extended, u))) {
        found = true;
        best = u;
        best_weight = w;
      }
    }
    if (!found) {
      throw StructuralError("no single removal restores independence in constraint " + std::to_string(j) +
                            " for item " + std::to_string(v));
    }
    removal = with(std::move(removal), best);
  }
  ++state.matroid_probes;
  if (!pm.feasible(set_minus(extended, removal))) {
    throw StructuralError("exchange for item " + std::to_string(v) + " leaves an infeasible solution");
  }
  return removal;
}

StepDecision exc_step(ExchangeState& state, const PMatroid& pm, UtilityOracle& oracle, ItemId v) {
  if (state.weights.count(v)) {
    throw ContractViolation("exc_step: item " + std::to_string(v) + " was already processed into the solution");
  }
  StepDecision decision;
  decision.gain = oracle.marginal(v, state.solution);
  decision.removed = exchange_candidates(state, pm, v);
  if (decision.gain >= (1.0 + state.alpha) * state.weight_of(decision.removed)) {
    state.accept(v, decision.gain, decision.removed);
    decision.accepted = true;
  }
  return decision;
}

ExchangeState exc_run(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream, double alpha) {
  ExchangeState state(alpha);
  for (ItemId v : stream) exc_step(state, pm, oracle, v);
  return state;
}

double c_alpha(double alpha, std::size_t p) {
  if (!(alpha > 0.0)) throw ContractViolation("c_alpha needs alpha > 0");
  const double a1 = alpha + 1.0;
  return (static_cast<double>(p) * a1 - 1.0) * a1 / alpha + 1.0 + 1.0 / alpha;
}

}  // namespace robcore
