#include "robcore/robust.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace robcore {

std::size_t buffer_capacity(std::size_t d, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ContractViolation("eps must lie in (0, 1)");
  return static_cast<std::size_t>(std::ceil(static_cast<double>(d) / eps));
}

bool Buffer::contains(ItemId id) const {
  return std::find(entries.begin(), entries.end(), id) != entries.end();
}

std::size_t SeededDrawSource::pick(std::span<const ItemId> candidates, std::span<const double> weights) {
  if (candidates.empty() || candidates.size() != weights.size()) {
    throw ContractViolation("draw needs one positive weight per candidate");
  }
  double total = 0.0;
  for (double w : weights) total += w;
  const double target = rng_.uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc) return i;
  }
  return weights.size() - 1;
}

std::size_t ScriptedDrawSource::pick(std::span<const ItemId> candidates, std::span<const double>) {
  if (script_.empty()) throw ContractViolation("scripted draws exhausted");
  const ItemId next = script_.front();
  script_.pop_front();
  auto it = std::find(candidates.begin(), candidates.end(), next);
  if (it == candidates.end()) {
    throw ContractViolation("scripted draw " + std::to_string(next) + " is not in the buffer");
  }
  return static_cast<std::size_t>(it - candidates.begin());
}

Buffer buffer_filter(ExchangeState& state, const PMatroid& pm, UtilityOracle& oracle, Buffer buf) {
  Buffer kept;
  kept.capacity = buf.capacity;
  for (ItemId v : buf.entries) {
    const double gain = oracle.marginal(v, state.solution);
    // Zero-gain entries would get an infinite sampling weight; they add nothing anyway.
    if (!(gain > 0.0)) continue;
    const ItemSet removal = exchange_candidates(state, pm, v);
    if (gain >= (1.0 + state.alpha) * state.weight_of(removal)) {
      kept.entries.push_back(v);
      kept.cached_marginal[v] = gain;
    }
  }
  return kept;
}

DrawRecord buffer_sample(const Buffer& buf, DrawSource& draws) {
  if (buf.entries.empty()) throw ContractViolation("cannot sample from an empty buffer");
  DrawRecord record;
  record.candidates = buf.entries;
  std::vector<double> inverse;
  double z = 0.0;
  for (ItemId v : buf.entries) {
    auto it = buf.cached_marginal.find(v);
    if (it == buf.cached_marginal.end() || !(it->second > 0.0)) {
      throw ContractViolation("buffer entry " + std::to_string(v) + " has no positive cached marginal");
    }
    record.marginals.push_back(it->second);
    inverse.push_back(1.0 / it->second);
    z += inverse.back();
  }
  const std::size_t index = draws.pick(record.candidates, inverse);
  record.chosen = record.candidates.at(index);
  record.probability = inverse[index] / z;
  return record;
}

void rexc_ingest(RexcOutcome& outcome, const PMatroid& pm, UtilityOracle& oracle, ItemId v, DrawSource& draws) {
  ExchangeState& state = outcome.state;
  if (state.weights.count(v) || outcome.buffer.contains(v)) {
    throw ContractViolation("rexc_ingest: item " + std::to_string(v) + " was already seen");
  }
  Buffer& buf = outcome.buffer;
  buf.entries.push_back(v);
  buf = buffer_filter(state, pm, oracle, std::move(buf));
  if (buf.entries.empty() || buf.entries.size() < buf.capacity) return;

  DrawRecord record = buffer_sample(buf, draws);
  const ItemId chosen = record.chosen;
  const double weight = buf.cached_marginal.at(chosen);
  const ItemSet removal = exchange_candidates(state, pm, chosen);
  state.accept(chosen, weight, removal);
  buf.entries.erase(std::find(buf.entries.begin(), buf.entries.end(), chosen));
  buf.cached_marginal.erase(chosen);
  outcome.draw_log.push_back(std::move(record));
}

RexcOutcome rexc_run(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream,
                     const RexcParams& params, DrawSource& draws) {
  RexcOutcome outcome{ExchangeState(params.alpha), Buffer{}, {}};
  outcome.buffer.capacity = buffer_capacity(params.d, params.eps);
  for (ItemId v : stream) rexc_ingest(outcome, pm, oracle, v, draws);
  return outcome;
}

RexcOutcome rexc_run(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream,
                     const RexcParams& params, std::uint64_t seed) {
  SeededDrawSource draws(seed);
  return rexc_run(oracle, pm, stream, params, draws);
}

RebuildResult rebuild_after_deletion(const RexcOutcome& outcome, const PMatroid& pm, UtilityOracle& oracle,
                                     const DeletionSet& deletions, double alpha) {
  RebuildResult result{outcome.state, {}};
  result.state.alpha = alpha;
  if (!(alpha > 0.0)) throw ContractViolation("exchange parameter alpha must be positive");
  for (ItemId v : outcome.buffer.entries) {
    if (contains(deletions.ids, v)) continue;
    exc_step(result.state, pm, oracle, v);
  }
  result.solution = set_minus(result.state.solution, deletions.ids);
  return result;
}

CoresetReport coreset(const RexcOutcome& outcome, std::size_t rank_bound) {
  CoresetReport report;
  report.items = set_union(outcome.state.solution, make_set(outcome.buffer.entries));
  report.size = report.items.size();
  report.bound = rank_bound + outcome.buffer.capacity;
  if (report.size > report.bound) {
    throw CoresetSizeViolation("coreset holds " + std::to_string(report.size) + " items, bound is " +
                               std::to_string(report.bound));
  }
  return report;
}

}  // namespace robcore
