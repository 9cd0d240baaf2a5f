#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "robcore/exchange.hpp"
#include "robcore/random.hpp"

namespace robcore {

/// ceil(d / eps). Throws ContractViolation unless eps is in (0, 1).
std::size_t buffer_capacity(std::size_t d, double eps);

/// Candidate buffer placed in front of the exchange algorithm.
struct Buffer {
  std::vector<ItemId> entries;                // insertion order
  std::map<ItemId, double> cached_marginal;   // f(v | I) as of the last filter pass
  std::size_t capacity = 0;

  bool contains(ItemId id) const;
};

/// One sampling event: the candidates and their cached marginals at draw
/// time, the chosen item and the probability it had.
struct DrawRecord {
  std::vector<ItemId> candidates;
  std::vector<double> marginals;
  ItemId chosen = 0;
  double probability = 0.0;

  friend bool operator==(const DrawRecord&, const DrawRecord&) = default;
};

/// Source of buffer draws. `pick` returns an index into `candidates` with
/// probability proportional to `weights` (which are positive).
class DrawSource {
 public:
  virtual ~DrawSource() = default;
  virtual std::size_t pick(std::span<const ItemId> candidates, std::span<const double> weights) = 0;
};

/// Inverse-CDF draws from a seeded Rng.
class SeededDrawSource final : public DrawSource {
 public:
  explicit SeededDrawSource(std::uint64_t seed) : rng_(seed) {}
  std::size_t pick(std::span<const ItemId> candidates, std::span<const double> weights) override;

 private:
  Rng rng_;
};

/// Replays a fixed sequence of chosen ids, for trace tests. Throws
/// ContractViolation if the script runs out or names an absent candidate.
class ScriptedDrawSource final : public DrawSource {
 public:
  explicit ScriptedDrawSource(std::vector<ItemId> script) : script_(script.begin(), script.end()) {}
  std::size_t pick(std::span<const ItemId> candidates, std::span<const double> weights) override;
  std::size_t remaining() const { return script_.size(); }

 private:
  std::deque<ItemId> script_;
};

struct RexcParams {
  double alpha = 1.0;
  double eps = 0.25;
  std::size_t d = 0;
};

struct RexcOutcome {
  ExchangeState state;
  Buffer buffer;
  std::vector<DrawRecord> draw_log;
};

struct DeletionSet {
  ItemSet ids;
};

/// Keeps the entries v with f(v | I) > 0 and f(v | I) >= (1 + alpha) w(Sw(v)),
/// refreshing their cached marginals. Order is preserved. Each scanned entry
/// costs one marginal (2 queries).
Buffer buffer_filter(ExchangeState& state, const PMatroid& pm, UtilityOracle& oracle, Buffer buf);

/// Draws v with probability (1 / m(v)) / sum_u (1 / m(u)) over the cached
/// marginals m. Throws ContractViolation on an empty buffer or a
/// non-positive marginal.
DrawRecord buffer_sample(const Buffer& buf, DrawSource& draws);

/// One arrival: buffer, filter, and at most one draw once the buffer holds
/// `capacity` entries. The drawn item is accepted unconditionally and leaves
/// the buffer.
void rexc_ingest(RexcOutcome& outcome, const PMatroid& pm, UtilityOracle& oracle, ItemId v, DrawSource& draws);

RexcOutcome rexc_run(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream,
                     const RexcParams& params, DrawSource& draws);
RexcOutcome rexc_run(UtilityOracle& oracle, const PMatroid& pm, std::span<const ItemId> stream,
                     const RexcParams& params, std::uint64_t seed);

struct RebuildResult {
  ExchangeState state;  // solution before deletions are removed, all swaps from both stages
  ItemSet solution;     // state.solution minus the deletions
};

/// Continues the exchange algorithm over the surviving buffer entries in
/// insertion order, then drops deleted items from the solution.
RebuildResult rebuild_after_deletion(const RexcOutcome& outcome, const PMatroid& pm, UtilityOracle& oracle,
                                     const DeletionSet& deletions, double alpha);

struct CoresetReport {
  ItemSet items;
  std::size_t size = 0;
  std::size_t bound = 0;  // rank + buffer capacity
};

/// solution ∪ buffer. Throws CoresetSizeViolation above rank_bound + capacity.
CoresetReport coreset(const RexcOutcome& outcome, std::size_t rank_bound);

/// Draw logs as JSON lines: {"draw":i,"candidates":[..],"marginals":[..],"chosen":id,"probability":p}.
void write_trace(std::ostream& out, std::span<const DrawRecord> log);
std::vector<DrawRecord> read_trace(std::istream& in);

}  // namespace robcore
