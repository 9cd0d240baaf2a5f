#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "robcore/ground_set.hpp"
#include "robcore/instance.hpp"

namespace robcore {

enum class UtilityKind { Modular, Coverage, Facility };

/// Monotone, normalized submodular set function over an instance's items.
///
/// Query accounting: eval costs 1 query and marginal costs 2, whatever the
/// evaluation does internally. Copies share the immutable payload but own
/// their counter, so a trial that works on its own copy gets exact counts.
/// Nothing is cached between calls.
class UtilityOracle {
 public:
  static UtilityOracle from_instance(const Instance& inst);

  UtilityKind kind() const;
  const GroundSet& ground() const;

  /// f(S). Duplicate ids in `set` are ignored. Throws UnknownItem.
  double eval(std::span<const ItemId> set);

  /// f(S + v) - f(S); 0 when v is already in S. Throws UnknownItem.
  double marginal(ItemId v, std::span<const ItemId> set);

  std::uint64_t query_count() const { return queries_; }

  /// Copy with a fresh counter.
  UtilityOracle clone() const;

 private:
  struct Payload;
  explicit UtilityOracle(std::shared_ptr<const Payload> payload) : payload_(std::move(payload)) {}
  double evaluate(std::span<const ItemId> set) const;

  std::shared_ptr<const Payload> payload_;
  std::uint64_t queries_ = 0;
};

}  // namespace robcore
