#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "robcore/instance.hpp"
#include "robcore/matroid.hpp"
#include "robcore/robust.hpp"
#include "robcore/submodular.hpp"

namespace robcore {

enum class AdversaryKind { Fixed, Random, TopSingletons, GreedyAttack };

/// Static deletion chooser. Its output depends only on the instance, d and
/// its own seed; it never sees the algorithm's random bits or coreset.
struct AdversaryModel {
  AdversaryKind kind = AdversaryKind::TopSingletons;
  std::vector<ItemId> fixed_ids;  // Fixed only
  std::uint64_t seed = 0;         // Random only

  /// "fixed:<id,id,...>" | "random" | "top" | "greedy".
  static AdversaryModel parse(std::string_view text, std::uint64_t seed = 0);
  std::string to_string() const;
};

/// |D| <= d. Fixed lists longer than d or naming unknown ids are rejected;
/// other kinds need d <= n. Query costs land on `oracle`.
DeletionSet make_deletion_set(const AdversaryModel& model, const Instance& inst, UtilityOracle& oracle,
                              const PMatroid& pm, std::size_t d);

}  // namespace robcore
