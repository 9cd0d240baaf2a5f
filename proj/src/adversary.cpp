#include "robcore/adversary.hpp"

#include <algorithm>
#include <charconv>

#include "robcore/random.hpp"
#include "robcore/reference.hpp"

namespace robcore {

AdversaryModel AdversaryModel::parse(std::string_view text, std::uint64_t seed) {
  AdversaryModel model;
  model.seed = seed;
  if (text == "random") {
    model.kind = AdversaryKind::Random;
  } else if (text == "top") {
    model.kind = AdversaryKind::TopSingletons;
  } else if (text == "greedy") {
    model.kind = AdversaryKind::GreedyAttack;
  } else if (text.substr(0, 6) == "fixed:" || text == "fixed") {
    model.kind = AdversaryKind::Fixed;
    std::string_view rest = text.size() > 6 ? text.substr(6) : std::string_view{};
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      ItemId id = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
      if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw ContractViolation("bad item id \"" + std::string(token) + "\" in fixed adversary");
      }
      model.fixed_ids.push_back(id);
    }
  } else {
    throw ContractViolation("unknown adversary \"" + std::string(text) + "\"");
  }
  return model;
}

std::string AdversaryModel::to_string() const {
  switch (kind) {
    case AdversaryKind::Random: return "random";
    case AdversaryKind::TopSingletons: return "top";
    case AdversaryKind::GreedyAttack: return "greedy";
    case AdversaryKind::Fixed: {
      std::string out = "fixed:";
      for (std::size_t i = 0; i < fixed_ids.size(); ++i) {
        if (i) out += ' ';  // keeps the label a single CSV field
        out += std::to_string(fixed_ids[i]);
      }
      return out;
    }
  }
  return "?";
}

namespace {

// Items by f({v}) descending, smallest id first on ties.
std::vector<ItemId> rank_singletons(const Instance& inst, UtilityOracle& oracle) {
  std::vector<std::pair<double, ItemId>> scored;
  for (ItemId id : inst.stream()) {
    const ItemId single[] = {id};
    scored.emplace_back(oracle.eval(single), id);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<ItemId> ids;
  for (const auto& entry : scored) ids.push_back(entry.second);
  return ids;
}

}  // namespace

DeletionSet make_deletion_set(const AdversaryModel& model, const Instance& inst, UtilityOracle& oracle,
                              const PMatroid& pm, std::size_t d) {
  if (model.kind == AdversaryKind::Fixed) {
    if (model.fixed_ids.size() > d) {
      throw ContractViolation("fixed deletion list has " + std::to_string(model.fixed_ids.size()) +
                              " ids but d = " + std::to_string(d));
    }
    for (ItemId id : model.fixed_ids) oracle.ground().index_of(id);
    return {make_set(model.fixed_ids)};
  }
  if (d > inst.n()) {
    throw ContractViolation("d = " + std::to_string(d) + " exceeds n = " + std::to_string(inst.n()));
  }

  std::vector<ItemId> chosen;
  switch (model.kind) {
    case AdversaryKind::Random: {
      std::vector<ItemId> ids = inst.stream();
      std::sort(ids.begin(), ids.end());
      Rng rng(model.seed);
      for (std::size_t i = 0; i < d; ++i) std::swap(ids[i], ids[i + rng.below(ids.size() - i)]);
      chosen.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(d));
      break;
    }
    case AdversaryKind::TopSingletons: {
      const auto ranked = rank_singletons(inst, oracle);
      chosen.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(d));
      break;
    }
    case AdversaryKind::GreedyAttack: {
      const auto ids = inst.stream();
      const auto picks = greedy(oracle, pm, ids);
      chosen.assign(picks.begin(), picks.begin() + static_cast<std::ptrdiff_t>(std::min(d, picks.size())));
      if (chosen.size() < d) {
        for (ItemId id : rank_singletons(inst, oracle)) {
          if (chosen.size() == d) break;
          if (std::find(chosen.begin(), chosen.end(), id) == chosen.end()) chosen.push_back(id);
        }
      }
      break;
    }
    case AdversaryKind::Fixed:
      break;
  }
  return {make_set(chosen)};
}

}  // namespace robcore
