#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace robcore {

using ItemId = std::uint32_t;

/// Sorted, duplicate-free list of item ids. All set-valued results in the
/// library use this representation so that equality is element-wise.
using ItemSet = std::vector<ItemId>;

inline ItemSet make_set(std::vector<ItemId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline ItemSet make_set(std::span<const ItemId> ids) {
  return make_set(std::vector<ItemId>(ids.begin(), ids.end()));
}

inline bool contains(const ItemSet& set, ItemId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

inline ItemSet with(ItemSet set, ItemId id) {
  auto it = std::lower_bound(set.begin(), set.end(), id);
  if (it == set.end() || *it != id) set.insert(it, id);
  return set;
}

inline ItemSet without(ItemSet set, ItemId id) {
  auto it = std::lower_bound(set.begin(), set.end(), id);
  if (it != set.end() && *it == id) set.erase(it);
  return set;
}

inline ItemSet set_minus(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ItemSet set_union(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const ItemSet& a, const ItemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace robcore
