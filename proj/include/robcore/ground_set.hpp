#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "robcore/item_set.hpp"

namespace robcore {

/// Maps declared item ids to dense positions 0..n-1. Shared, immutable.
class GroundSet {
 public:
  explicit GroundSet(std::span<const ItemId> ids);

  std::size_t size() const { return ids_.size(); }
  std::span<const ItemId> ids() const { return ids_; }
  ItemId id_at(std::size_t index) const { return ids_.at(index); }
  bool contains(ItemId id) const { return index_.count(id) != 0; }

  /// Throws UnknownItem.
  std::size_t index_of(ItemId id) const;

  /// Dense indices of `set`, sorted and de-duplicated. Throws UnknownItem.
  std::vector<std::size_t> indices_of(std::span<const ItemId> set) const;

 private:
  std::vector<ItemId> ids_;
  std::unordered_map<ItemId, std::size_t> index_;
};

}  // namespace robcore
