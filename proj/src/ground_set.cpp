#include "robcore/ground_set.hpp"

#include <algorithm>
#include <string>

#include "robcore/errors.hpp"

namespace robcore {

GroundSet::GroundSet(std::span<const ItemId> ids) : ids_(ids.begin(), ids.end()) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw ContractViolation("duplicate item id " + std::to_string(ids_[i]));
    }
  }
}

std::size_t GroundSet::index_of(ItemId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownItem("unknown item id " + std::to_string(id));
  return it->second;
}

std::vector<std::size_t> GroundSet::indices_of(std::span<const ItemId> set) const {
  std::vector<std::size_t> out;
  out.reserve(set.size());
  for (ItemId id : set) out.push_back(index_of(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace robcore
