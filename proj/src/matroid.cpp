#include "robcore/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace robcore {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool Matroid::is_independent(std::span<const ItemId> set) const {
  const auto members = ground_->indices_of(set);
  return independent_indices(members);
}

bool Matroid::can_extend(std::span<const ItemId> set, ItemId v) const {
  auto members = ground_->indices_of(set);
  const std::size_t vi = ground_->index_of(v);
  if (std::binary_search(members.begin(), members.end(), vi)) {
    throw ContractViolation("can_extend: item " + std::to_string(v) + " is already in the set");
  }
  if (!independent_indices(members)) throw ContractViolation("can_extend: base set is not independent");
  members.insert(std::lower_bound(members.begin(), members.end(), vi), vi);
  return independent_indices(members);
}

UniformMatroid::UniformMatroid(std::shared_ptr<const GroundSet> ground, std::size_t k)
    : Matroid(std::move(ground)), k_(k) {}

std::size_t UniformMatroid::rank() const { return std::min(k_, ground().size()); }

bool UniformMatroid::independent_indices(std::span<const std::size_t> members) const {
  return members.size() <= k_;
}

PartitionMatroid::PartitionMatroid(std::shared_ptr<const GroundSet> ground, const PartitionSpec& spec)
    : Matroid(std::move(ground)) {
  if (spec.groups.size() != spec.capacities.size()) {
    throw ContractViolation("partition matroid needs one capacity per group");
  }
  group_of_.assign(this->ground().size(), kFree);
  group_sizes_.assign(spec.groups.size(), 0);
  for (std::size_t g = 0; g < spec.groups.size(); ++g) {
    if (spec.capacities[g] <= 0) throw ContractViolation("partition capacity must be positive");
    capacities_.push_back(static_cast<std::size_t>(spec.capacities[g]));
    for (ItemId id : spec.groups[g]) {
      auto& slot = group_of_[this->ground().index_of(id)];
      if (slot != kFree) throw ContractViolation("item " + std::to_string(id) + " is in two partition groups");
      slot = g;
      ++group_sizes_[g];
    }
  }
}

std::size_t PartitionMatroid::rank() const {
  std::size_t r = static_cast<std::size_t>(std::count(group_of_.begin(), group_of_.end(), kFree));
  for (std::size_t g = 0; g < capacities_.size(); ++g) r += std::min(capacities_[g], group_sizes_[g]);
  return r;
}

bool PartitionMatroid::independent_indices(std::span<const std::size_t> members) const {
  std::vector<std::size_t> used(capacities_.size(), 0);
  for (std::size_t i : members) {
    const std::size_t g = group_of_[i];
    if (g != kFree && ++used[g] > capacities_[g]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(std::shared_ptr<const GroundSet> ground, const GraphicSpec& spec)
    : Matroid(std::move(ground)) {
  if (spec.vertices < 0) throw ContractViolation("graphic matroid needs a non-negative vertex count");
  vertices_ = static_cast<std::size_t>(spec.vertices);
  ends_.resize(this->ground().size());
  std::vector<char> seen(ends_.size(), 0);
  for (const auto& [id, e] : spec.edges) {
    if (e[0] == e[1]) throw ContractViolation("self-loop edge for item " + std::to_string(id));
    for (std::int64_t v : e) {
      if (v < 0 || v >= spec.vertices) throw ContractViolation("edge endpoint out of range for item " + std::to_string(id));
    }
    const std::size_t i = this->ground().index_of(id);
    ends_[i] = {static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1])};
    seen[i] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ContractViolation("graphic matroid: every item needs an edge");
  }
}

std::size_t GraphicMatroid::rank() const {
  DisjointSets sets(vertices_);
  std::size_t r = 0;
  for (const auto& e : ends_) r += sets.unite(e[0], e[1]) ? 1 : 0;
  return r;
}

bool GraphicMatroid::independent_indices(std::span<const std::size_t> members) const {
  DisjointSets sets(vertices_);
  for (std::size_t i : members) {
    if (!sets.unite(ends_[i][0], ends_[i][1])) return false;
  }
  return true;
}

std::shared_ptr<const Matroid> make_matroid(const MatroidSpec& spec, std::shared_ptr<const GroundSet> ground) {
  if (const auto* u = std::get_if<UniformSpec>(&spec)) {
    if (u->k <= 0) throw ContractViolation("uniform matroid needs k >= 1");
    return std::make_shared<UniformMatroid>(std::move(ground), static_cast<std::size_t>(u->k));
  }
  if (const auto* part = std::get_if<PartitionSpec>(&spec)) {
    return std::make_shared<PartitionMatroid>(std::move(ground), *part);
  }
  return std::make_shared<GraphicMatroid>(std::move(ground), std::get<GraphicSpec>(spec));
}

PMatroid::PMatroid(std::vector<std::shared_ptr<const Matroid>> members) : members_(std::move(members)) {
  if (members_.empty()) throw ContractViolation("a p-matroid needs at least one member");
  for (const auto& m : members_) {
    if (!m) throw ContractViolation("null matroid member");
    if (m->ground().size() != members_.front()->ground().size()) {
      throw ContractViolation("p-matroid members disagree on the ground set");
    }
  }
}

PMatroid PMatroid::from_instance(const Instance& inst) {
  const auto ids = inst.stream();
  auto ground = std::make_shared<const GroundSet>(ids);
  std::vector<std::shared_ptr<const Matroid>> members;
  for (const auto& spec : inst.matroids) members.push_back(make_matroid(spec, ground));
  return PMatroid(std::move(members));
}

bool PMatroid::feasible(std::span<const ItemId> set) const {
  return std::all_of(members_.begin(), members_.end(), [&](const auto& m) { return m->is_independent(set); });
}

std::size_t PMatroid::rank_bound(std::size_t guard) const {
  if (members_.size() == 1) return members_.front()->rank();

  const auto ids = ground().ids();
  if (ids.size() > guard) {
    throw GuardExceeded("rank of a " + std::to_string(p()) + "-matroid over " + std::to_string(ids.size()) +
                        " items exceeds the exact-search guard " + std::to_string(guard));
  }
  std::size_t ceiling = ids.size();
  for (const auto& m : members_) ceiling = std::min(ceiling, m->rank());

  // Depth-first over feasible sets in increasing id order; downward
  // closedness makes it safe to prune at the first infeasible extension.
  std::vector<ItemId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ItemId> current;
  std::size_t best = 0;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    best = std::max(best, current.size());
    if (best == ceiling) return;
    for (std::size_t i = start; i < sorted.size() && best < ceiling; ++i) {
      if (current.size() + (sorted.size() - i) <= best) return;
      current.push_back(sorted[i]);
      if (feasible(current)) self(self, i + 1);
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace robcore
