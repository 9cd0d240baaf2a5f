#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "robcore/ground_set.hpp"
#include "robcore/instance.hpp"

namespace robcore {

enum class MatroidKind { Uniform, Partition, Graphic };

/// Largest ground set for which exact searches (rank of an intersection,
/// brute-force optimum) are attempted.
inline constexpr std::size_t kExactSearchGuard = 25;

/// One matroid over a ground set. Implementations only decide independence
/// of a de-duplicated, sorted list of dense indices; everything else is
/// derived here.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual MatroidKind kind() const = 0;

  /// Size of the largest independent set, read from the structure.
  virtual std::size_t rank() const = 0;

  /// Throws UnknownItem.
  bool is_independent(std::span<const ItemId> set) const;

  /// Whether S + v is independent. S must be independent and must not
  /// contain v; otherwise ContractViolation.
  bool can_extend(std::span<const ItemId> set, ItemId v) const;

  const GroundSet& ground() const { return *ground_; }

 protected:
  explicit Matroid(std::shared_ptr<const GroundSet> ground) : ground_(std::move(ground)) {}

  virtual bool independent_indices(std::span<const std::size_t> members) const = 0;

 private:
  std::shared_ptr<const GroundSet> ground_;
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::shared_ptr<const GroundSet> ground, std::size_t k);
  MatroidKind kind() const override { return MatroidKind::Uniform; }
  std::size_t rank() const override;

 private:
  bool independent_indices(std::span<const std::size_t> members) const override;
  std::size_t k_;
};

class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::shared_ptr<const GroundSet> ground, const PartitionSpec& spec);
  MatroidKind kind() const override { return MatroidKind::Partition; }
  std::size_t rank() const override;

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  bool independent_indices(std::span<const std::size_t> members) const override;
  std::vector<std::size_t> group_of_;  // kFree for ungrouped items
  std::vector<std::size_t> capacities_;
  std::vector<std::size_t> group_sizes_;
};

/// Items are edges; a set is independent iff it contains no cycle.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(std::shared_ptr<const GroundSet> ground, const GraphicSpec& spec);
  MatroidKind kind() const override { return MatroidKind::Graphic; }
  /// vertices - connected components of the full edge set.
  std::size_t rank() const override;

 private:
  bool independent_indices(std::span<const std::size_t> members) const override;
  std::size_t vertices_;
  std::vector<std::array<std::size_t, 2>> ends_;
};

std::shared_ptr<const Matroid> make_matroid(const MatroidSpec& spec, std::shared_ptr<const GroundSet> ground);

/// Intersection of p >= 1 matroids over one ground set.
class PMatroid {
 public:
  explicit PMatroid(std::vector<std::shared_ptr<const Matroid>> members);
  static PMatroid from_instance(const Instance& inst);

  std::size_t p() const { return members_.size(); }
  const Matroid& member(std::size_t j) const { return *members_.at(j); }
  const GroundSet& ground() const { return members_.front()->ground(); }

  /// Independent in every member. Throws UnknownItem.
  bool feasible(std::span<const ItemId> set) const;

  /// Exact maximum feasible-set size. Analytic for p = 1; for p > 1 an
  /// exhaustive search that throws GuardExceeded when n > guard.
  std::size_t rank_bound(std::size_t guard = kExactSearchGuard) const;

 private:
  std::vector<std::shared_ptr<const Matroid>> members_;
};

}  // namespace robcore
