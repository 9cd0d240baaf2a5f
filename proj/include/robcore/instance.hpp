#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "robcore/errors.hpp"
#include "robcore/item_set.hpp"

namespace robcore {

/// A streamed element. `payload_index` is the item's position in the
/// instance's item list, which is also the row used by payload tables.
struct Item {
  ItemId id = 0;
  std::size_t payload_index = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

// Utility function descriptions. Missing entries mean "contributes nothing".

struct ModularSpec {
  std::map<ItemId, double> values;
  friend bool operator==(const ModularSpec&, const ModularSpec&) = default;
};

struct CoverageSpec {
  std::vector<double> universe_weights;
  std::map<ItemId, std::vector<std::int64_t>> covers;
  friend bool operator==(const CoverageSpec&, const CoverageSpec&) = default;
};

struct FacilitySpec {
  std::int64_t clients = 0;
  std::map<ItemId, std::vector<double>> weights;
  friend bool operator==(const FacilitySpec&, const FacilitySpec&) = default;
};

using FunctionSpec = std::variant<ModularSpec, CoverageSpec, FacilitySpec>;

// Matroid descriptions.

struct UniformSpec {
  std::int64_t k = 0;
  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};

/// Items listed in no group are unconstrained by this member.
struct PartitionSpec {
  std::vector<std::vector<ItemId>> groups;
  std::vector<std::int64_t> capacities;
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

/// Every item must be an edge between two distinct vertices in [0, vertices).
struct GraphicSpec {
  std::int64_t vertices = 0;
  std::map<ItemId, std::array<std::int64_t, 2>> edges;
  friend bool operator==(const GraphicSpec&, const GraphicSpec&) = default;
};

using MatroidSpec = std::variant<UniformSpec, PartitionSpec, GraphicSpec>;

struct Instance {
  std::string name;
  std::vector<Item> items;  // order is the default stream order
  FunctionSpec function;
  std::vector<MatroidSpec> matroids;

  std::size_t n() const { return items.size(); }
  std::size_t p() const { return matroids.size(); }
  /// Item ids in declaration order.
  std::vector<ItemId> stream() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct ValidationIssue {
  std::string code;  // e.g. "duplicate id", "dangling reference"
  std::optional<ItemId> item;
  std::string detail;
};

using ValidationReport = std::vector<ValidationIssue>;

std::string to_string(const ValidationIssue& issue);

/// Thrown by load_instance / parse_instance when validation finds issues.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Empty iff every instance invariant holds.
ValidationReport validate_instance(const Instance& inst);

/// Parses the JSON instance format (docs/instance_format.md) and validates.
/// Throws ParseError or ValidationError.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

/// Inverse of parse_instance on validated instances.
std::string emit_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::filesystem::path& path);

// Synthetic instances.

enum class GeneratorKind { ModularUniform, CoverageRandomBipartite, FacilityRandom };

struct GeneratorConfig {
  GeneratorKind kind = GeneratorKind::ModularUniform;
  std::size_t n = 10;
  std::int64_t k = 2;
  std::size_t universe = 20;    // coverage only
  std::size_t cover_size = 4;   // coverage: each item covers 1..cover_size elements
  std::size_t clients = 5;      // facility only
  std::int64_t max_weight = 10; // weights are drawn uniformly from 1..max_weight
  /// When > 0 a partition member is added (p = 2): a seeded permutation of
  /// the items is dealt round-robin into this many groups.
  std::size_t partition_groups = 0;
  std::int64_t partition_capacity = 1;
  std::size_t max_items = 100000;
};

std::string_view to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view name);

/// Parses "kind:key=value,key=value", e.g. "coverage-random-bipartite:n=24,k=4,universe=30".
/// A `seed` key, if present, is returned separately.
std::pair<GeneratorConfig, std::uint64_t> parse_generator_spec(std::string_view spec);

/// Deterministic in (config, seed). Item ids are 0..n-1; the item list is a
/// seeded shuffle of them. Throws ContractViolation for bad sizes.
Instance generate_synthetic(const GeneratorConfig& config, std::uint64_t seed);

}  // namespace robcore
