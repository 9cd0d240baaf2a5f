#include "robcore/instance.hpp"

#include <cmath>
#include <set>
#include <unordered_set>

namespace robcore {

std::vector<ItemId> Instance::stream() const {
  std::vector<ItemId> ids;
  ids.reserve(items.size());
  for (const Item& item : items) ids.push_back(item.id);
  return ids;
}

std::string to_string(const ValidationIssue& issue) {
  std::string out = issue.code;
  if (issue.item) out += " (item " + std::to_string(*issue.item) + ")";
  if (!issue.detail.empty()) out += ": " + issue.detail;
  return out;
}

namespace {

std::string join_report(const ValidationReport& report) {
  std::string out = "invalid instance:";
  for (const auto& issue : report) out += "\n  " + to_string(issue);
  return out;
}

class Checker {
 public:
  explicit Checker(const Instance& inst) {
    for (const Item& item : inst.items) {
      if (!declared_.insert(item.id).second) {
        add("duplicate id", item.id, "");
      }
    }
  }

  void add(std::string code, std::optional<ItemId> id, std::string detail) {
    report_.push_back({std::move(code), id, std::move(detail)});
  }

  // Reports a dangling reference and returns false when `id` is undeclared.
  bool require_declared(ItemId id, std::string_view where) {
    if (declared_.count(id)) return true;
    add("dangling reference", id, std::string(where));
    return false;
  }

  void check_weight(double w, ItemId id, std::string_view where) {
    if (!std::isfinite(w) || w < 0) add("negative weight", id, std::string(where));
  }

  void check(const ModularSpec& spec) {
    for (const auto& [id, value] : spec.values) {
      require_declared(id, "function.values");
      check_weight(value, id, "function.values");
    }
  }

  void check(const CoverageSpec& spec) {
    for (double w : spec.universe_weights) {
      if (!std::isfinite(w) || w < 0) add("negative weight", std::nullopt, "function.universe_weights");
    }
    const auto universe = static_cast<std::int64_t>(spec.universe_weights.size());
    for (const auto& [id, elements] : spec.covers) {
      require_declared(id, "function.covers");
      for (std::int64_t e : elements) {
        if (e < 0 || e >= universe) {
          add("universe index out of range", id, std::to_string(e));
        }
      }
    }
  }

  void check(const FacilitySpec& spec) {
    if (spec.clients < 1) add("non-positive client count", std::nullopt, std::to_string(spec.clients));
    for (const auto& [id, row] : spec.weights) {
      require_declared(id, "function.weights");
      if (static_cast<std::int64_t>(row.size()) != spec.clients) {
        add("client count mismatch", id, std::to_string(row.size()) + " weights");
      }
      for (double w : row) check_weight(w, id, "function.weights");
    }
  }

  void check(const UniformSpec& spec) {
    if (spec.k <= 0) add("non-positive capacity", std::nullopt, "uniform k=" + std::to_string(spec.k));
  }

  void check(const PartitionSpec& spec) {
    if (spec.groups.size() != spec.capacities.size()) {
      add("capacity count mismatch", std::nullopt,
          std::to_string(spec.groups.size()) + " groups, " + std::to_string(spec.capacities.size()) +
              " capacities");
    }
    for (std::size_t g = 0; g < spec.capacities.size(); ++g) {
      if (spec.capacities[g] <= 0) {
        add("non-positive capacity", std::nullopt,
            "group " + std::to_string(g) + " capacity " + std::to_string(spec.capacities[g]));
      }
    }
    std::unordered_set<ItemId> grouped;
    for (const auto& group : spec.groups) {
      for (ItemId id : group) {
        if (!require_declared(id, "partition group")) continue;
        if (!grouped.insert(id).second) add("item in multiple groups", id, "");
      }
    }
  }

  void check(const GraphicSpec& spec) {
    if (spec.vertices < 0) add("negative vertex count", std::nullopt, std::to_string(spec.vertices));
    for (const auto& [id, ends] : spec.edges) {
      require_declared(id, "graphic edges");
      if (ends[0] == ends[1]) add("self-loop edge", id, "vertex " + std::to_string(ends[0]));
      for (std::int64_t v : ends) {
        if (v < 0 || v >= spec.vertices) add("vertex out of range", id, std::to_string(v));
      }
    }
    for (ItemId id : declared_) {
      if (!spec.edges.count(id)) add("missing edge", id, "");
    }
  }

  ValidationReport take() { return std::move(report_); }

 private:
  std::set<ItemId> declared_;
  ValidationReport report_;
};

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(join_report(report)), report_(std::move(report)) {}

ValidationReport validate_instance(const Instance& inst) {
  Checker checker(inst);
  for (std::size_t i = 0; i < inst.items.size(); ++i) {
    if (inst.items[i].payload_index != i) {
      checker.add("payload index mismatch", inst.items[i].id, std::to_string(inst.items[i].payload_index));
    }
  }
  std::visit([&](const auto& spec) { checker.check(spec); }, inst.function);
  if (inst.matroids.empty()) checker.add("no matroids", std::nullopt, "p must be at least 1");
  for (const auto& m : inst.matroids) {
    std::visit([&](const auto& spec) { checker.check(spec); }, m);
  }
  return checker.take();
}

}  // namespace robcore
