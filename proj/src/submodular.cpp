#include "robcore/submodular.hpp"

#include <algorithm>
#include <vector>

namespace robcore {

struct UtilityOracle::Payload {
  UtilityKind kind;
  GroundSet ground;
  std::vector<double> values;                      // modular: per item
  std::vector<double> universe_weights;            // coverage
  std::vector<std::vector<std::size_t>> covers;    // coverage: per item
  std::size_t clients = 0;                         // facility
  std::vector<double> client_weights;              // facility: n x clients, row-major
};

UtilityOracle UtilityOracle::from_instance(const Instance& inst) {
  const auto ids = inst.stream();
  auto payload = std::make_shared<Payload>(Payload{UtilityKind::Modular, GroundSet(ids), {}, {}, {}, 0, {}});
  const std::size_t n = ids.size();

  if (const auto* spec = std::get_if<ModularSpec>(&inst.function)) {
    payload->kind = UtilityKind::Modular;
    payload->values.assign(n, 0.0);
    for (const auto& [id, value] : spec->values) payload->values[payload->ground.index_of(id)] = value;
  } else if (const auto* spec = std::get_if<CoverageSpec>(&inst.function)) {
    payload->kind = UtilityKind::Coverage;
    payload->universe_weights = spec->universe_weights;
    payload->covers.assign(n, {});
    for (const auto& [id, elements] : spec->covers) {
      auto& row = payload->covers[payload->ground.index_of(id)];
      for (std::int64_t e : elements) {
        if (e < 0 || static_cast<std::size_t>(e) >= spec->universe_weights.size()) {
          throw ContractViolation("coverage element out of range for item " + std::to_string(id));
        }
        row.push_back(static_cast<std::size_t>(e));
      }
    }
  } else {
    const auto& fac = std::get<FacilitySpec>(inst.function);
    if (fac.clients < 1) throw ContractViolation("facility oracle needs at least one client");
    payload->kind = UtilityKind::Facility;
    payload->clients = static_cast<std::size_t>(fac.clients);
    payload->client_weights.assign(n * payload->clients, 0.0);
    for (const auto& [id, row] : fac.weights) {
      if (row.size() != payload->clients) {
        throw ContractViolation("facility row size mismatch for item " + std::to_string(id));
      }
      std::copy(row.begin(), row.end(),
                payload->client_weights.begin() +
                    static_cast<std::ptrdiff_t>(payload->ground.index_of(id) * payload->clients));
    }
  }
  return UtilityOracle(std::move(payload));
}

UtilityKind UtilityOracle::kind() const { return payload_->kind; }

const GroundSet& UtilityOracle::ground() const { return payload_->ground; }

UtilityOracle UtilityOracle::clone() const { return UtilityOracle(payload_); }

double UtilityOracle::evaluate(std::span<const ItemId> set) const {
  const Payload& p = *payload_;
  const auto members = p.ground.indices_of(set);
  double total = 0.0;
  switch (p.kind) {
    case UtilityKind::Modular:
      for (std::size_t i : members) total += p.values[i];
      break;
    case UtilityKind::Coverage: {
      std::vector<char> covered(p.universe_weights.size(), 0);
      for (std::size_t i : members) {
        for (std::size_t e : p.covers[i]) {
          if (!covered[e]) {
            covered[e] = 1;
            total += p.universe_weights[e];
          }
        }
      }
      break;
    }
    case UtilityKind::Facility: {
      if (members.empty()) break;
      for (std::size_t c = 0; c < p.clients; ++c) {
        double best = 0.0;
        for (std::size_t i : members) best = std::max(best, p.client_weights[i * p.clients + c]);
        total += best;
      }
      break;
    }
  }
  return total;
}

double UtilityOracle::eval(std::span<const ItemId> set) {
  ++queries_;
  return evaluate(set);
}

double UtilityOracle::marginal(ItemId v, std::span<const ItemId> set) {
  queries_ += 2;
  payload_->ground.index_of(v);
  const double base = evaluate(set);
  if (std::find(set.begin(), set.end(), v) != set.end()) return 0.0;
  std::vector<ItemId> extended(set.begin(), set.end());
  extended.push_back(v);
  return evaluate(extended) - base;
}

}  // namespace robcore
