#include <algorithm>
#include <charconv>
#include <numeric>

#include "robcore/instance.hpp"
#include "robcore/random.hpp"

namespace robcore {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::ModularUniform: return "modular-uniform";
    case GeneratorKind::CoverageRandomBipartite: return "coverage-random-bipartite";
    case GeneratorKind::FacilityRandom: return "facility-random";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::ModularUniform, GeneratorKind::CoverageRandomBipartite,
                    GeneratorKind::FacilityRandom}) {
    if (to_string(kind) == name) return kind;
  }
  throw ContractViolation("unsupported generator kind \"" + std::string(name) + "\"");
}

namespace {

std::uint64_t parse_unsigned(std::string_view text, std::string_view key) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ContractViolation("generator parameter " + std::string(key) + " needs a non-negative integer, got \"" +
                            std::string(text) + "\"");
  }
  return value;
}

}  // namespace

std::pair<GeneratorConfig, std::uint64_t> parse_generator_spec(std::string_view spec) {
  GeneratorConfig config;
  std::uint64_t seed = 1;
  const auto colon = spec.find(':');
  config.kind = parse_generator_kind(spec.substr(0, colon));
  if (colon == std::string_view::npos) return {config, seed};

  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view pair = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos) {
      throw ContractViolation("generator parameter \"" + std::string(pair) + "\" is not key=value");
    }
    const std::string_view key = pair.substr(0, eq);
    const std::uint64_t value = parse_unsigned(pair.substr(eq + 1), key);
    if (key == "n") config.n = value;
    else if (key == "k") config.k = static_cast<std::int64_t>(value);
    else if (key == "universe") config.universe = value;
    else if (key == "cover") config.cover_size = value;
    else if (key == "clients") config.clients = value;
    else if (key == "max_weight") config.max_weight = static_cast<std::int64_t>(value);
    else if (key == "groups") config.partition_groups = value;
    else if (key == "capacity") config.partition_capacity = static_cast<std::int64_t>(value);
    else if (key == "seed") seed = value;
    else throw ContractViolation("unknown generator parameter \"" + std::string(key) + "\"");
  }
  return {config, seed};
}

Instance generate_synthetic(const GeneratorConfig& config, std::uint64_t seed) {
  if (config.n > config.max_items) {
    throw ContractViolation("generator size " + std::to_string(config.n) + " exceeds limit " +
                            std::to_string(config.max_items));
  }
  if (config.k <= 0) throw ContractViolation("generator needs k >= 1");
  if (config.max_weight < 1) throw ContractViolation("generator needs max_weight >= 1");
  if (config.partition_groups > 0 && config.partition_capacity < 1) {
    throw ContractViolation("generator needs partition capacity >= 1");
  }

  Rng rng(seed);
  Instance inst;
  inst.name = std::string(to_string(config.kind)) + "-n" + std::to_string(config.n) + "-s" + std::to_string(seed);

  std::vector<ItemId> order(config.n);
  std::iota(order.begin(), order.end(), ItemId{0});
  rng.shuffle(std::span<ItemId>(order));
  for (ItemId id : order) inst.items.push_back({id, inst.items.size()});

  auto weight = [&] { return static_cast<double>(rng.between(1, config.max_weight)); };

  switch (config.kind) {
    case GeneratorKind::ModularUniform: {
      ModularSpec spec;
      for (ItemId id = 0; id < config.n; ++id) spec.values[id] = weight();
      inst.function = std::move(spec);
      break;
    }
    case GeneratorKind::CoverageRandomBipartite: {
      if (config.universe < 1 || config.cover_size < 1) {
        throw ContractViolation("coverage generator needs universe >= 1 and cover >= 1");
      }
      CoverageSpec spec;
      for (std::size_t e = 0; e < config.universe; ++e) spec.universe_weights.push_back(weight());
      std::vector<std::int64_t> elements(config.universe);
      std::iota(elements.begin(), elements.end(), std::int64_t{0});
      const auto max_cover = static_cast<std::int64_t>(std::min(config.cover_size, config.universe));
      for (ItemId id = 0; id < config.n; ++id) {
        const auto size = static_cast<std::size_t>(rng.between(1, max_cover));
        // Partial Fisher-Yates: the first `size` slots become a uniform sample.
        for (std::size_t i = 0; i < size; ++i) {
          std::swap(elements[i], elements[i + rng.below(elements.size() - i)]);
        }
        std::vector<std::int64_t> row(elements.begin(), elements.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(row.begin(), row.end());
        spec.covers[id] = std::move(row);
      }
      inst.function = std::move(spec);
      break;
    }
    case GeneratorKind::FacilityRandom: {
      if (config.clients < 1) throw ContractViolation("facility generator needs clients >= 1");
      FacilitySpec spec;
      spec.clients = static_cast<std::int64_t>(config.clients);
      for (ItemId id = 0; id < config.n; ++id) {
        auto& row = spec.weights[id];
        for (std::size_t c = 0; c < config.clients; ++c) row.push_back(weight());
      }
      inst.function = std::move(spec);
      break;
    }
  }

  inst.matroids.push_back(UniformSpec{config.k});
  if (config.partition_groups > 0) {
    PartitionSpec spec;
    spec.groups.resize(config.partition_groups);
    spec.capacities.assign(config.partition_groups, config.partition_capacity);
    std::vector<ItemId> deal(config.n);
    std::iota(deal.begin(), deal.end(), ItemId{0});
    rng.shuffle(std::span<ItemId>(deal));
    for (std::size_t i = 0; i < deal.size(); ++i) spec.groups[i % config.partition_groups].push_back(deal[i]);
    for (auto& group : spec.groups) std::sort(group.begin(), group.end());
    inst.matroids.push_back(std::move(spec));
  }
  return inst;
}

}  // namespace robcore
