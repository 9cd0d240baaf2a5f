#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "robcore/instance.hpp"

namespace robcore {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing key \"" + key + "\"");
  return *it;
}

ItemId read_id(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0 ||
      value.get<std::int64_t>() > std::numeric_limits<ItemId>::max()) {
    fail(where + ": item id must be a non-negative 32-bit integer");
  }
  return static_cast<ItemId>(value.get<std::int64_t>());
}

ItemId read_id_key(const std::string& key, const std::string& where) {
  ItemId id = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
  if (ec != std::errc{} || ptr != key.data() + key.size() || key.empty()) {
    fail(where + ": object key \"" + key + "\" is not an item id");
  }
  return id;
}

std::int64_t read_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where + ": expected an integer");
  return value.get<std::int64_t>();
}

double read_number(const json& value, const std::string& where) {
  if (!value.is_number()) fail(where + ": expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(where + ": non-finite number");
  return x;
}

const json& read_array(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where + ": expected an array");
  return value;
}

const json& read_object(const json& value, const std::string& where) {
  if (!value.is_object()) fail(where + ": expected an object");
  return value;
}

FunctionSpec read_function(const json& fn) {
  const std::string kind = member(fn, "kind", "function").get<std::string>();
  if (kind == "modular") {
    ModularSpec spec;
    for (const auto& [key, value] : read_object(member(fn, "values", "function"), "function.values").items()) {
      spec.values[read_id_key(key, "function.values")] = read_number(value, "function.values");
    }
    return spec;
  }
  if (kind == "coverage") {
    CoverageSpec spec;
    for (const auto& w : read_array(member(fn, "universe_weights", "function"), "function.universe_weights")) {
      spec.universe_weights.push_back(read_number(w, "function.universe_weights"));
    }
    for (const auto& [key, value] : read_object(member(fn, "covers", "function"), "function.covers").items()) {
      auto& row = spec.covers[read_id_key(key, "function.covers")];
      for (const auto& e : read_array(value, "function.covers")) row.push_back(read_int(e, "function.covers"));
    }
    return spec;
  }
  if (kind == "facility") {
    FacilitySpec spec;
    spec.clients = read_int(member(fn, "clients", "function"), "function.clients");
    for (const auto& [key, value] : read_object(member(fn, "weights", "function"), "function.weights").items()) {
      auto& row = spec.weights[read_id_key(key, "function.weights")];
      for (const auto& w : read_array(value, "function.weights")) row.push_back(read_number(w, "function.weights"));
    }
    return spec;
  }
  fail("function: unknown kind \"" + kind + "\"");
}

MatroidSpec read_matroid(const json& m, std::size_t index) {
  const std::string where = "matroids[" + std::to_string(index) + "]";
  const json& kind_value = member(m, "kind", where);
  if (!kind_value.is_string()) fail(where + ".kind: expected a string");
  const std::string kind = kind_value.get<std::string>();
  if (kind == "uniform") {
    return UniformSpec{read_int(member(m, "k", where), where + ".k")};
  }
  if (kind == "partition") {
    PartitionSpec spec;
    for (const auto& group : read_array(member(m, "groups", where), where + ".groups")) {
      auto& ids = spec.groups.emplace_back();
      for (const auto& id : read_array(group, where + ".groups")) ids.push_back(read_id(id, where + ".groups"));
    }
    for (const auto& cap : read_array(member(m, "capacities", where), where + ".capacities")) {
      spec.capacities.push_back(read_int(cap, where + ".capacities"));
    }
    return spec;
  }
  if (kind == "graphic") {
    GraphicSpec spec;
    spec.vertices = read_int(member(m, "vertices", where), where + ".vertices");
    for (const auto& [key, value] : read_object(member(m, "edges", where), where + ".edges").items()) {
      const json& ends = read_array(value, where + ".edges");
      if (ends.size() != 2) fail(where + ".edges: an edge needs exactly two endpoints");
      spec.edges[read_id_key(key, where + ".edges")] = {read_int(ends[0], where + ".edges"),
                                                        read_int(ends[1], where + ".edges")};
    }
    return spec;
  }
  fail(where + ": unknown kind \"" + kind + "\"");
}

ordered_json number(double x) {
  if (std::nearbyint(x) == x && std::fabs(x) < 9.0e15) return static_cast<std::int64_t>(x);
  return x;
}

ordered_json write_function(const FunctionSpec& function) {
  ordered_json out;
  if (const auto* spec = std::get_if<ModularSpec>(&function)) {
    out["kind"] = "modular";
    ordered_json values = ordered_json::object();
    for (const auto& [id, v] : spec->values) values[std::to_string(id)] = number(v);
    out["values"] = std::move(values);
  } else if (const auto* spec = std::get_if<CoverageSpec>(&function)) {
    out["kind"] = "coverage";
    ordered_json weights = ordered_json::array();
    for (double w : spec->universe_weights) weights.push_back(number(w));
    out["universe_weights"] = std::move(weights);
    ordered_json covers = ordered_json::object();
    for (const auto& [id, row] : spec->covers) covers[std::to_string(id)] = row;
    out["covers"] = std::move(covers);
  } else {
    const auto& fac = std::get<FacilitySpec>(function);
    out["kind"] = "facility";
    out["clients"] = fac.clients;
    ordered_json weights = ordered_json::object();
    for (const auto& [id, row] : fac.weights) {
      ordered_json r = ordered_json::array();
      for (double w : row) r.push_back(number(w));
      weights[std::to_string(id)] = std::move(r);
    }
    out["weights"] = std::move(weights);
  }
  return out;
}

ordered_json write_matroid(const MatroidSpec& matroid) {
  ordered_json out;
  if (const auto* spec = std::get_if<UniformSpec>(&matroid)) {
    out["kind"] = "uniform";
    out["k"] = spec->k;
  } else if (const auto* spec = std::get_if<PartitionSpec>(&matroid)) {
    out["kind"] = "partition";
    out["groups"] = spec->groups;
    out["capacities"] = spec->capacities;
  } else {
    const auto& g = std::get<GraphicSpec>(matroid);
    out["kind"] = "graphic";
    out["vertices"] = g.vertices;
    ordered_json edges = ordered_json::object();
    for (const auto& [id, ends] : g.edges) edges[std::to_string(id)] = {ends[0], ends[1]};
    out["edges"] = std::move(edges);
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("instance is not valid JSON: ") + e.what());
  }
  Instance inst;
  try {
    if (!doc.is_object()) fail("instance: expected a top-level object");
    if (auto it = doc.find("name"); it != doc.end()) {
      if (!it->is_string()) fail("name: expected a string");
      inst.name = it->get<std::string>();
    }
    for (const auto& entry : read_array(member(doc, "items", "instance"), "items")) {
      inst.items.push_back({read_id(member(entry, "id", "items[]"), "items[].id"), inst.items.size()});
    }
    inst.function = read_function(member(doc, "function", "instance"));
    std::size_t index = 0;
    for (const auto& m : read_array(member(doc, "matroids", "instance"), "matroids")) {
      inst.matroids.push_back(read_matroid(m, index++));
    }
  } catch (const json::exception& e) {
    fail(std::string("instance has an unexpected shape: ") + e.what());
  }
  if (auto report = validate_instance(inst); !report.empty()) throw ValidationError(std::move(report));
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string emit_instance(const Instance& inst) {
  ordered_json doc;
  doc["name"] = inst.name;
  ordered_json items = ordered_json::array();
  for (const Item& item : inst.items) items.push_back({{"id", item.id}});
  doc["items"] = std::move(items);
  doc["function"] = write_function(inst.function);
  ordered_json matroids = ordered_json::array();
  for (const auto& m : inst.matroids) matroids.push_back(write_matroid(m));
  doc["matroids"] = std::move(matroids);
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write instance file " + path.string());
  out << emit_instance(inst);
  if (!out) throw IoError("failed writing instance file " + path.string());
}

}  // namespace robcore
