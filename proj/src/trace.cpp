#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "robcore/robust.hpp"

namespace robcore {

void write_trace(std::ostream& out, std::span<const DrawRecord> log) {
  for (std::size_t i = 0; i < log.size(); ++i) {
    nlohmann::ordered_json line;
    line["draw"] = i;
    line["candidates"] = log[i].candidates;
    line["marginals"] = log[i].marginals;
    line["chosen"] = log[i].chosen;
    line["probability"] = log[i].probability;
    out << line.dump() << '\n';
  }
  if (!out) throw IoError("failed writing trace");
}

std::vector<DrawRecord> read_trace(std::istream& in) {
  std::vector<DrawRecord> log;
  std::string text;
  while (std::getline(in, text)) {
    if (text.empty()) continue;
    try {
      const auto line = nlohmann::json::parse(text);
      DrawRecord record;
      record.candidates = line.at("candidates").get<std::vector<ItemId>>();
      record.marginals = line.at("marginals").get<std::vector<double>>();
      record.chosen = line.at("chosen").get<ItemId>();
      record.probability = line.at("probability").get<double>();
      log.push_back(std::move(record));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad trace line: ") + e.what());
    }
  }
  return log;
}

}  // namespace robcore
