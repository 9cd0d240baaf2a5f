#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "robcore/harness.hpp"

namespace robcore {

namespace {

// Shortest round-trip representation; identical bytes for identical doubles.
std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, std::span<const TrialRecord> records, bool header) {
  if (header) {
    out << "trial,seed,eps,alpha,d,adversary,f_alg,f_opt_after,ratio,coreset_size,stream_queries,"
           "rebuild_queries\n";
  }
  for (const auto& r : records) {
    out << r.trial << ',' << r.seed << ',' << format_double(r.eps) << ',' << format_double(r.alpha) << ','
        << r.d << ',' << r.adversary << ',' << format_double(r.f_alg) << ',' << format_double(r.f_opt_after)
        << ',' << format_double(r.ratio) << ',' << r.coreset_size << ',' << r.stream_queries << ','
        << r.rebuild_queries << '\n';
  }
}

void write_json_lines(std::ostream& out, std::span<const TrialRecord> records) {
  for (const auto& r : records) {
    nlohmann::ordered_json line;
    line["trial"] = r.trial;
    line["seed"] = r.seed;
    line["eps"] = r.eps;
    line["alpha"] = r.alpha;
    line["d"] = r.d;
    line["adversary"] = r.adversary;
    line["f_alg"] = r.f_alg;
    line["f_opt_after"] = r.f_opt_after;
    line["ratio"] = r.ratio;
    line["coreset_size"] = r.coreset_size;
    line["coreset_bound"] = r.coreset_bound;
    line["stream_queries"] = r.stream_queries;
    line["rebuild_queries"] = r.rebuild_queries;
    line["deleted"] = r.deleted;
    line["weight_final"] = r.weight_final;
    line["weight_surviving"] = r.weight_surviving;
    line["weight_swapped"] = r.weight_swapped;
    line["elapsed_ms"] = r.elapsed_ms;
    out << line.dump() << '\n';
  }
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json-lines" || name == "jsonl") return ReportFormat::JsonLines;
  throw ContractViolation("unknown report format \"" + std::string(name) + "\"");
}

void emit_report(std::ostream& out, std::span<const TrialRecord> records, ReportFormat format, bool header) {
  if (format == ReportFormat::Csv) {
    write_csv(out, records, header);
  } else {
    write_json_lines(out, records);
  }
  if (!out) throw IoError("failed writing report");
}

void emit_report(const std::filesystem::path& path, std::span<const TrialRecord> records, ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write report to " + path.string());
  emit_report(out, records, format);
}

std::vector<TrialRecord> read_json_lines(std::istream& in) {
  std::vector<TrialRecord> records;
  std::string text;
  while (std::getline(in, text)) {
    if (text.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(text);
      TrialRecord r;
      j.at("trial").get_to(r.trial);
      j.at("seed").get_to(r.seed);
      j.at("eps").get_to(r.eps);
      j.at("alpha").get_to(r.alpha);
      j.at("d").get_to(r.d);
      j.at("adversary").get_to(r.adversary);
      j.at("f_alg").get_to(r.f_alg);
      j.at("f_opt_after").get_to(r.f_opt_after);
      j.at("ratio").get_to(r.ratio);
      j.at("coreset_size").get_to(r.coreset_size);
      j.at("coreset_bound").get_to(r.coreset_bound);
      j.at("stream_queries").get_to(r.stream_queries);
      j.at("rebuild_queries").get_to(r.rebuild_queries);
      j.at("deleted").get_to(r.deleted);
      j.at("weight_final").get_to(r.weight_final);
      j.at("weight_surviving").get_to(r.weight_surviving);
      j.at("weight_swapped").get_to(r.weight_swapped);
      j.at("elapsed_ms").get_to(r.elapsed_ms);
      records.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad report line: ") + e.what());
    }
  }
  return records;
}

}  // namespace robcore
