// robcore command line: run, sweep, oracle, validate, generate.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "robcore/errors.hpp"
#include "robcore/harness.hpp"
#include "robcore/instance.hpp"
#include "robcore/matroid.hpp"
#include "robcore/reference.hpp"
#include "robcore/submodular.hpp"

using namespace robcore;

namespace {

struct SourceOptions {
  std::string instance_path;
  std::string gen;
  std::string order = "given";
  std::uint64_t shuffle_seed = 0;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  auto* inst = cmd->add_option("--instance", src.instance_path, "Instance file (JSON)");
  auto* gen = cmd->add_option("--gen", src.gen, "Generator, e.g. coverage-random-bipartite:n=24,k=4,seed=3");
  inst->excludes(gen);
  gen->excludes(inst);
}

void add_order_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--order", src.order, "Stream order")->check(CLI::IsMember({"given", "shuffled"}));
  cmd->add_option("--shuffle-seed", src.shuffle_seed, "Seed for --order shuffled");
}

std::shared_ptr<const Instance> load_source(const SourceOptions& src) {
  if (!src.instance_path.empty()) return std::make_shared<const Instance>(load_instance(src.instance_path));
  if (!src.gen.empty()) {
    const auto [config, seed] = parse_generator_spec(src.gen);
    return std::make_shared<const Instance>(generate_synthetic(config, seed));
  }
  throw ContractViolation("one of --instance or --gen is required");
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_set(const ItemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

struct RunOptions {
  SourceOptions src;
  double alpha = 1.0;
  std::vector<double> eps{0.25};
  std::vector<std::size_t> d{0};
  std::string adversary = "top";
  std::uint64_t adversary_seed = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::size_t threads = 1;
  std::size_t guard = kExactSearchGuard;
  std::string out = "-";
  std::string format = "csv";
  std::string trace;
  bool quiet = false;
};

void add_run_options(CLI::App* cmd, RunOptions& opt, bool sweep) {
  add_source_options(cmd, opt.src);
  add_order_options(cmd, opt.src);
  cmd->add_option("--alpha", opt.alpha, "Exchange threshold alpha > 0")->capture_default_str();
  if (sweep) {
    cmd->add_option("--eps", opt.eps, "Comma-separated eps values in (0,1)")->delimiter(',')->required();
    cmd->add_option("--d", opt.d, "Comma-separated deletion budgets")->delimiter(',')->required();
  } else {
    cmd->add_option("--eps", opt.eps, "Buffer parameter in (0,1)")->expected(1)->default_str("0.25");
    cmd->add_option("--d", opt.d, "Deletion budget")->expected(1)->default_str("0");
    cmd->add_option("--trace", opt.trace, "Write the draw log of trial 0 as JSON lines");
  }
  cmd->add_option("--adversary", opt.adversary, "fixed:<id,id,...> | random | top | greedy")->capture_default_str();
  cmd->add_option("--adversary-seed", opt.adversary_seed, "Seed for the random adversary");
  cmd->add_option("--seed", opt.seed, "Master algorithm seed")->capture_default_str();
  cmd->add_option("--trials", opt.trials, "Trials per configuration")->capture_default_str();
  cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  cmd->add_option("--guard", opt.guard, "Largest ground set for exact search")->capture_default_str();
  cmd->add_option("--out", opt.out, "Report destination, - for stdout")->capture_default_str();
  cmd->add_option("--format", opt.format, "csv | json-lines")->capture_default_str();
  cmd->add_flag("-q,--quiet", opt.quiet, "Do not print the summary on stderr");
}

TrialConfig make_config(const RunOptions& opt, std::shared_ptr<const Instance> inst, double eps, std::size_t d) {
  TrialConfig cfg;
  cfg.instance = std::move(inst);
  cfg.alpha = opt.alpha;
  cfg.eps = eps;
  cfg.d = d;
  cfg.adversary = AdversaryModel::parse(opt.adversary, opt.adversary_seed);
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.order = opt.src.order == "shuffled" ? StreamOrder::Shuffled : StreamOrder::AsGiven;
  cfg.shuffle_seed = opt.src.shuffle_seed;
  cfg.threads = opt.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opt.threads;
  cfg.exact_guard = opt.guard;
  cfg.validate();
  return cfg;
}

void print_summary(const TrialConfig& cfg, const ExperimentSummary& s) {
  std::cerr << "eps=" << format_number(cfg.eps) << " d=" << cfg.d << " alpha=" << format_number(cfg.alpha)
            << " trials=" << s.records.size() << " mean_ratio=" << format_number(s.mean_ratio)
            << " min_ratio=" << format_number(s.min_ratio) << " floor=" << format_number(s.theoretical_floor)
            << " mean_coreset=" << format_number(s.mean_coreset_size) << " bound=" << s.rank + s.buffer_capacity
            << " max_stream_queries=" << s.max_stream_queries << '\n';
}

void write_report(const RunOptions& opt, const std::vector<TrialRecord>& records) {
  const auto format = parse_report_format(opt.format);
  if (opt.out == "-") {
    emit_report(std::cout, records, format);
    std::cout.flush();
  } else {
    emit_report(std::filesystem::path(opt.out), records, format);
  }
}

int cmd_run(const RunOptions& opt) {
  const auto format = parse_report_format(opt.format);
  (void)format;  // reject a bad --format before any work
  auto cfg = make_config(opt, load_source(opt.src), opt.eps.front(), opt.d.front());
  const auto summary = run_experiment(cfg);
  if (!opt.trace.empty()) {
    TrialArtifacts artifacts;
    run_trial(cfg, prepare_trial_context(cfg), 0, nullptr, &artifacts);
    std::ofstream out(opt.trace);
    if (!out) throw IoError("cannot open " + opt.trace + " for writing");
    write_trace(out, artifacts.draw_log);
    if (!out) throw IoError("failed writing " + opt.trace);
  }
  write_report(opt, summary.records);
  if (!opt.quiet) print_summary(cfg, summary);
  return 0;
}

int cmd_sweep(const RunOptions& opt) {
  (void)parse_report_format(opt.format);
  const auto inst = load_source(opt.src);
  std::vector<TrialConfig> configs;
  for (double eps : opt.eps) {
    for (std::size_t d : opt.d) configs.push_back(make_config(opt, inst, eps, d));
  }
  std::vector<TrialRecord> all;
  for (const auto& cfg : configs) {
    const auto summary = run_experiment(cfg);
    all.insert(all.end(), summary.records.begin(), summary.records.end());
    if (!opt.quiet) print_summary(cfg, summary);
  }
  write_report(opt, all);
  return 0;
}

int cmd_oracle(const SourceOptions& src, const std::vector<ItemId>& deleted, std::size_t guard) {
  const auto inst = load_source(src);
  const auto pm = PMatroid::from_instance(*inst);
  auto oracle = UtilityOracle::from_instance(*inst);
  for (ItemId id : deleted) (void)oracle.ground().index_of(id);
  const ItemSet removed = make_set(deleted);
  std::vector<ItemId> survivors;
  for (ItemId id : inst->stream()) {
    if (!contains(removed, id)) survivors.push_back(id);
  }
  const auto opt = brute_force_opt(oracle, pm, survivors, guard);
  std::cout << "S* " << format_set(opt.set) << "\nf* " << format_number(opt.value) << '\n';
  return 0;
}

int cmd_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream text;
  text << in.rdbuf();
  try {
    const auto inst = parse_instance(text.str());
    std::cout << "ok: " << inst.n() << " items, " << inst.p() << " matroid(s)\n";
    return 0;
  } catch (const ValidationError& err) {
    for (const auto& issue : err.report()) std::cout << "invalid: " << to_string(issue) << '\n';
    std::cerr << "robcore: " << path << ": " << err.report().size() << " validation issue(s)\n";
    return 1;
  }
}

int cmd_generate(const std::string& gen, const std::string& out) {
  const auto [config, seed] = parse_generator_spec(gen);
  const auto inst = generate_synthetic(config, seed);
  if (out == "-") {
    std::cout << emit_instance(inst) << '\n';
  } else {
    save_instance(inst, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deletion-robust streaming submodular maximization under p-matroid constraints"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run one experiment and emit per-trial records");
  add_run_options(run, run_opt, false);

  RunOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Run the cartesian product of --eps and --d lists");
  add_run_options(sweep, sweep_opt, true);

  SourceOptions oracle_src;
  std::vector<ItemId> oracle_delete;
  std::size_t oracle_guard = kExactSearchGuard;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum over the items that survive --delete");
  add_source_options(oracle, oracle_src);
  oracle->add_option("--delete", oracle_delete, "Comma-separated ids to delete")->delimiter(',');
  oracle->add_option("--guard", oracle_guard, "Largest ground set for exact search")->capture_default_str();

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("--instance,instance", validate_path, "Instance file (JSON)")->required();

  std::string gen_spec;
  std::string gen_out = "-";
  auto* generate = app.add_subcommand("generate", "Write a synthetic instance file");
  generate->add_option("--gen", gen_spec, "Generator spec")->required();
  generate->add_option("--out", gen_out, "Destination, - for stdout")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_opt);
    if (*sweep) return cmd_sweep(sweep_opt);
    if (*oracle) return cmd_oracle(oracle_src, oracle_delete, oracle_guard);
    if (*validate) return cmd_validate(validate_path);
    if (*generate) return cmd_generate(gen_spec, gen_out);
  } catch (const ValidationError& err) {
    std::cerr << "robcore: error: " << err.what() << '\n';
    for (const auto& issue : err.report()) std::cerr << "  " << to_string(issue) << '\n';
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "robcore: error: " << err.what() << '\n';
    return 1;
  }
  return 1;
}
