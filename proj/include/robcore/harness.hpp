#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "robcore/adversary.hpp"
#include "robcore/instance.hpp"
#include "robcore/robust.hpp"

namespace robcore {

enum class StreamOrder { AsGiven, Shuffled };

struct TrialConfig {
  std::shared_ptr<const Instance> instance;
  double alpha = 1.0;
  double eps = 0.25;
  std::size_t d = 0;
  AdversaryModel adversary;
  std::uint64_t seed = 0;          // master algorithm seed
  std::size_t trials = 1;
  StreamOrder order = StreamOrder::AsGiven;
  std::uint64_t shuffle_seed = 0;  // used when order == Shuffled
  std::size_t threads = 1;
  std::size_t exact_guard = kExactSearchGuard;

  /// Throws ContractViolation naming the first bad field.
  void validate() const;
  std::vector<ItemId> stream() const;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  double alpha = 0.0;
  std::size_t d = 0;
  std::string adversary;
  double f_alg = 0.0;
  double f_opt_after = 0.0;
  double ratio = 0.0;  // f_alg / f_opt_after, 1 when f_opt_after is 0
  std::size_t coreset_size = 0;
  std::size_t coreset_bound = 0;
  std::uint64_t stream_queries = 0;
  std::uint64_t rebuild_queries = 0;
  std::size_t deleted = 0;
  double weight_final = 0.0;      // w(S2)
  double weight_surviving = 0.0;  // w(S2 \ D)
  double weight_swapped = 0.0;    // w(K) over both stages
  double elapsed_ms = 0.0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Everything a trial needs that does not depend on the algorithm seed:
/// the stream, the rank, the deletion set and the exact optimum after
/// deletion. Built before any algorithm randomness is drawn.
struct TrialContext {
  std::vector<ItemId> stream;
  std::size_t rank = 0;
  DeletionSet deletions;
  double f_opt_after = 0.0;
};

TrialContext prepare_trial_context(const TrialConfig& cfg);

/// Optional by-products of a trial.
struct TrialArtifacts {
  std::vector<DrawRecord> draw_log;
  ItemSet coreset;
  ItemSet solution;
};

/// Stage 1 (robust streaming with seed derive_seed(cfg.seed, index)),
/// stage 2 (the static deletion set) and stage 3 (rebuild).
TrialRecord run_trial(const TrialConfig& cfg, std::size_t trial_index);

/// Same, with a prepared context; `draws` overrides the seeded source.
TrialRecord run_trial(const TrialConfig& cfg, const TrialContext& ctx, std::size_t trial_index,
                      DrawSource* draws = nullptr, TrialArtifacts* artifacts = nullptr);

struct ExperimentSummary {
  std::vector<TrialRecord> records;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double mean_coreset_size = 0.0;
  std::uint64_t max_stream_queries = 0;
  std::uint64_t max_rebuild_queries = 0;
  double mean_weight_final = 0.0;
  double mean_weight_surviving = 0.0;
  double theoretical_floor = 0.0;  // (1 - (1 + 1/α)ε) / c_alpha(α, p)
  std::size_t rank = 0;
  std::size_t buffer_capacity = 0;
};

/// (1 - (1 + 1/alpha) eps) / c_alpha(alpha, p).
double approximation_floor(double alpha, double eps, std::size_t p);

ExperimentSummary summarize(std::vector<TrialRecord> records, const TrialConfig& cfg, std::size_t rank);

/// Runs cfg.trials trials (on cfg.threads threads) and aggregates them in
/// trial order.
ExperimentSummary run_experiment(const TrialConfig& cfg);

enum class ReportFormat { Csv, JsonLines };

ReportFormat parse_report_format(std::string_view name);

/// CSV columns: trial,seed,eps,alpha,d,adversary,f_alg,f_opt_after,ratio,
/// coreset_size,stream_queries,rebuild_queries. JSON lines carry every
/// TrialRecord field.
void emit_report(std::ostream& out, std::span<const TrialRecord> records, ReportFormat format,
                 bool header = true);
void emit_report(const std::filesystem::path& path, std::span<const TrialRecord> records, ReportFormat format);

std::vector<TrialRecord> read_json_lines(std::istream& in);

}  // namespace robcore
