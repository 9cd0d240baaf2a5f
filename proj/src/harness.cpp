#include "robcore/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "robcore/exchange.hpp"
#include "robcore/reference.hpp"

namespace robcore {

void TrialConfig::validate() const {
  if (!instance) throw ContractViolation("trial config has no instance");
  if (!(alpha > 0.0)) throw ContractViolation("alpha must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw ContractViolation("eps must lie in (0, 1)");
  if (trials < 1) throw ContractViolation("trial count must be at least 1");
  if (threads < 1) throw ContractViolation("thread count must be at least 1");
}

std::vector<ItemId> TrialConfig::stream() const {
  std::vector<ItemId> ids = instance->stream();
  if (order == StreamOrder::Shuffled) {
    Rng rng(shuffle_seed);
    rng.shuffle(std::span<ItemId>(ids));
  }
  return ids;
}

TrialContext prepare_trial_context(const TrialConfig& cfg) {
  cfg.validate();
  const Instance& inst = *cfg.instance;
  const PMatroid pm = PMatroid::from_instance(inst);
  UtilityOracle oracle = UtilityOracle::from_instance(inst);

  TrialContext ctx;
  ctx.stream = cfg.stream();
  ctx.rank = pm.rank_bound(cfg.exact_guard);
  ctx.deletions = make_deletion_set(cfg.adversary, inst, oracle, pm, cfg.d);
  const ItemSet survivors = set_minus(make_set(inst.stream()), ctx.deletions.ids);
  ctx.f_opt_after = brute_force_opt(oracle, pm, survivors, cfg.exact_guard).value;
  return ctx;
}

TrialRecord run_trial(const TrialConfig& cfg, std::size_t trial_index) {
  return run_trial(cfg, prepare_trial_context(cfg), trial_index);
}

TrialRecord run_trial(const TrialConfig& cfg, const TrialContext& ctx, std::size_t trial_index, DrawSource* draws,
                      TrialArtifacts* artifacts) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const Instance& inst = *cfg.instance;
  const PMatroid pm = PMatroid::from_instance(inst);
  const UtilityOracle prototype = UtilityOracle::from_instance(inst);

  TrialRecord record;
  record.trial = trial_index;
  record.seed = derive_seed(cfg.seed, trial_index);
  record.eps = cfg.eps;
  record.alpha = cfg.alpha;
  record.d = cfg.d;
  record.adversary = cfg.adversary.to_string();
  record.deleted = ctx.deletions.ids.size();

  const RexcParams params{cfg.alpha, cfg.eps, cfg.d};
  UtilityOracle stream_oracle = prototype.clone();
  SeededDrawSource seeded(record.seed);
  const RexcOutcome outcome = rexc_run(stream_oracle, pm, ctx.stream, params, draws ? *draws : seeded);
  record.stream_queries = stream_oracle.query_count();

  const CoresetReport core = coreset(outcome, ctx.rank);
  record.coreset_size = core.size;
  record.coreset_bound = core.bound;

  UtilityOracle rebuild_oracle = prototype.clone();
  const RebuildResult rebuilt = rebuild_after_deletion(outcome, pm, rebuild_oracle, ctx.deletions, cfg.alpha);
  record.rebuild_queries = rebuild_oracle.query_count();

  UtilityOracle report_oracle = prototype.clone();
  record.f_alg = report_oracle.eval(rebuilt.solution);
  record.f_opt_after = ctx.f_opt_after;
  record.ratio = record.f_opt_after == 0.0 ? 1.0 : record.f_alg / record.f_opt_after;
  record.weight_final = rebuilt.state.solution_weight();
  record.weight_surviving = rebuilt.state.weight_of(rebuilt.solution);
  record.weight_swapped = rebuilt.state.swapped_weight();

  if (artifacts) {
    artifacts->draw_log = outcome.draw_log;
    artifacts->coreset = core.items;
    artifacts->solution = rebuilt.solution;
  }
  record.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

double approximation_floor(double alpha, double eps, std::size_t p) {
  return (1.0 - (1.0 + 1.0 / alpha) * eps) / c_alpha(alpha, p);
}

ExperimentSummary summarize(std::vector<TrialRecord> records, const TrialConfig& cfg, std::size_t rank) {
  ExperimentSummary summary;
  summary.theoretical_floor = approximation_floor(cfg.alpha, cfg.eps, cfg.instance->p());
  summary.rank = rank;
  summary.buffer_capacity = buffer_capacity(cfg.d, cfg.eps);
  if (!records.empty()) {
    summary.min_ratio = records.front().ratio;
    for (const auto& r : records) {
      summary.mean_ratio += r.ratio;
      summary.min_ratio = std::min(summary.min_ratio, r.ratio);
      summary.mean_coreset_size += static_cast<double>(r.coreset_size);
      summary.max_stream_queries = std::max(summary.max_stream_queries, r.stream_queries);
      summary.max_rebuild_queries = std::max(summary.max_rebuild_queries, r.rebuild_queries);
      summary.mean_weight_final += r.weight_final;
      summary.mean_weight_surviving += r.weight_surviving;
    }
    const auto count = static_cast<double>(records.size());
    summary.mean_ratio /= count;
    summary.mean_coreset_size /= count;
    summary.mean_weight_final /= count;
    summary.mean_weight_surviving /= count;
  }
  summary.records = std::move(records);
  return summary;
}

ExperimentSummary run_experiment(const TrialConfig& cfg) {
  const TrialContext ctx = prepare_trial_context(cfg);
  std::vector<TrialRecord> records(cfg.trials);

  const std::size_t workers = std::min(cfg.threads, cfg.trials);
  if (workers <= 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) records[i] = run_trial(cfg, ctx, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cfg.trials;) {
          try {
            records[i] = run_trial(cfg, ctx, i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = cfg.trials;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return summarize(std::move(records), cfg, ctx.rank);
}

}  // namespace robcore
