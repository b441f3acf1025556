#include "dralns/harness/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <tuple>
#include <type_traits>

#include "dralns/alns/vanilla.hpp"
#include "dralns/common/csv.hpp"
#include "dralns/opswtw/search.hpp"
#include "dralns/opswtw/simulate.hpp"
#include "dralns/policy/deploy.hpp"
#include "dralns/routing/search.hpp"

namespace dralns::harness {
namespace {

opswtw::SearchConfig opswtw_config(const env::EnvConfig& env) {
  opswtw::SearchConfig sc;
  sc.repair_samples = env.repair_eval_samples;
  sc.accept_samples = env.accept_eval_samples;
  return sc;
}

// Calls f with a fresh search problem for instance `index` of `set`.
template <typename F>
RunOutput with_problem(const RunConfig& config, const InstanceSet& set, std::size_t index, F&& f) {
  if (set.problem != config.problem) {
    throw std::invalid_argument("instance set does not match the configured problem");
  }
  if (set.problem == ProblemKind::Opswtw) {
    return f(opswtw::OpswtwSearch(set.opswtw.at(index), opswtw_config(config.env)));
  }
  return f(routing::RoutingSearch(set.routing.at(index)));
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

}  // namespace

alns::Sense problem_sense(ProblemKind problem) {
  return problem == ProblemKind::Opswtw ? alns::Sense::Maximize : alns::Sense::Minimize;
}

policy::Fingerprint fingerprint_for(ProblemKind problem) {
  if (problem == ProblemKind::Opswtw) {
    const opswtw::SearchConfig sc;
    return {"opswtw", static_cast<int>(sc.destroy_ops.size()), static_cast<int>(sc.repair_ops.size())};
  }
  const routing::SearchConfig sc;
  return {std::string(to_string(problem)), static_cast<int>(sc.destroy_ops.size()),
          static_cast<int>(sc.repair_ops.size())};
}

const policy::Checkpoint& MethodRunner::checkpoint(const std::string& path) {
  auto it = checkpoints_.find(path);
  if (it == checkpoints_.end()) {
    policy::Checkpoint ckpt = policy::load_checkpoint(path);
    policy::check_fingerprint(ckpt, fingerprint_for(config_.problem), allow_transfer_);
    it = checkpoints_.emplace(path, std::move(ckpt)).first;
  }
  return it->second;
}

RunOutput MethodRunner::run(const MethodSpec& method, const InstanceSet& set, std::size_t index,
                            std::uint64_t seed) {
  const policy::Checkpoint* ckpt = method.kind == MethodKind::Dr ? &checkpoint(method.checkpoint) : nullptr;
  const std::string& id = set.ids.at(index);

  return with_problem(config_, set, index, [&](auto problem) {
    using P = decltype(problem);
    RunOutput out;
    Rng rng = make_rng(seed, "search", index);

    double t_start = method.alns.t_start;
    if (method.auto_t_start) {
      P probe = problem;
      probe.reset(derive_seed(seed, "t-start/noise", index));
      Rng t_rng = make_rng(seed, "t-start", index);
      t_start = alns::auto_t_start(probe, t_rng);
    }

    typename P::Solution best;
    if (method.kind == MethodKind::Vanilla) {
      alns::AlnsParams params = method.alns;
      params.t_start = t_start;
      problem.reset(derive_seed(seed, "noise", index));
      auto result = alns::run_vanilla_alns(problem, params, rng);
      best = std::move(result.best);
      out.search_objective = result.best_obj.value;
      out.trace = std::move(result.trace);
    } else {
      env::EnvConfig env = config_.env;
      env.control_severity = method.control_severity;
      env.control_temperature = method.control_temperature;
      env.fallback_dod = method.alns.dod;
      env.fallback_t_start = t_start;
      auto run_with = [&](auto&& controller) {
        return policy::run_controlled(problem, env, method.alns.iterations, controller, rng);
      };
      auto result = ckpt ? run_with(policy::PolicyController(ckpt->network, method.alns.iterations, method.greedy))
                         : run_with(policy::RandomController(
                               {static_cast<int>(problem.destroy_count()), static_cast<int>(problem.repair_count()),
                                env::kSeverityLevels, env::kTemperatureLevels}));
      best = std::move(result.best);
      out.search_objective = result.best_obj;
      out.trace = std::move(result.trace);
      out.with_actions = true;
    }

    if constexpr (std::is_same_v<P, opswtw::OpswtwSearch>) {
      Rng eval = make_rng(config_.evaluation_seed, "evaluation/" + id);
      out.best_objective = opswtw::evaluate_mc(problem.instance(), best, config_.evaluation_samples, eval);
    } else {
      out.best_objective = problem.evaluate(best);
    }
    return out;
  });
}

std::vector<ResultRow> solve(const RunConfig& config, const InstanceSet& set, const std::vector<MethodSpec>& methods,
                             const SolveOptions& options) {
  MethodRunner runner(config, options.allow_transfer);
  std::vector<ResultRow> rows;
  for (const auto& method : methods) {
    if (method.kind == MethodKind::Dr) {
      runner.checkpoint(method.checkpoint);  // fail before any work is done
    }
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (const auto& method : methods) {
      for (int r = 0; r < config.runs_per_instance; ++r) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(r);
        const auto t0 = std::chrono::steady_clock::now();
        RunOutput out = runner.run(method, set, i, seed);
        const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;
        rows.push_back(ResultRow{set.ids[i], method.name, out.best_objective, method.alns.iterations, seed,
                                 wall.count()});
        if (options.trace_dir) {
          auto trace_out = open_out(*options.trace_dir /
                                    (set.ids[i] + "__" + method.name + "__s" + std::to_string(seed) + ".csv"));
          alns::write_trace_csv(trace_out, out.trace, out.with_actions);
        }
      }
    }
  }
  sort_rows(rows);
  return rows;
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.instance_id, a.method, a.seed) < std::tie(b.instance_id, b.method, b.seed);
  });
}

void write_results(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
  auto out = open_out(path);
  CsvWriter csv(out);
  csv.header({"instance_id", "method", "best_objective", "iterations", "seed"});
  for (const auto& row : rows) {
    csv.field(row.instance_id).field(row.method).field(row.best_objective).field(row.iterations).field(row.seed);
    csv.end_row();
  }
}

void write_timings(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
  auto out = open_out(path);
  CsvWriter csv(out);
  csv.header({"instance_id", "method", "seed", "wall_seconds"});
  for (const auto& row : rows) {
    csv.field(row.instance_id).field(row.method).field(row.seed).field(row.wall_seconds);
    csv.end_row();
  }
}

std::vector<ResultRow> read_results(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path.string());
  const std::size_t c_id = table.column("instance_id");
  const std::size_t c_method = table.column("method");
  const std::size_t c_obj = table.column("best_objective");
  const std::size_t c_it = table.column("iterations");
  const std::size_t c_seed = table.column("seed");
  std::vector<ResultRow> rows;
  for (const auto& r : table.rows) {
    rows.push_back(ResultRow{r.at(c_id), r.at(c_method), std::stod(r.at(c_obj)), std::stoll(r.at(c_it)),
                             std::stoull(r.at(c_seed)), 0.0});
  }
  return rows;
}

policy::TrainResult train_policy(const RunConfig& config, const InstanceSet& pool,
                                 std::optional<policy::TrainerState> resume, const policy::TrainOptions& options) {
  if (pool.problem != config.problem) {
    throw std::invalid_argument("training pool does not match the configured problem");
  }
  env::EnvConfig env = config.env;
  env.fallback_dod = config.alns.dod;
  env.fallback_t_start = config.alns.t_start;
  if (pool.problem == ProblemKind::Opswtw) {
    const opswtw::SearchConfig sc = opswtw_config(env);
    return policy::train<opswtw::OpswtwSearch>(
        std::span<const opswtw::OpswtwInstance>(pool.opswtw),
        [&](const opswtw::OpswtwInstance& inst) { return opswtw::OpswtwSearch(inst, sc); }, env, config.ppo,
        config.seed, options, std::move(resume));
  }
  return policy::train<routing::RoutingSearch>(
      std::span<const routing::RoutingInstance>(pool.routing),
      [](const routing::RoutingInstance& inst) { return routing::RoutingSearch(inst); }, env, config.ppo,
      config.seed, options, std::move(resume));
}

void write_training_trace(const std::filesystem::path& path, const std::vector<policy::EpisodeRecord>& episodes) {
  auto out = open_out(path);
  CsvWriter csv(out);
  csv.header({"episode", "end_step", "reward_sum", "reward_mean", "rolling_mean", "rolling_std", "best_obj"});
  for (const auto& e : episodes) {
    csv.field(e.episode)
        .field(e.end_step)
        .field(e.reward_sum)
        .field(e.reward_mean)
        .field(e.rolling_mean)
        .field(e.rolling_std)
        .field(e.best_obj);
    csv.end_row();
  }
}

void write_update_log(const std::filesystem::path& path, const std::vector<policy::UpdateMetrics>& updates) {
  auto out = open_out(path);
  CsvWriter csv(out);
  csv.header({"update", "policy_loss", "value_loss", "entropy", "clip_fraction", "approx_kl", "aborted"});
  for (std::size_t i = 0; i < updates.size(); ++i) {
    const auto& u = updates[i];
    csv.field(i)
        .field(u.policy_loss)
        .field(u.value_loss)
        .field(u.entropy)
        .field(u.clip_fraction)
        .field(u.approx_kl)
        .field(u.aborted);
    csv.end_row();
  }
}

}  // namespace dralns::harness
