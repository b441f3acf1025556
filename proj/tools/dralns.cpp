#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dralns/harness/bench.hpp"
#include "dralns/harness/config.hpp"
#include "dralns/harness/instance_io.hpp"
#include "dralns/harness/runner.hpp"
#include "dralns/harness/tuner.hpp"
#include "dralns/policy/checkpoint.hpp"

namespace fs = std::filesystem;
using namespace dralns;
using namespace dralns::harness;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;

struct CommonArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
  bool allow_transfer = false;
  bool trace = false;
};

RunConfig load(const CommonArgs& args) {
  RunConfig cfg = load_config(args.config);
  if (args.seed) {
    cfg.seed = *args.seed;
  }
  return cfg;
}

void write_rows(const fs::path& out, const std::vector<ResultRow>& rows) {
  write_results(out / "results.csv", rows);
  write_timings(out / "timings.csv", rows);
}

int cmd_generate(const std::string& problem, const GenerationSpec& spec, const fs::path& out) {
  const InstanceSet set = generate_set(parse_problem(problem), spec);
  fs::create_directories(out);
  const auto files = write_set(set, out);
  std::cout << "wrote " << files.size() << " instance(s) to " << out.string() << '\n';
  return kExitOk;
}

int cmd_solve(const CommonArgs& args) {
  RunConfig cfg = load(args);
  if (cfg.mode != Mode::Vanilla && cfg.mode != Mode::Dr) {
    throw ConfigError("solve: mode must be vanilla or dr");
  }
  const InstanceSet set = load_instances(cfg.problem, cfg.instances);
  SolveOptions options;
  options.allow_transfer = args.allow_transfer;
  if (args.trace) {
    options.trace_dir = fs::path(args.out) / "traces";
  }
  const auto rows = solve(cfg, set, cfg.solve_methods(), options);
  write_rows(args.out, rows);
  std::cout << "solved " << set.size() << " instance(s), " << rows.size() << " run(s)\n";
  return kExitOk;
}

int cmd_train(const CommonArgs& args, const std::string& resume_path) {
  RunConfig cfg = load(args);
  const InstanceSet pool = load_instances(cfg.problem, cfg.instances);
  const policy::Fingerprint fingerprint = fingerprint_for(cfg.problem);
  const fs::path out(args.out);

  std::optional<policy::TrainerState> resume;
  if (!resume_path.empty()) {
    policy::Checkpoint ckpt = policy::load_checkpoint(resume_path);
    policy::check_fingerprint(ckpt, fingerprint, args.allow_transfer);
    resume = policy::TrainerState{std::move(ckpt.network), std::move(ckpt.optimizer), ckpt.steps_done,
                                  ckpt.episodes_done};
  }

  auto save = [&](const policy::TrainerState& state, const fs::path& path) {
    policy::save_checkpoint(path, policy::Checkpoint{fingerprint, state.network, state.optimizer, state.steps_done,
                                                     state.episodes_done, cfg.seed});
  };
  policy::TrainOptions options;
  options.on_checkpoint = [&](const policy::TrainerState& state) {
    save(state, out / "checkpoints" / ("step_" + std::to_string(state.steps_done) + ".json"));
  };
  options.on_update = [](long long steps, const policy::UpdateMetrics& m) {
    if (m.aborted) {
      std::cerr << "warning: update at step " << steps << " aborted: " << m.diagnostic << '\n';
    }
  };

  const policy::TrainResult result = train_policy(cfg, pool, std::move(resume), options);
  save(result.state, out / "checkpoint.json");
  write_training_trace(out / "training_trace.csv", result.episodes);
  write_update_log(out / "updates.csv", result.updates);
  std::cout << "trained to step " << result.state.steps_done << " (" << result.episodes.size()
            << " episode(s) this run)\n";
  return kExitOk;
}

int cmd_tune(const CommonArgs& args) {
  RunConfig cfg = load(args);
  const InstanceSet tuning = load_instances(cfg.problem, cfg.instances);
  std::optional<InstanceSet> evaluation;
  if (cfg.tune.evaluation_instances) {
    evaluation = load_instances(cfg.problem, *cfg.tune.evaluation_instances);
  }
  const TuneResult result = tune(cfg, tuning, evaluation ? &*evaluation : nullptr);
  for (const auto& w : result.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  const fs::path out(args.out);
  write_leaderboard(out / "leaderboard.csv", result);

  const auto& p = result.best.params;
  nlohmann::json best = {{"omega", p.omega}, {"theta", p.theta}, {"dod", p.dod}, {"iterations", p.iterations}};
  if (result.best.auto_t_start) {
    best["t_start"] = "auto";
  } else {
    best["t_start"] = p.t_start;
  }
  std::ofstream(out / "best_params.json") << nlohmann::json{{"alns", best}, {"score", result.best.score}}.dump(1)
                                          << '\n';
  std::cout << "best candidate " << result.best.index << " scored " << result.best.score << '\n';
  return kExitOk;
}

int cmd_bench(const CommonArgs& args) {
  RunConfig cfg = load(args);
  cfg.mode = Mode::Bench;
  const fs::path out(args.out);
  std::vector<ResultRow> rows;
  if (!cfg.results.empty()) {
    for (const auto& path : cfg.results) {
      const auto part = read_results(path);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    sort_rows(rows);
  } else {
    const InstanceSet set = load_instances(cfg.problem, cfg.instances);
    SolveOptions options;
    options.allow_transfer = args.allow_transfer;
    if (args.trace) {
      options.trace_dir = out / "traces";
    }
    rows = solve(cfg, set, cfg.solve_methods(), options);
    write_rows(out, rows);
  }
  const auto summary = aggregate(rows, problem_sense(cfg.problem));
  write_summary(out / "summary.csv", summary);
  for (const auto& s : summary) {
    std::cout << s.method << ": avg " << s.avg << ", nr_best " << s.nr_best << '/' << s.instances << '\n';
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool solver_flags) {
  cmd->add_option("--config", args.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", args.seed, "Override the configured seed");
  cmd->add_option("--out", args.out, "Output directory")->capture_default_str();
  if (solver_flags) {
    cmd->add_flag("--allow-transfer", args.allow_transfer, "Accept a checkpoint trained on another problem");
    cmd->add_flag("--trace", args.trace, "Write per-run trace CSVs");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deep-reinforcement-learning controlled ALNS"};
  app.require_subcommand(1);

  std::string problem;
  GenerationSpec gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write generated instances as JSON files");
  generate->add_option("--problem", problem, "opswtw, tsp, cvrp or mtsp")
      ->required()
      ->check(CLI::IsMember({"opswtw", "tsp", "cvrp", "mtsp"}, CLI::ignore_case));
  generate->add_option("--size", gen.size, "Instance size n")->required()->check(CLI::Range(2, 100000));
  generate->add_option("--count", gen.count, "Number of instances")->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", gen.seed, "Generation seed")->required();
  generate->add_option("--salesmen", gen.salesmen, "mTSP salesmen")->capture_default_str()->check(CLI::Range(1, 1000));
  generate->add_option("--out", gen_out, "Output directory")->required();

  CommonArgs solve_args, train_args, tune_args, bench_args;
  std::string resume;
  auto* solve_cmd = app.add_subcommand("solve", "Run vanilla or DR-ALNS on an instance set");
  add_common(solve_cmd, solve_args, true);
  auto* train_cmd = app.add_subcommand("train", "Train a policy with PPO");
  add_common(train_cmd, train_args, false);
  train_cmd->add_flag("--allow-transfer", train_args.allow_transfer, "Resume from another problem's checkpoint");
  train_cmd->add_option("--resume", resume, "Checkpoint to continue from")->check(CLI::ExistingFile);
  auto* tune_cmd = app.add_subcommand("tune", "Random-search tuning of vanilla ALNS parameters");
  add_common(tune_cmd, tune_args, false);
  auto* bench_cmd = app.add_subcommand("bench", "Run and aggregate several methods");
  add_common(bench_cmd, bench_args, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(problem, gen, gen_out);
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*train_cmd) return cmd_train(train_args, resume);
    if (*tune_cmd) return cmd_tune(tune_args);
    if (*bench_cmd) return cmd_bench(bench_args);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const policy::FingerprintError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
