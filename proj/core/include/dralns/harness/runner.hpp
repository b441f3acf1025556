#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dralns/alns/objective.hpp"
#include "dralns/alns/trace.hpp"
#include "dralns/harness/config.hpp"
#include "dralns/policy/checkpoint.hpp"
#include "dralns/policy/trainer.hpp"

namespace dralns::harness {

struct ResultRow {
  std::string instance_id;
  std::string method;
  double best_objective = 0.0;
  long long iterations = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;  // written to timings.csv only
};

struct RunOutput {
  double best_objective = 0.0;    // final score (OPSWTW: re-scored with the evaluation seed)
  double search_objective = 0.0;  // best objective as tracked during the search
  alns::Trace trace;
  bool with_actions = false;
};

alns::Sense problem_sense(ProblemKind problem);
policy::Fingerprint fingerprint_for(ProblemKind problem);

// Runs methods on single (instance, seed) pairs; DR checkpoints are loaded
// once and validated against the problem's action space.
class MethodRunner {
 public:
  MethodRunner(const RunConfig& config, bool allow_transfer) : config_(config), allow_transfer_(allow_transfer) {}

  RunOutput run(const MethodSpec& method, const InstanceSet& set, std::size_t index, std::uint64_t seed);

  const policy::Checkpoint& checkpoint(const std::string& path);

 private:
  const RunConfig& config_;
  bool allow_transfer_;
  std::map<std::string, policy::Checkpoint> checkpoints_;
};

struct SolveOptions {
  std::optional<std::filesystem::path> trace_dir;
  bool allow_transfer = false;
};

// Seeds are config.seed + r for r in [0, runs_per_instance).
std::vector<ResultRow> solve(const RunConfig& config, const InstanceSet& set, const std::vector<MethodSpec>& methods,
                             const SolveOptions& options);

// Orders rows by (instance_id, method, seed).
void sort_rows(std::vector<ResultRow>& rows);
void write_results(const std::filesystem::path& path, const std::vector<ResultRow>& rows);
void write_timings(const std::filesystem::path& path, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results(const std::filesystem::path& path);

// Wraps policy::train for the configured problem; the pool must match it.
policy::TrainResult train_policy(const RunConfig& config, const InstanceSet& pool,
                                 std::optional<policy::TrainerState> resume, const policy::TrainOptions& options);

void write_training_trace(const std::filesystem::path& path, const std::vector<policy::EpisodeRecord>& episodes);
void write_update_log(const std::filesystem::path& path, const std::vector<policy::UpdateMetrics>& updates);

}  // namespace dralns::harness
