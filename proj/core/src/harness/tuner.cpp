#include "dralns/harness/tuner.hpp"

#include <algorithm>
#include <fstream>

#include "dralns/common/csv.hpp"
#include "dralns/harness/runner.hpp"

namespace dralns::harness {

alns::AlnsParams sample_params(Rng& rng, long long iterations) {
  std::uniform_real_distribution<double> omega(0.0, TuneRanges::kOmegaMax);
  std::uniform_real_distribution<double> theta(TuneRanges::kThetaMin, TuneRanges::kThetaMax);
  std::uniform_real_distribution<double> dod(TuneRanges::kDodMin, TuneRanges::kDodMax);
  std::uniform_real_distribution<double> t_start(0.0, TuneRanges::kTStartMax);
  alns::AlnsParams p;
  p.omega = {omega(rng), omega(rng), omega(rng), 0.0};
  p.theta = theta(rng);
  p.dod = dod(rng);
  p.t_start = TuneRanges::kTStartMax - t_start(rng);
  p.iterations = iterations;
  return p;
}

TuneResult tune(const RunConfig& config, const InstanceSet& tuning, const InstanceSet* evaluation) {
  if (tuning.empty()) {
    throw std::invalid_argument("tune: empty tuning set");
  }
  TuneResult result;
  if (evaluation != nullptr) {
    if (const std::size_t shared = count_shared(tuning, *evaluation); shared > 0) {
      result.warnings.push_back("tuning and evaluation sets share " + std::to_string(shared) + " instance(s)");
    }
  }

  std::vector<TuneCandidate> candidates;
  if (config.tune.include_defaults) {
    candidates.push_back(TuneCandidate{0, config.alns, config.auto_t_start, true, 0.0});
  }
  Rng rng = make_rng(config.tune.seed, "tune");
  for (int b = 0; b < config.tune.budget; ++b) {
    candidates.push_back(TuneCandidate{static_cast<int>(candidates.size()),
                                       sample_params(rng, config.alns.iterations), false, false, 0.0});
  }

  MethodRunner runner(config, false);
  for (auto& c : candidates) {
    MethodSpec method;
    method.name = "candidate-" + std::to_string(c.index);
    method.alns = c.params;
    method.auto_t_start = c.auto_t_start;
    double sum = 0.0;
    for (std::size_t i = 0; i < tuning.size(); ++i) {
      for (int r = 0; r < config.runs_per_instance; ++r) {
        sum += runner.run(method, tuning, i, config.seed + static_cast<std::uint64_t>(r)).best_objective;
      }
    }
    c.score = sum / static_cast<double>(tuning.size() * static_cast<std::size_t>(config.runs_per_instance));
  }

  const alns::Sense sense = problem_sense(config.problem);
  result.leaderboard = candidates;
  std::stable_sort(result.leaderboard.begin(), result.leaderboard.end(),
                   [sense](const TuneCandidate& a, const TuneCandidate& b) {
                     return alns::is_better(a.score, b.score, sense);
                   });
  result.best = result.leaderboard.front();
  return result;
}

void write_leaderboard(const std::filesystem::path& path, const TuneResult& result) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  CsvWriter csv(out);
  csv.header({"rank", "candidate", "score", "omega1", "omega2", "omega3", "omega4", "theta", "dod", "t_start",
              "default"});
  for (std::size_t rank = 0; rank < result.leaderboard.size(); ++rank) {
    const auto& c = result.leaderboard[rank];
    csv.field(rank + 1).field(c.index).field(c.score);
    for (const double w : c.params.omega) {
      csv.field(w);
    }
    csv.field(c.params.theta).field(c.params.dod);
    if (c.auto_t_start) {
      csv.field(std::string_view("auto"));
    } else {
      csv.field(c.params.t_start);
    }
    csv.field(c.is_default);
    csv.end_row();
  }
}

}  // namespace dralns::harness
