#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dralns/alns/params.hpp"
#include "dralns/harness/config.hpp"

namespace dralns::harness {

// Search ranges for the random-search tuner; omega[3] stays at 0.
struct TuneRanges {
  static constexpr double kOmegaMax = 50.0;
  static constexpr double kThetaMin = 0.5;
  static constexpr double kThetaMax = 1.0;
  static constexpr double kDodMin = 0.1;
  static constexpr double kDodMax = 1.0;
  static constexpr double kTStartMax = 5.0;
};

// One uniform draw from TuneRanges. T_start lies in (0, 5] so that it stays a
// valid temperature.
alns::AlnsParams sample_params(Rng& rng, long long iterations);

struct TuneCandidate {
  int index = 0;
  alns::AlnsParams params;
  bool auto_t_start = false;
  bool is_default = false;
  double score = 0.0;  // mean best objective over the tuning set
};

struct TuneResult {
  std::vector<TuneCandidate> leaderboard;  // best first; ties keep sampling order
  TuneCandidate best;
  std::vector<std::string> warnings;
};

// Scores config.tune.budget sampled configurations (plus the configured alns
// section when include_defaults is set) with vanilla ALNS on `tuning`.
TuneResult tune(const RunConfig& config, const InstanceSet& tuning, const InstanceSet* evaluation = nullptr);

void write_leaderboard(const std::filesystem::path& path, const TuneResult& result);

}  // namespace dralns::harness
