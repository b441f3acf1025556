#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dralns/alns/params.hpp"
#include "dralns/env/environment.hpp"
#include "dralns/harness/instance_io.hpp"
#include "dralns/policy/ppo.hpp"

namespace dralns::harness {

// Invalid or incomplete configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Vanilla, Dr, Train, Tune, Bench };

std::string_view to_string(Mode mode);

// Either a directory of instance files or a generation spec.
struct InstanceSource {
  std::string path;
  GenerationSpec generate;
};

InstanceSet load_instances(ProblemKind problem, const InstanceSource& source);

enum class MethodKind { Vanilla, Dr, Random };

// One solver configuration compared in solve / bench runs.
struct MethodSpec {
  std::string name;
  MethodKind kind = MethodKind::Vanilla;
  alns::AlnsParams alns;
  bool auto_t_start = true;  // derive T_start from the problem's reference objective
  std::string checkpoint;    // Dr only
  bool greedy = true;        // Dr only: per-head argmax; false samples from the policy
  bool control_severity = true;
  bool control_temperature = true;
};

struct TuneSpec {
  int budget = 20;
  bool include_defaults = true;  // also score the configured alns section
  std::uint64_t seed = 0;
  std::optional<InstanceSource> evaluation_instances;  // checked for overlap
};

struct RunConfig {
  ProblemKind problem = ProblemKind::Opswtw;
  Mode mode = Mode::Vanilla;
  std::uint64_t seed = 0;
  std::uint64_t evaluation_seed = 0;
  int evaluation_samples = 10000;  // OPSWTW final re-scoring
  int runs_per_instance = 1;
  InstanceSource instances;

  alns::AlnsParams alns;
  bool auto_t_start = true;
  env::EnvConfig env;
  policy::PpoConfig ppo;
  std::string checkpoint;
  bool greedy = true;

  TuneSpec tune;
  std::vector<MethodSpec> methods;      // bench
  std::vector<std::string> results;     // bench: aggregate these instead of running methods

  // Methods run by solve / bench for this config.
  std::vector<MethodSpec> solve_methods() const;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace dralns::harness
