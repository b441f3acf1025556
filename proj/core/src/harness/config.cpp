#include "dralns/harness/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dralns::harness {
namespace {

using nlohmann::json;

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) {
    out = j.at(key).get<T>();
  }
}

Mode parse_mode(const std::string& name) {
  for (const auto mode : {Mode::Vanilla, Mode::Dr, Mode::Train, Mode::Tune, Mode::Bench}) {
    if (name == to_string(mode)) {
      return mode;
    }
  }
  throw ConfigError("unknown mode: " + name);
}

MethodKind parse_kind(const std::string& name) {
  if (name == "vanilla") return MethodKind::Vanilla;
  if (name == "dr") return MethodKind::Dr;
  if (name == "random") return MethodKind::Random;
  throw ConfigError("unknown method kind: " + name);
}

InstanceSource parse_source(const json& j, int default_salesmen) {
  InstanceSource src;
  src.generate.salesmen = default_salesmen;
  if (j.contains("path")) {
    src.path = j.at("path").get<std::string>();
    return src;
  }
  if (!j.contains("count") || !j.contains("size") || !j.contains("seed")) {
    throw ConfigError("instances: give either a path or count, size and seed");
  }
  read(j, "count", src.generate.count);
  read(j, "size", src.generate.size);
  read(j, "seed", src.generate.seed);
  return src;
}

// "t_start" is a positive number or "auto".
void parse_alns(const json& j, alns::AlnsParams& params, bool& auto_t_start) {
  read(j, "omega", params.omega);
  read(j, "theta", params.theta);
  read(j, "dod", params.dod);
  read(j, "iterations", params.iterations);
  if (j.contains("t_start")) {
    const json& t = j.at("t_start");
    if (t.is_string()) {
      if (t.get<std::string>() != "auto") {
        throw ConfigError("alns.t_start must be a number or \"auto\"");
      }
      auto_t_start = true;
    } else {
      params.t_start = t.get<double>();
      auto_t_start = false;
    }
  }
  params.validate();
}

void parse_env(const json& j, env::EnvConfig& env) {
  read(j, "episode_length", env.episode_length);
  read(j, "repair_eval_samples", env.repair_eval_samples);
  read(j, "accept_eval_samples", env.accept_eval_samples);
  read(j, "control_severity", env.control_severity);
  read(j, "control_temperature", env.control_temperature);
  env.validate();
}

void parse_ppo(const json& j, policy::PpoConfig& ppo) {
  read(j, "learning_rate", ppo.learning_rate);
  read(j, "clip_epsilon", ppo.clip_epsilon);
  read(j, "gamma", ppo.gamma);
  read(j, "gae_lambda", ppo.gae_lambda);
  read(j, "update_epochs", ppo.update_epochs);
  read(j, "minibatch_count", ppo.minibatch_count);
  read(j, "value_coef", ppo.value_coef);
  read(j, "entropy_coef", ppo.entropy_coef);
  read(j, "max_grad_norm", ppo.max_grad_norm);
  read(j, "parallel_envs", ppo.parallel_envs);
  read(j, "total_steps", ppo.total_steps);
  read(j, "horizon", ppo.horizon);
  read(j, "checkpoint_interval", ppo.checkpoint_interval);
  ppo.validate();
}

MethodSpec parse_method(const json& j, const RunConfig& base) {
  MethodSpec m;
  m.name = j.at("name").get<std::string>();
  if (m.name.empty() || m.name.find_first_of(",/\n") != std::string::npos) {
    throw ConfigError("method names must be non-empty and free of ',', '/' and newlines");
  }
  m.kind = parse_kind(j.value("kind", std::string("vanilla")));
  m.alns = base.alns;
  m.auto_t_start = base.auto_t_start;
  if (j.contains("alns")) {
    parse_alns(j.at("alns"), m.alns, m.auto_t_start);
  }
  m.checkpoint = j.value("checkpoint", base.checkpoint);
  m.greedy = j.value("greedy", base.greedy);
  m.control_severity = j.value("control_severity", base.env.control_severity);
  m.control_temperature = j.value("control_temperature", base.env.control_temperature);
  if (m.kind == MethodKind::Dr && m.checkpoint.empty()) {
    throw ConfigError("method " + m.name + ": dr methods need a checkpoint");
  }
  return m;
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Vanilla:
      return "vanilla";
    case Mode::Dr:
      return "dr";
    case Mode::Train:
      return "train";
    case Mode::Tune:
      return "tune";
    case Mode::Bench:
      return "bench";
  }
  return "unknown";
}

InstanceSet load_instances(ProblemKind problem, const InstanceSource& source) {
  if (!source.path.empty()) {
    return load_set(problem, source.path);
  }
  return generate_set(problem, source.generate);
}

std::vector<MethodSpec> RunConfig::solve_methods() const {
  if (mode == Mode::Bench) {
    return methods;
  }
  MethodSpec m;
  m.alns = alns;
  m.auto_t_start = auto_t_start;
  m.control_severity = env.control_severity;
  m.control_temperature = env.control_temperature;
  if (mode == Mode::Dr) {
    m.name = "dr-alns";
    m.kind = MethodKind::Dr;
    m.checkpoint = checkpoint;
    m.greedy = greedy;
  } else {
    m.name = "alns-vanilla";
  }
  return {m};
}

RunConfig parse_config(const std::string& json_text) {
  RunConfig cfg;
  try {
    const json j = json::parse(json_text);
    cfg.problem = parse_problem(j.at("problem").get<std::string>());
    cfg.mode = parse_mode(j.at("mode").get<std::string>());
    if (!j.contains("seed")) {
      throw ConfigError("config: an explicit seed is required");
    }
    read(j, "seed", cfg.seed);
    cfg.evaluation_seed = j.value("evaluation_seed", cfg.seed);
    read(j, "evaluation_samples", cfg.evaluation_samples);
    read(j, "runs_per_instance", cfg.runs_per_instance);
    if (cfg.evaluation_samples < 1 || cfg.runs_per_instance < 1) {
      throw ConfigError("config: evaluation_samples and runs_per_instance must be >= 1");
    }
    const int salesmen = j.value("salesmen", routing::kDefaultSalesmen);
    const bool aggregate_only = cfg.mode == Mode::Bench && j.contains("bench") && j.at("bench").contains("results");
    if (!aggregate_only) {
      if (!j.contains("instances")) {
        throw ConfigError("config: missing instances section");
      }
      cfg.instances = parse_source(j.at("instances"), salesmen);
    }
    if (j.contains("alns")) parse_alns(j.at("alns"), cfg.alns, cfg.auto_t_start);
    if (j.contains("env")) parse_env(j.at("env"), cfg.env);
    if (j.contains("ppo")) parse_ppo(j.at("ppo"), cfg.ppo);
    if (j.contains("policy")) {
      const json& p = j.at("policy");
      read(p, "checkpoint", cfg.checkpoint);
      read(p, "greedy", cfg.greedy);
    }
    if (j.contains("tune")) {
      const json& t = j.at("tune");
      read(t, "budget", cfg.tune.budget);
      read(t, "include_defaults", cfg.tune.include_defaults);
      cfg.tune.seed = t.value("seed", cfg.seed);
      if (t.contains("evaluation_instances")) {
        cfg.tune.evaluation_instances = parse_source(t.at("evaluation_instances"), salesmen);
      }
      if (cfg.tune.budget < 1) {
        throw ConfigError("tune.budget must be >= 1");
      }
    } else {
      cfg.tune.seed = cfg.seed;
    }
    if (j.contains("bench")) {
      const json& b = j.at("bench");
      if (b.contains("methods")) {
        for (const auto& m : b.at("methods")) {
          cfg.methods.push_back(parse_method(m, cfg));
        }
      }
      read(b, "results", cfg.results);
    }
    if (cfg.mode == Mode::Dr && cfg.checkpoint.empty()) {
      throw ConfigError("config: dr mode needs policy.checkpoint");
    }
    if (cfg.mode == Mode::Bench && cfg.methods.empty() && cfg.results.empty()) {
      throw ConfigError("config: bench mode needs bench.methods or bench.results");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace dralns::harness
