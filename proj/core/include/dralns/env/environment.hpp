#pragma once

#include <optional>
#include <stdexcept>

#include "dralns/alns/annealing.hpp"
#include "dralns/alns/params.hpp"
#include "dralns/alns/problem.hpp"
#include "dralns/alns/search_state.hpp"
#include "dralns/env/observation.hpp"

namespace dralns::env {

inline constexpr double kImprovementReward = 5.0;

struct EnvConfig {
  long long episode_length = 100;  // M
  int repair_eval_samples = 5;     // OPSWTW only
  int accept_eval_samples = 100;   // OPSWTW only
  // Ablations: a component the agent does not control falls back to the
  // vanilla setting (fixed dod, linear cooling from fallback_t_start).
  bool control_severity = true;
  bool control_temperature = true;
  double fallback_dod = 0.3;
  double fallback_t_start = 1.0;

  void validate() const {
    if (episode_length < 1 || repair_eval_samples < 1 || accept_eval_samples < 1) {
      throw std::invalid_argument("env config: episode_length and sample counts must be >= 1");
    }
    if (!(fallback_dod > 0.0 && fallback_dod <= 1.0) || !(fallback_t_start > 0.0)) {
      throw std::invalid_argument("env config: invalid fallback dod / t_start");
    }
  }
};

struct StepInfo {
  double candidate_obj = 0.0;
  double current_obj = 0.0;
  double best_obj = 0.0;
  int destroy_idx = 0;
  int repair_idx = 0;
  bool accepted = false;
  double temperature = 0.0;
  std::size_t removed = 0;
  alns::Outcome outcome = alns::Outcome::Rejected;
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

// One ALNS iteration per step, configured entirely by the action. Nothing in
// here looks inside the problem instance.
template <alns::Problem P>
class Environment {
 public:
  using Solution = typename P::Solution;

  Environment(P problem, EnvConfig config) : problem_(std::move(problem)), config_(config) {
    config_.validate();
  }

  Observation reset(Rng& rng) {
    problem_.reset(rng());
    Solution initial = problem_.initial_solution(rng);
    const alns::Objective obj{problem_.evaluate(initial), problem_.sense()};
    problem_.observe(initial, obj.value);
    state_.emplace(std::move(initial), obj, config_.episode_length);
    return observation();
  }

  StepResult step(const ActionTuple& action, Rng& rng) {
    if (!state_) {
      throw std::logic_error("environment: step before reset");
    }
    if (done()) {
      throw std::logic_error("environment: step after episode end");
    }
    check_action(action);
    auto& status = state_->status;

    const double fraction =
        config_.control_severity ? severity_to_fraction(action.severity) : config_.fallback_dod;
    const double temperature =
        config_.control_temperature
            ? temp_level_to_T(action.temp_level)
            : alns::linear_temperature(config_.fallback_t_start, status.iteration, config_.episode_length);

    const auto d = static_cast<std::size_t>(action.destroy_idx);
    const auto r = static_cast<std::size_t>(action.repair_idx);
    const std::size_t n_remove = alns::removal_count(fraction, problem_.removable_count(state_->current));
    Solution candidate = problem_.repair(r, problem_.destroy(d, state_->current, n_remove, rng), rng);
    const alns::Objective candidate_obj{problem_.evaluate(candidate), problem_.sense()};
    problem_.observe(candidate, candidate_obj.value);

    const bool accepted = alns::sa_accept(candidate_obj, status.current_obj, temperature, rng);
    const alns::Outcome outcome = state_->advance(std::move(candidate), candidate_obj, accepted);

    StepResult result;
    result.reward = outcome == alns::Outcome::NewBest ? kImprovementReward : 0.0;
    result.observation = observation();
    result.done = done();
    result.info = StepInfo{candidate_obj.value, status.current_obj.value, status.best_obj.value,
                           action.destroy_idx,  action.repair_idx,       status.current_accepted,
                           temperature,         n_remove,                outcome};
    return result;
  }

  bool done() const { return state_ && state_->status.iteration >= config_.episode_length; }
  Observation observation() const { return build_observation(state_->status, config_.episode_length); }

  const alns::SearchStatus& status() const { return state_->status; }
  const Solution& best() const { return state_->best; }
  const Solution& current() const { return state_->current; }
  const EnvConfig& config() const { return config_; }
  P& problem() { return problem_; }
  const P& problem() const { return problem_; }

  // Head sizes of the action space: destroy, repair, severity, temperature.
  std::array<int, 4> action_dims() const {
    return {static_cast<int>(problem_.destroy_count()), static_cast<int>(problem_.repair_count()),
            kSeverityLevels, kTemperatureLevels};
  }

 private:
  void check_action(const ActionTuple& a) const {
    const auto dims = action_dims();
    if (a.destroy_idx < 0 || a.destroy_idx >= dims[0] || a.repair_idx < 0 || a.repair_idx >= dims[1] ||
        a.severity < 1 || a.severity > dims[2] || a.temp_level < 1 || a.temp_level > dims[3]) {
      throw std::invalid_argument("environment: action out of bounds");
    }
  }

  P problem_;
  EnvConfig config_;
  std::optional<alns::SearchState<Solution>> state_;
};

}  // namespace dralns::env
