#pragma once

#include <utility>

#include "dralns/alns/problem.hpp"
#include "dralns/alns/trace.hpp"
#include "dralns/env/environment.hpp"
#include "dralns/policy/distribution.hpp"
#include "dralns/policy/network.hpp"

namespace dralns::policy {

template <typename Solution>
struct ControlledResult {
  Solution best;
  double best_obj = 0.0;
  alns::Trace trace;
  double total_reward = 0.0;
};

// Picks actions from a trained network, by sampling or per-head argmax.
class PolicyController {
 public:
  PolicyController(const PolicyNetwork& net, long long budget, bool greedy)
      : net_(&net), budget_(budget), greedy_(greedy) {}

  env::ActionTuple operator()(const env::Observation& obs, Rng& rng) const {
    const ForwardOutput out = net_->forward(to_network_input(obs, budget_));
    return greedy_ ? greedy_action(out.logits).action : sample_action(out.logits, rng).action;
  }

 private:
  const PolicyNetwork* net_;
  long long budget_;
  bool greedy_;
};

// Uniform over every head; a baseline with the same action space.
class RandomController {
 public:
  explicit RandomController(HeadSizes heads) : heads_(heads) {}

  env::ActionTuple operator()(const env::Observation&, Rng& rng) const {
    HeadIndices idx{};
    for (int h = 0; h < kHeads; ++h) {
      idx[h] = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(heads_[h])));
    }
    return to_action(idx);
  }

 private:
  HeadSizes heads_;
};

// Runs one episode of config.episode_length iterations with actions from
// `controller(observation, rng)`. A zero-length run returns the initial solution.
template <alns::Problem P, typename Controller>
ControlledResult<typename P::Solution> run_controlled(P problem, env::EnvConfig config, long long iterations,
                                                      Controller&& controller, Rng& rng) {
  using Solution = typename P::Solution;
  const bool empty_run = iterations <= 0;
  config.episode_length = empty_run ? 1 : iterations;
  env::Environment<P> environment(std::move(problem), config);
  env::Observation obs = environment.reset(rng);
  ControlledResult<Solution> result{environment.best(), environment.status().best_obj.value, {}, 0.0};
  if (empty_run) {
    return result;
  }
  while (!environment.done()) {
    const env::ActionTuple action = controller(obs, rng);
    const env::StepResult step = environment.step(action, rng);
    obs = step.observation;
    result.total_reward += step.reward;
    alns::TraceRow row;
    row.iteration = environment.status().iteration;
    row.current_obj = step.info.current_obj;
    row.best_obj = step.info.best_obj;
    row.destroy_idx = action.destroy_idx;
    row.repair_idx = action.repair_idx;
    row.accepted = step.info.accepted;
    row.temperature = step.info.temperature;
    row.severity = action.severity;
    row.temp_level = action.temp_level;
    row.reward = step.reward;
    result.trace.push_back(row);
  }
  result.best = environment.best();
  result.best_obj = environment.status().best_obj.value;
  return result;
}

}  // namespace dralns::policy
