#pragma once

#include <cmath>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dralns/alns/problem.hpp"
#include "dralns/env/environment.hpp"
#include "dralns/policy/adam.hpp"
#include "dralns/policy/distribution.hpp"
#include "dralns/policy/network.hpp"
#include "dralns/policy/ppo.hpp"

namespace dralns::policy {

struct EpisodeRecord {
  long long episode = 0;
  long long end_step = 0;      // global step count when the episode finished
  double reward_sum = 0.0;
  double reward_mean = 0.0;    // per-step mean
  double rolling_mean = 0.0;   // of reward_sum over the trailing window
  double rolling_std = 0.0;
  double best_obj = 0.0;
};

struct TrainerState {
  PolicyNetwork network;
  Adam optimizer;
  long long steps_done = 0;
  long long episodes_done = 0;
};

struct TrainOptions {
  int rolling_window = 20;
  // Called every PpoConfig::checkpoint_interval steps (when enabled).
  std::function<void(const TrainerState&)> on_checkpoint;
  // Called after every PPO update.
  std::function<void(long long steps, const UpdateMetrics&)> on_update;
};

struct TrainResult {
  TrainerState state;
  std::vector<EpisodeRecord> episodes;
  std::vector<UpdateMetrics> updates;
};

// Synchronous PPO: parallel_envs environments step in lock-step for `horizon`
// steps under one batched policy call per step, then one ppo_update. Each
// episode draws a fresh instance uniformly from `pool`. Deterministic in
// `seed` (and in the resumed state, if any).
template <alns::Problem P, typename Instance, typename MakeProblem>
TrainResult train(std::span<const Instance> pool, MakeProblem&& make_problem, const env::EnvConfig& env_config,
                  const PpoConfig& config, std::uint64_t seed, const TrainOptions& options = {},
                  std::optional<TrainerState> resume = std::nullopt) {
  if (pool.empty()) {
    throw std::invalid_argument("train: instance pool is empty");
  }
  config.validate();
  env_config.validate();

  const int n_envs = config.parallel_envs;
  const long long start_steps = resume ? resume->steps_done : 0;
  std::vector<Rng> env_rngs;
  for (int e = 0; e < n_envs; ++e) {
    env_rngs.push_back(make_rng(seed, "env", static_cast<std::uint64_t>(e) + 1000003ULL * start_steps));
  }
  Rng policy_rng = make_rng(seed, "policy", static_cast<std::uint64_t>(start_steps));

  std::vector<std::optional<env::Environment<P>>> envs(static_cast<std::size_t>(n_envs));
  std::vector<env::Observation> obs(static_cast<std::size_t>(n_envs));
  std::vector<double> episode_reward(static_cast<std::size_t>(n_envs), 0.0);
  auto start_episode = [&](std::size_t e) {
    const std::size_t pick = uniform_index(env_rngs[e], pool.size());
    envs[e].emplace(make_problem(pool[pick]), env_config);
    obs[e] = envs[e]->reset(env_rngs[e]);
    episode_reward[e] = 0.0;
  };
  for (std::size_t e = 0; e < envs.size(); ++e) {
    start_episode(e);
  }

  const HeadSizes heads = envs[0]->action_dims();
  TrainResult result{resume ? std::move(*resume)
                            : TrainerState{PolicyNetwork(heads), Adam(0, config.learning_rate), 0, 0},
                     {}, {}};
  TrainerState& state = result.state;
  if (state.network.head_sizes() != heads) {
    throw std::invalid_argument("train: resumed network head sizes do not match the action space");
  }
  if (!resume) {
    state.network.initialize(policy_rng);
    state.optimizer = Adam(state.network.parameter_count(), config.learning_rate);
  }

  const long long budget = env_config.episode_length;
  const auto input_size = static_cast<Eigen::Index>(env::kObservationSize);
  std::deque<double> window;
  long long next_checkpoint =
      config.checkpoint_interval > 0 ? (state.steps_done / config.checkpoint_interval + 1) * config.checkpoint_interval
                                     : -1;

  Eigen::MatrixXd inputs(input_size, n_envs);
  while (state.steps_done < config.total_steps) {
    RolloutBuffer buffer(n_envs, config.horizon, static_cast<int>(input_size));
    for (int t = 0; t < config.horizon; ++t) {
      for (int e = 0; e < n_envs; ++e) {
        inputs.col(e) = to_network_input(obs[static_cast<std::size_t>(e)], budget);
      }
      const BatchForward fwd = state.network.forward_batch(inputs);
      for (int e = 0; e < n_envs; ++e) {
        const auto es = static_cast<std::size_t>(e);
        HeadLogits logits;
        for (int h = 0; h < kHeads; ++h) {
          logits[h] = fwd.logits[h].col(e);
        }
        const SampledAction sampled = sample_action(logits, policy_rng);
        const env::StepResult step = envs[es]->step(sampled.action, env_rngs[es]);
        buffer.add(e, t, inputs.col(e), sampled.indices, sampled.log_prob, fwd.values[e], step.reward, step.done);
        episode_reward[es] += step.reward;
        obs[es] = step.observation;
        if (step.done) {
          EpisodeRecord rec;
          rec.episode = state.episodes_done++;
          rec.end_step = state.steps_done + static_cast<long long>(t + 1) * n_envs;
          rec.reward_sum = episode_reward[es];
          rec.reward_mean = episode_reward[es] / static_cast<double>(budget);
          rec.best_obj = envs[es]->status().best_obj.value;
          window.push_back(rec.reward_sum);
          if (static_cast<int>(window.size()) > options.rolling_window) {
            window.pop_front();
          }
          double mean = 0.0;
          for (const double w : window) mean += w;
          mean /= static_cast<double>(window.size());
          double var = 0.0;
          for (const double w : window) var += (w - mean) * (w - mean);
          rec.rolling_mean = mean;
          rec.rolling_std = std::sqrt(var / static_cast<double>(window.size()));
          result.episodes.push_back(rec);
          start_episode(es);
        }
      }
    }
    state.steps_done += static_cast<long long>(config.horizon) * n_envs;

    for (int e = 0; e < n_envs; ++e) {
      inputs.col(e) = to_network_input(obs[static_cast<std::size_t>(e)], budget);
    }
    const Eigen::RowVectorXd bootstrap = state.network.forward_batch(inputs).values;
    buffer.finish(std::vector<double>(bootstrap.data(), bootstrap.data() + bootstrap.size()), config.gamma,
                  config.gae_lambda);

    result.updates.push_back(ppo_update(state.network, state.optimizer, buffer, config, policy_rng));
    if (options.on_update) {
      options.on_update(state.steps_done, result.updates.back());
    }
    if (next_checkpoint > 0 && state.steps_done >= next_checkpoint) {
      if (options.on_checkpoint) {
        options.on_checkpoint(state);
      }
      next_checkpoint = (state.steps_done / config.checkpoint_interval + 1) * config.checkpoint_interval;
    }
  }
  return result;
}

}  // namespace dralns::policy
