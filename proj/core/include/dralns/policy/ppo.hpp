#pragma once

#include <string>
#include <vector>

#include "dralns/common/random.hpp"
#include "dralns/policy/adam.hpp"
#include "dralns/policy/distribution.hpp"
#include "dralns/policy/network.hpp"

namespace dralns::policy {

struct PpoConfig {
  double learning_rate = 3e-4;
  double clip_epsilon = 0.2;
  double gamma = 0.99;
  double gae_lambda = 0.95;
  int update_epochs = 10;
  int minibatch_count = 4;
  double value_coef = 0.5;
  double entropy_coef = 0.01;
  double max_grad_norm = 0.5;  // <= 0 disables clipping
  int parallel_envs = 10;
  long long total_steps = 300000;
  int horizon = 100;
  long long checkpoint_interval = 0;  // steps; 0 disables periodic checkpoints

  void validate() const;
};

// N environments x horizon transitions, stored env-major.
class RolloutBuffer {
 public:
  RolloutBuffer(int envs, int horizon, int input_size);

  int envs() const { return envs_; }
  int horizon() const { return horizon_; }
  int size() const { return envs_ * horizon_; }
  int index(int env, int t) const { return env * horizon_ + t; }

  void add(int env, int t, const Eigen::VectorXd& input, const HeadIndices& action, double log_prob,
           double value, double reward, bool done);
  // Recomputes raw advantages and returns from the stored transitions.
  void finish(const std::vector<double>& bootstrap_values, double gamma, double lambda);

  const Eigen::MatrixXd& inputs() const { return inputs_; }
  const std::vector<HeadIndices>& actions() const { return actions_; }
  const std::vector<double>& log_probs() const { return log_probs_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& rewards() const { return rewards_; }
  const std::vector<std::uint8_t>& dones() const { return dones_; }
  const std::vector<double>& advantages() const { return advantages_; }
  const std::vector<double>& returns() const { return returns_; }

 private:
  int envs_, horizon_;
  Eigen::MatrixXd inputs_;  // input_size x (envs * horizon)
  std::vector<HeadIndices> actions_;
  std::vector<double> log_probs_, values_, rewards_, advantages_, returns_;
  std::vector<std::uint8_t> dones_;
};

struct PpoBatch {
  Eigen::MatrixXd inputs;
  std::vector<HeadIndices> actions;
  Eigen::VectorXd old_log_probs;
  Eigen::VectorXd advantages;
  Eigen::VectorXd returns;
};

struct LossTerms {
  double total = 0.0;
  double policy_loss = 0.0;  // -L^CLIP
  double value_loss = 0.0;   // mean squared error
  double entropy = 0.0;      // mean summed head entropy
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
};

// total = -L^CLIP + value_coef * L^VF - entropy_coef * H over the batch. When
// `grad` is non-null it receives d total / d parameters (overwritten).
LossTerms ppo_loss(const PolicyNetwork& net, const PpoBatch& batch, double clip_epsilon, double value_coef,
                   double entropy_coef, Eigen::VectorXd* grad);

struct UpdateMetrics {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
  bool aborted = false;
  std::string diagnostic;
};

// update_epochs passes of minibatch Adam steps over the buffer, advantages
// normalized over the whole buffer. Aborts (leaving the remaining minibatches
// unapplied) on a non-finite loss or gradient.
UpdateMetrics ppo_update(PolicyNetwork& net, Adam& optimizer, const RolloutBuffer& buffer,
                         const PpoConfig& config, Rng& rng);

}  // namespace dralns::policy
