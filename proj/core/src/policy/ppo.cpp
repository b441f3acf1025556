#include "dralns/policy/ppo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dralns/policy/gae.hpp"

namespace dralns::policy {

void PpoConfig::validate() const {
  if (!(clip_epsilon >= 0.0 && clip_epsilon < 1.0)) {
    throw std::invalid_argument("ppo config: clip_epsilon must lie in [0, 1)");
  }
  if (!(gamma > 0.0 && gamma <= 1.0) || !(gae_lambda > 0.0 && gae_lambda <= 1.0)) {
    throw std::invalid_argument("ppo config: gamma and gae_lambda must lie in (0, 1]");
  }
  if (update_epochs < 1 || minibatch_count < 1 || parallel_envs < 1 || horizon < 1 || total_steps < 0) {
    throw std::invalid_argument("ppo config: counts must be positive");
  }
  if (minibatch_count > parallel_envs * horizon) {
    throw std::invalid_argument("ppo config: more minibatches than samples");
  }
  if (!(learning_rate > 0.0)) {
    throw std::invalid_argument("ppo config: learning_rate must be positive");
  }
}

RolloutBuffer::RolloutBuffer(int envs, int horizon, int input_size)
    : envs_(envs),
      horizon_(horizon),
      inputs_(Eigen::MatrixXd::Zero(input_size, envs * horizon)),
      actions_(static_cast<std::size_t>(envs * horizon)),
      log_probs_(actions_.size()),
      values_(actions_.size()),
      rewards_(actions_.size()),
      advantages_(actions_.size()),
      returns_(actions_.size()),
      dones_(actions_.size()) {}

void RolloutBuffer::add(int env, int t, const Eigen::VectorXd& input, const HeadIndices& action,
                        double log_prob, double value, double reward, bool done) {
  const int i = index(env, t);
  inputs_.col(i) = input;
  const auto k = static_cast<std::size_t>(i);
  actions_[k] = action;
  log_probs_[k] = log_prob;
  values_[k] = value;
  rewards_[k] = reward;
  dones_[k] = done ? 1 : 0;
}

void RolloutBuffer::finish(const std::vector<double>& bootstrap_values, double gamma, double lambda) {
  if (bootstrap_values.size() != static_cast<std::size_t>(envs_)) {
    throw std::invalid_argument("rollout buffer: one bootstrap value per environment required");
  }
  const auto h = static_cast<std::size_t>(horizon_);
  for (std::size_t e = 0; e < static_cast<std::size_t>(envs_); ++e) {
    const std::size_t off = e * h;
    const auto est = gae(std::span(rewards_).subspan(off, h), std::span(values_).subspan(off, h),
                         std::span(dones_).subspan(off, h), bootstrap_values[e], gamma, lambda);
    std::copy(est.advantages.begin(), est.advantages.end(), advantages_.begin() + static_cast<std::ptrdiff_t>(off));
    std::copy(est.returns.begin(), est.returns.end(), returns_.begin() + static_cast<std::ptrdiff_t>(off));
  }
}

LossTerms ppo_loss(const PolicyNetwork& net, const PpoBatch& batch, double clip_epsilon, double value_coef,
                   double entropy_coef, Eigen::VectorXd* grad) {
  const Eigen::Index b = batch.inputs.cols();
  const double inv_b = 1.0 / static_cast<double>(b);
  const BatchForward fwd = net.forward_batch(batch.inputs);

  std::array<Eigen::MatrixXd, kHeads> dlogits;
  std::array<Eigen::MatrixXd, kHeads> log_probs;
  for (int h = 0; h < kHeads; ++h) {
    const Eigen::MatrixXd& z = fwd.logits[h];
    const Eigen::RowVectorXd zmax = z.colwise().maxCoeff();
    const Eigen::MatrixXd shifted = z.rowwise() - zmax;
    const Eigen::RowVectorXd lse = shifted.array().exp().colwise().sum().log().matrix();
    log_probs[h] = shifted.rowwise() - lse;
    dlogits[h] = Eigen::MatrixXd::Zero(z.rows(), b);
  }

  LossTerms terms;
  Eigen::RowVectorXd dvalues(b);
  for (Eigen::Index i = 0; i < b; ++i) {
    const auto& act = batch.actions[static_cast<std::size_t>(i)];
    double logp = 0.0;
    for (int h = 0; h < kHeads; ++h) {
      logp += log_probs[h](act[h], i);
    }
    const double ratio = std::exp(logp - batch.old_log_probs[i]);
    const double adv = batch.advantages[i];
    const double clipped = std::clamp(ratio, 1.0 - clip_epsilon, 1.0 + clip_epsilon);
    const double surr1 = ratio * adv;
    const double surr2 = clipped * adv;
    terms.policy_loss -= std::min(surr1, surr2) * inv_b;
    if (std::abs(ratio - 1.0) > clip_epsilon) {
      terms.clip_fraction += inv_b;
    }
    terms.approx_kl += ((ratio - 1.0) - (logp - batch.old_log_probs[i])) * inv_b;
    // Only the unclipped branch depends on the parameters.
    const double dlogp = surr1 <= surr2 ? -adv * ratio * inv_b : 0.0;

    const double v_err = fwd.values[i] - batch.returns[i];
    terms.value_loss += v_err * v_err * inv_b;
    dvalues[i] = value_coef * 2.0 * v_err * inv_b;

    for (int h = 0; h < kHeads; ++h) {
      const Eigen::ArrayXd lp = log_probs[h].col(i).array();
      const Eigen::ArrayXd p = lp.exp();
      const double head_entropy = -(p * lp).sum();
      terms.entropy += head_entropy * inv_b;
      // d logp/dz = onehot - p;  dH/dz = -p (log p + H)
      Eigen::ArrayXd g = -dlogp * p;
      g[act[h]] += dlogp;
      g += entropy_coef * inv_b * p * (lp + head_entropy);
      dlogits[h].col(i) = g.matrix();
    }
  }
  terms.total = terms.policy_loss + value_coef * terms.value_loss - entropy_coef * terms.entropy;

  if (grad != nullptr) {
    grad->setZero(net.parameter_count());
    net.backward(batch.inputs, fwd, dlogits, dvalues, *grad);
  }
  return terms;
}

UpdateMetrics ppo_update(PolicyNetwork& net, Adam& optimizer, const RolloutBuffer& buffer,
                         const PpoConfig& config, Rng& rng) {
  const int n = buffer.size();
  std::vector<double> advantages = buffer.advantages();
  normalize_advantages(advantages);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const int mb_size = n / config.minibatch_count;

  UpdateMetrics metrics;
  int batches = 0;
  Eigen::VectorXd grad(net.parameter_count());
  for (int epoch = 0; epoch < config.update_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (int mb = 0; mb < config.minibatch_count; ++mb) {
      const int begin = mb * mb_size;
      const int end = mb + 1 == config.minibatch_count ? n : begin + mb_size;
      PpoBatch batch;
      batch.inputs.resize(buffer.inputs().rows(), end - begin);
      batch.old_log_probs.resize(end - begin);
      batch.advantages.resize(end - begin);
      batch.returns.resize(end - begin);
      for (int j = begin; j < end; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        const auto s = static_cast<std::size_t>(src);
        batch.inputs.col(j - begin) = buffer.inputs().col(src);
        batch.actions.push_back(buffer.actions()[s]);
        batch.old_log_probs[j - begin] = buffer.log_probs()[s];
        batch.advantages[j - begin] = advantages[s];
        batch.returns[j - begin] = buffer.returns()[s];
      }
      const LossTerms terms =
          ppo_loss(net, batch, config.clip_epsilon, config.value_coef, config.entropy_coef, &grad);
      if (!std::isfinite(terms.total) || !grad.allFinite()) {
        metrics.aborted = true;
        metrics.diagnostic = "non-finite loss or gradient at epoch " + std::to_string(epoch) +
                             ", minibatch " + std::to_string(mb) + " (loss " + std::to_string(terms.total) + ")";
        return metrics;
      }
      if (config.max_grad_norm > 0.0) {
        const double norm = grad.norm();
        if (norm > config.max_grad_norm) {
          grad *= config.max_grad_norm / norm;
        }
      }
      optimizer.step(net.parameters(), grad);
      metrics.policy_loss += terms.policy_loss;
      metrics.value_loss += terms.value_loss;
      metrics.entropy += terms.entropy;
      metrics.clip_fraction += terms.clip_fraction;
      metrics.approx_kl += terms.approx_kl;
      ++batches;
    }
  }
  const double inv = 1.0 / batches;
  metrics.policy_loss *= inv;
  metrics.value_loss *= inv;
  metrics.entropy *= inv;
  metrics.clip_fraction *= inv;
  metrics.approx_kl *= inv;
  return metrics;
}

}  // namespace dralns::policy
