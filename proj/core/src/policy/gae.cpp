#include "dralns/policy/gae.hpp"

#include <cmath>
#include <stdexcept>

namespace dralns::policy {

AdvantageEstimate gae(std::span<const double> rewards, std::span<const double> values,
                      std::span<const std::uint8_t> dones, double bootstrap_value, double gamma,
                      double lambda) {
  const std::size_t n = rewards.size();
  if (values.size() != n || dones.size() != n) {
    throw std::invalid_argument("gae: sequence lengths differ");
  }
  AdvantageEstimate out;
  out.advantages.assign(n, 0.0);
  out.returns.assign(n, 0.0);
  double running = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    const double not_done = dones[i] ? 0.0 : 1.0;
    const double next_value = i + 1 < n ? values[i + 1] : bootstrap_value;
    const double delta = rewards[i] + gamma * next_value * not_done - values[i];
    running = delta + gamma * lambda * not_done * running;
    out.advantages[i] = running;
    out.returns[i] = running + values[i];
  }
  return out;
}

void normalize_advantages(std::span<double> advantages) {
  if (advantages.empty()) {
    return;
  }
  double mean = 0.0;
  for (const double a : advantages) {
    mean += a;
  }
  mean /= static_cast<double>(advantages.size());
  double var = 0.0;
  for (const double a : advantages) {
    var += (a - mean) * (a - mean);
  }
  var /= static_cast<double>(advantages.size());
  if (var < 1e-8) {
    return;
  }
  const double inv_std = 1.0 / std::sqrt(var);
  for (double& a : advantages) {
    a = (a - mean) * inv_std;
  }
}

}  // namespace dralns::policy
