#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dralns::policy {

struct AdvantageEstimate {
  std::vector<double> advantages;  // raw, not normalized
  std::vector<double> returns;     // advantages + values
};

// Generalized advantage estimation over one environment's trajectory.
// dones[t] != 0 means the episode ended after step t, so nothing is
// bootstrapped across it; `bootstrap_value` is V(s_T) for the state after the
// last step.
AdvantageEstimate gae(std::span<const double> rewards, std::span<const double> values,
                      std::span<const std::uint8_t> dones, double bootstrap_value, double gamma,
                      double lambda);

// In-place zero-mean, unit-variance scaling; left untouched when the variance
// is below 1e-8.
void normalize_advantages(std::span<double> advantages);

}  // namespace dralns::policy
