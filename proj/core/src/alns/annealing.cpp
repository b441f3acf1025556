#include "dralns/alns/annealing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dralns::alns {

bool sa_accept(const Objective& candidate, const Objective& current, double temperature, Rng& rng) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("sa_accept: temperature must be positive");
  }
  const double delta = worsening(candidate, current);
  if (delta <= 0.0) {
    return true;
  }
  return uniform01(rng) < std::exp(-delta / temperature);
}

double linear_temperature(double t_start, long long iteration, long long budget) {
  const double progress = static_cast<double>(iteration) / static_cast<double>(budget);
  return std::max(t_start * (1.0 - progress), kMinTemperature);
}

double compute_t_start(const Objective& initial, double worse_fraction, double accept_probability) {
  if (initial.value == 0.0) {
    return 1.0;
  }
  if (!(worse_fraction > 0.0) || !(accept_probability > 0.0 && accept_probability < 1.0)) {
    throw std::invalid_argument("compute_t_start: need w > 0 and 0 < p < 1");
  }
  return worse_fraction * std::abs(initial.value) / std::log(1.0 / accept_probability);
}

}  // namespace dralns::alns
