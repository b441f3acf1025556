#include "dralns/env/observation.hpp"

#include <cmath>
#include <stdexcept>

namespace dralns::env {

double cost_difference_best(double current, double best) {
  if (!(current > 0.0) || best == 0.0) {
    return -1.0;
  }
  return std::abs(best - current) / std::abs(best);
}

Observation build_observation(const alns::SearchStatus& status, long long budget) {
  Observation o;
  o.best_improved = status.best_improved ? 1.0 : 0.0;
  o.current_accepted = status.current_accepted ? 1.0 : 0.0;
  o.current_improved = status.current_improved ? 1.0 : 0.0;
  o.is_current_best = status.is_current_best ? 1.0 : 0.0;
  o.cost_difference_best = cost_difference_best(status.current_obj.value, status.best_obj.value);
  o.stagnation_count = static_cast<double>(status.stagnation_count);
  o.search_budget = static_cast<double>(status.iteration) / static_cast<double>(budget);
  return o;
}

double severity_to_fraction(int severity) {
  if (severity < 1 || severity > kSeverityLevels) {
    throw std::invalid_argument("severity must lie in [1, 10]");
  }
  return severity / 10.0;
}

double temp_level_to_T(int temp_level) {
  if (temp_level < 1 || temp_level > kTemperatureLevels) {
    throw std::invalid_argument("temp_level must lie in [1, 50]");
  }
  return temp_level / 10.0;
}

}  // namespace dralns::env
