#pragma once

#include <array>

#include "dralns/alns/search_state.hpp"

namespace dralns::env {

inline constexpr std::size_t kObservationSize = 7;

// Problem-agnostic search features, in network input order.
struct Observation {
  double best_improved = 0.0;
  double current_accepted = 0.0;
  double current_improved = 0.0;
  double is_current_best = 0.0;
  double cost_difference_best = -1.0;  // -1 when the current objective is <= 0
  double stagnation_count = 0.0;       // raw iteration count
  double search_budget = 0.0;          // used fraction in [0, 1]

  std::array<double, kObservationSize> to_array() const {
    return {best_improved,        current_accepted, current_improved, is_current_best,
            cost_difference_best, stagnation_count, search_budget};
  }
  friend bool operator==(const Observation&, const Observation&) = default;
};

// |c_best - c_current| / |c_best| when the current objective is positive and
// the best is non-zero, otherwise -1.
double cost_difference_best(double current, double best);

Observation build_observation(const alns::SearchStatus& status, long long budget);

struct ActionTuple {
  int destroy_idx = 0;
  int repair_idx = 0;
  int severity = 1;    // 1..10 -> 10%..100% of removable elements
  int temp_level = 1;  // 1..50 -> T = 0.1..5.0

  friend bool operator==(const ActionTuple&, const ActionTuple&) = default;
};

inline constexpr int kSeverityLevels = 10;
inline constexpr int kTemperatureLevels = 50;

// Both throw std::invalid_argument outside their level range.
double severity_to_fraction(int severity);
double temp_level_to_T(int temp_level);

}  // namespace dralns::env
