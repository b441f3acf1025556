#pragma once

#include "dralns/alns/objective.hpp"
#include "dralns/common/random.hpp"

namespace dralns::alns {

inline constexpr double kMinTemperature = 1e-9;

// Simulated-annealing acceptance. Improvements and ties are always accepted
// without touching the stream; a worsening delta is accepted with probability
// exp(-delta / temperature) using one uniform draw. Throws on temperature <= 0.
bool sa_accept(const Objective& candidate, const Objective& current, double temperature, Rng& rng);

// Linear cooling from t_start at iteration 0 to (clamped) zero at `budget`.
double linear_temperature(double t_start, long long iteration, long long budget);

// Start temperature at which a solution `worse_fraction` worse than the
// initial one is accepted with probability `accept_probability`. Falls back
// to 1.0 when the initial objective is exactly zero.
double compute_t_start(const Objective& initial, double worse_fraction = 0.05,
                       double accept_probability = 0.5);

}  // namespace dralns::alns
