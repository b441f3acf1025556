#pragma once

#include <array>
#include <span>
#include <vector>

#include "dralns/alns/search_state.hpp"
#include "dralns/common/random.hpp"

namespace dralns::alns {

inline constexpr double kWeightFloor = 1e-6;

// Roulette-wheel draw: index i with probability weights[i] / sum(weights).
// Consumes exactly one uniform draw. Throws std::invalid_argument on an empty
// vector or a non-positive weight.
std::size_t roulette_select(std::span<const double> weights, Rng& rng);

// rho' = theta * rho + (1 - theta) * psi, never below kWeightFloor.
double update_weight(double rho, double theta, double psi);

// Score awarded for an iteration outcome: NewBest -> omega[0] ... Rejected -> omega[3].
double score_outcome(Outcome outcome, const std::array<double, 4>& omega);

struct OperatorWeights {
  std::vector<double> destroy_weights;
  std::vector<double> repair_weights;

  OperatorWeights(std::size_t destroy_count, std::size_t repair_count)
      : destroy_weights(destroy_count, 1.0), repair_weights(repair_count, 1.0) {}

  static std::vector<double> probabilities(std::span<const double> weights);
};

}  // namespace dralns::alns
