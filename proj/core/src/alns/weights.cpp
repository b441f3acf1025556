#include "dralns/alns/weights.hpp"

#include <numeric>
#include <stdexcept>

namespace dralns::alns {

std::size_t roulette_select(std::span<const double> weights, Rng& rng) {
  if (weights.empty()) {
    throw std::invalid_argument("roulette_select: empty weight vector");
  }
  double total = 0.0;
  for (const double w : weights) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("roulette_select: weights must be strictly positive");
    }
    total += w;
  }
  const double target = uniform01(rng) * total;
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    running += weights[i];
    if (target < running) {
      return i;
    }
  }
  return weights.size() - 1;  // target == total after rounding
}

double update_weight(double rho, double theta, double psi) {
  return std::max(theta * rho + (1.0 - theta) * psi, kWeightFloor);
}

double score_outcome(Outcome outcome, const std::array<double, 4>& omega) {
  switch (outcome) {
    case Outcome::NewBest:
      return omega[0];
    case Outcome::ImprovedCurrent:
      return omega[1];
    case Outcome::Accepted:
      return omega[2];
    case Outcome::Rejected:
      return omega[3];
  }
  return omega[3];
}

std::vector<double> OperatorWeights::probabilities(std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<double> p(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    p[i] = weights[i] / total;
  }
  return p;
}

}  // namespace dralns::alns
