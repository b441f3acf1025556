#include "dralns/opswtw/simulate.hpp"

#include <stdexcept>

namespace dralns::opswtw {

void validate_tour(const OpswtwInstance& instance, const Tour& tour) {
  std::vector<bool> seen(instance.n(), false);
  for (const int c : tour.sequence) {
    if (c <= kDepot || static_cast<std::size_t>(c) >= instance.n()) {
      throw std::invalid_argument("tour: customer index out of range");
    }
    if (seen[c]) {
      throw std::invalid_argument("tour: duplicate customer");
    }
    seen[c] = true;
  }
}

EvalResult simulate_tour(const OpswtwInstance& instance, const Tour& tour, Rng& rng) {
  validate_tour(instance, tour);
  std::uniform_int_distribution<int> noise(1, 100);
  return simulate_tour_with(instance, tour, [&] { return noise(rng); });
}

double evaluate_mc(const OpswtwInstance& instance, const Tour& tour, int k, Rng& rng) {
  if (k < 1) {
    throw std::invalid_argument("evaluate_mc: k must be >= 1");
  }
  validate_tour(instance, tour);
  if (tour.empty()) {
    return 0.0;
  }
  std::uniform_int_distribution<int> noise(1, 100);
  auto draw = [&] { return noise(rng); };
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    sum += simulate_tour_with(instance, tour, draw).total;
  }
  return sum / k;
}

}  // namespace dralns::opswtw
