#pragma once

#include <concepts>
#include <vector>

#include "dralns/common/random.hpp"
#include "dralns/opswtw/instance.hpp"
#include "dralns/opswtw/tour.hpp"

namespace dralns::opswtw {

struct EvalResult {
  double collected_prize = 0.0;
  double tw_penalty = 0.0;      // -1 per late customer
  double budget_penalty = 0.0;  // 0 or -n
  double total = 0.0;
  double realized_duration = 0.0;
};

inline double travel_time(double distance, int eta, int beta) {
  return distance * static_cast<double>(eta) / static_cast<double>(beta);
}

// Throws std::invalid_argument for duplicates, the depot, or out-of-range ids.
void validate_tour(const OpswtwInstance& instance, const Tour& tour);

// One realization with travel-time noise supplied by `eta()` (values in 1..100).
// Early arrivals wait for the window to open; a late arrival collects nothing
// and costs 1; a realized duration above L costs n once.
template <typename NoiseFn>
  requires std::invocable<NoiseFn&> && std::convertible_to<std::invoke_result_t<NoiseFn&>, int>
EvalResult simulate_tour_with(const OpswtwInstance& instance, const Tour& tour, NoiseFn&& eta) {
  EvalResult r;
  if (tour.empty()) {
    return r;
  }
  const auto& open = instance.tw_open();
  const auto& close = instance.tw_close();
  const auto& prizes = instance.prizes();
  double t = 0.0;
  int at = kDepot;
  for (const int c : tour.sequence) {
    t += travel_time(instance.distance(at, c), eta(), instance.beta());
    if (t < open[c]) {
      t = open[c];
    }
    if (t <= close[c]) {
      r.collected_prize += prizes[c];
    } else {
      r.tw_penalty -= 1.0;
    }
    at = c;
  }
  t += travel_time(instance.distance(at, kDepot), eta(), instance.beta());
  r.realized_duration = t;
  if (t > instance.max_tour()) {
    r.budget_penalty = -static_cast<double>(instance.n());
  }
  r.total = r.collected_prize + r.tw_penalty + r.budget_penalty;
  return r;
}

EvalResult simulate_tour(const OpswtwInstance& instance, const Tour& tour, Rng& rng);

// Mean total over k independent realizations.
double evaluate_mc(const OpswtwInstance& instance, const Tour& tour, int k, Rng& rng);

}  // namespace dralns::opswtw
