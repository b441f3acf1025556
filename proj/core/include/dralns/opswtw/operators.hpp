#pragma once

#include "dralns/common/random.hpp"
#include "dralns/opswtw/instance.hpp"
#include "dralns/opswtw/neighbor_graph.hpp"
#include "dralns/opswtw/tour.hpp"

namespace dralns::opswtw {

// Removes min(n_remove, |tour|) customers chosen uniformly; survivors keep order.
Tour destroy_random(const Tour& tour, std::size_t n_remove, Rng& rng);

// Removes a uniform seed customer, then repeatedly the visited customer
// closest to any already-removed one.
Tour destroy_related(const Tour& tour, std::size_t n_remove, const OpswtwInstance& instance, Rng& rng);

// Scores each visited customer by the weights of its two incident tour edges
// (unknown edges count as the mean known weight) and removes the lowest
// scorers; ties are broken uniformly at random.
Tour destroy_history(const Tour& tour, std::size_t n_remove, const NeighborGraph& graph, Rng& rng);

enum class RepairRule { Distance, Prize, Ratio };

inline constexpr int kRepairSamples = 5;
inline constexpr double kRatioEpsilon = 1e-9;

struct Insertion {
  std::size_t position = 0;  // index in the sequence the customer is placed at
  double added_distance = 0.0;
};

Insertion cheapest_insertion(const OpswtwInstance& instance, const Tour& tour, int customer);

// Shared repair skeleton: pick an unvisited customer by `rule`, insert it at
// its cheapest position, keep it only if the `samples`-realization mean does
// not drop, and stop at the first rejected insertion. `rng` drives selection,
// `noise` the Monte-Carlo evaluation.
Tour repair(RepairRule rule, Tour tour, const OpswtwInstance& instance, Rng& rng, Rng& noise,
            int samples = kRepairSamples);

// Draws the next customer to insert among `candidates` according to `rule`.
std::size_t pick_candidate(RepairRule rule, const std::vector<int>& candidates, const Tour& tour,
                           const OpswtwInstance& instance, Rng& rng);

inline Tour repair_distance(Tour tour, const OpswtwInstance& instance, Rng& rng) {
  return repair(RepairRule::Distance, std::move(tour), instance, rng, rng);
}
inline Tour repair_prize(Tour tour, const OpswtwInstance& instance, Rng& rng) {
  return repair(RepairRule::Prize, std::move(tour), instance, rng, rng);
}
inline Tour repair_ratio(Tour tour, const OpswtwInstance& instance, Rng& rng) {
  return repair(RepairRule::Ratio, std::move(tour), instance, rng, rng);
}

}  // namespace dralns::opswtw
