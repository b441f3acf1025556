#pragma once

#include "dralns/common/random.hpp"
#include "dralns/routing/instance.hpp"
#include "dralns/routing/solution.hpp"

namespace dralns::routing {

// Removes min(n_remove, assigned) customers chosen uniformly.
RoutingSolution destroy_random_r(const RoutingSolution& solution, std::size_t n_remove,
                                 const RoutingInstance& instance, Rng& rng);

// Repeatedly removes the customer whose removal saves the most distance;
// exact ties are broken uniformly.
RoutingSolution destroy_worst(const RoutingSolution& solution, std::size_t n_remove,
                              const RoutingInstance& instance, Rng& rng);

// Uniform seed customer, then repeatedly the assigned customer closest to any
// removed one.
RoutingSolution destroy_related_r(const RoutingSolution& solution, std::size_t n_remove,
                                  const RoutingInstance& instance, Rng& rng);

// Inserts every unassigned customer, in uniformly random order, at the
// cheapest feasible position over all routes. CVRP opens a new route when no
// route has room.
RoutingSolution repair_greedy(RoutingSolution solution, const RoutingInstance& instance, Rng& rng);

}  // namespace dralns::routing
