#pragma once

#include <vector>

#include "dralns/routing/instance.hpp"

namespace dralns::routing {

// Routes of customer ids; each route implicitly starts and ends at the depot.
// A destroyed (partial) solution simply lacks some customers.
struct RoutingSolution {
  std::vector<std::vector<int>> routes;

  std::size_t assigned_count() const;
  friend bool operator==(const RoutingSolution&, const RoutingSolution&) = default;
};

// Route skeleton with nothing assigned: one route for TSP, m for mTSP, none for CVRP.
RoutingSolution empty_solution(const RoutingInstance& instance);

double route_distance(const RoutingInstance& instance, const std::vector<int>& route);
double total_distance(const RoutingInstance& instance, const RoutingSolution& solution);
int route_load(const RoutingInstance& instance, const std::vector<int>& route);

// Checks route shape, duplicates and capacity; with `require_complete` every
// customer must be assigned. Throws std::invalid_argument on violation.
void validate_solution(const RoutingInstance& instance, const RoutingSolution& solution,
                       bool require_complete = true);

}  // namespace dralns::routing
