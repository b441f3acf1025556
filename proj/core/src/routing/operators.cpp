#include "dralns/routing/operators.hpp"

#include <algorithm>
#include <cmath>

namespace dralns::routing {
namespace {

struct Slot {
  std::size_t route;
  std::size_t index;
};

std::vector<Slot> assigned_slots(const RoutingSolution& solution) {
  std::vector<Slot> slots;
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    for (std::size_t i = 0; i < solution.routes[r].size(); ++i) {
      slots.push_back({r, i});
    }
  }
  return slots;
}

// Drops marked customers; CVRP additionally drops routes left empty.
RoutingSolution without(const RoutingSolution& solution, const std::vector<bool>& removed_node,
                        const RoutingInstance& instance) {
  RoutingSolution out;
  out.routes.reserve(solution.routes.size());
  for (const auto& route : solution.routes) {
    std::vector<int> kept;
    kept.reserve(route.size());
    for (const int c : route) {
      if (!removed_node[c]) {
        kept.push_back(c);
      }
    }
    if (instance.variant() == Variant::CVRP && kept.empty()) {
      continue;
    }
    out.routes.push_back(std::move(kept));
  }
  return out;
}

double removal_gain(const RoutingInstance& instance, const std::vector<int>& route, std::size_t i) {
  const int prev = i == 0 ? kDepot : route[i - 1];
  const int next = i + 1 == route.size() ? kDepot : route[i + 1];
  const int c = route[i];
  return instance.distance(prev, c) + instance.distance(c, next) - instance.distance(prev, next);
}

}  // namespace

RoutingSolution destroy_random_r(const RoutingSolution& solution, std::size_t n_remove,
                                 const RoutingInstance& instance, Rng& rng) {
  auto slots = assigned_slots(solution);
  const std::size_t k = std::min(n_remove, slots.size());
  if (k == 0) {
    return solution;
  }
  std::vector<bool> removed(instance.node_count(), false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_index(rng, slots.size() - i);
    std::swap(slots[i], slots[j]);
    removed[solution.routes[slots[i].route][slots[i].index]] = true;
  }
  return without(solution, removed, instance);
}

RoutingSolution destroy_worst(const RoutingSolution& solution, std::size_t n_remove,
                              const RoutingInstance& instance, Rng& rng) {
  const std::size_t k = std::min(n_remove, solution.assigned_count());
  if (k == 0) {
    return solution;
  }
  RoutingSolution work = solution;
  std::vector<bool> removed(instance.node_count(), false);
  for (std::size_t step = 0; step < k; ++step) {
    Slot best{0, 0};
    double best_gain = -INFINITY;
    std::size_t ties = 0;
    for (std::size_t r = 0; r < work.routes.size(); ++r) {
      for (std::size_t i = 0; i < work.routes[r].size(); ++i) {
        const double gain = removal_gain(instance, work.routes[r], i);
        if (gain > best_gain) {
          best_gain = gain;
          best = {r, i};
          ties = 1;
        } else if (gain == best_gain) {
          ++ties;
          if (uniform_index(rng, ties) == 0) {
            best = {r, i};
          }
        }
      }
    }
    auto& route = work.routes[best.route];
    removed[route[best.index]] = true;
    route.erase(route.begin() + static_cast<std::ptrdiff_t>(best.index));
  }
  return without(solution, removed, instance);
}

RoutingSolution destroy_related_r(const RoutingSolution& solution, std::size_t n_remove,
                                  const RoutingInstance& instance, Rng& rng) {
  const auto slots = assigned_slots(solution);
  const std::size_t m = slots.size();
  const std::size_t k = std::min(n_remove, m);
  if (k == 0) {
    return solution;
  }
  std::vector<int> nodes(m);
  for (std::size_t i = 0; i < m; ++i) {
    nodes[i] = solution.routes[slots[i].route][slots[i].index];
  }
  std::vector<bool> taken(m, false);
  std::vector<double> closest(m, INFINITY);
  std::vector<bool> removed(instance.node_count(), false);
  std::size_t last = uniform_index(rng, m);
  taken[last] = true;
  removed[nodes[last]] = true;
  for (std::size_t step = 1; step < k; ++step) {
    std::size_t next = m;
    double best = INFINITY;
    for (std::size_t i = 0; i < m; ++i) {
      if (taken[i]) {
        continue;
      }
      closest[i] = std::min(closest[i], instance.distance(nodes[i], nodes[last]));
      if (closest[i] < best) {
        best = closest[i];
        next = i;
      }
    }
    taken[next] = true;
    removed[nodes[next]] = true;
    last = next;
  }
  return without(solution, removed, instance);
}

RoutingSolution repair_greedy(RoutingSolution solution, const RoutingInstance& instance, Rng& rng) {
  std::vector<bool> assigned(instance.node_count(), false);
  for (const auto& r : solution.routes) {
    for (const int c : r) {
      assigned[c] = true;
    }
  }
  std::vector<int> pending;
  for (std::size_t c = 1; c < instance.node_count(); ++c) {
    if (!assigned[c]) {
      pending.push_back(static_cast<int>(c));
    }
  }
  std::shuffle(pending.begin(), pending.end(), rng);

  const bool capacitated = instance.variant() == Variant::CVRP;
  std::vector<int> loads;
  loads.reserve(solution.routes.size());
  for (const auto& r : solution.routes) {
    loads.push_back(route_load(instance, r));
  }

  for (const int c : pending) {
    const int demand = capacitated ? instance.demands()[c] : 0;
    std::size_t best_route = solution.routes.size();
    std::size_t best_pos = 0;
    double best_cost = INFINITY;
    for (std::size_t r = 0; r < solution.routes.size(); ++r) {
      if (capacitated && loads[r] + demand > instance.capacity()) {
        continue;
      }
      const auto& route = solution.routes[r];
      int prev = kDepot;
      for (std::size_t pos = 0; pos <= route.size(); ++pos) {
        const int next = pos < route.size() ? route[pos] : kDepot;
        const double added =
            instance.distance(prev, c) + instance.distance(c, next) - instance.distance(prev, next);
        if (added < best_cost) {
          best_cost = added;
          best_route = r;
          best_pos = pos;
        }
        prev = next;
      }
    }
    if (best_route == solution.routes.size()) {
      // Only reachable for CVRP: every route is full (or none exists yet).
      solution.routes.push_back({c});
      loads.push_back(demand);
      continue;
    }
    auto& route = solution.routes[best_route];
    route.insert(route.begin() + static_cast<std::ptrdiff_t>(best_pos), c);
    loads[best_route] += demand;
  }
  return solution;
}

}  // namespace dralns::routing
