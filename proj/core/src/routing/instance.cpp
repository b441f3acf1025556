#include "dralns/routing/instance.hpp"

#include <numeric>
#include <stdexcept>

#include "dralns/common/random.hpp"
#include "dralns/routing/solution.hpp"

namespace dralns::routing {

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::TSP:
      return "tsp";
    case Variant::CVRP:
      return "cvrp";
    case Variant::MTSP:
      return "mtsp";
  }
  return "tsp";
}

Variant parse_variant(std::string_view name) {
  if (name == "tsp" || name == "TSP") return Variant::TSP;
  if (name == "cvrp" || name == "CVRP") return Variant::CVRP;
  if (name == "mtsp" || name == "MTSP") return Variant::MTSP;
  throw std::invalid_argument("unknown routing variant: " + std::string(name));
}

RoutingInstance::RoutingInstance(Variant variant, std::vector<Point> coords, std::vector<int> demands,
                                 int capacity, int salesmen)
    : variant_(variant),
      coords_(std::move(coords)),
      demands_(std::move(demands)),
      capacity_(capacity),
      salesmen_(salesmen) {
  if (coords_.size() < 2) {
    throw std::invalid_argument("routing instance: need at least two nodes");
  }
  if (variant_ == Variant::CVRP) {
    if (demands_.size() != coords_.size()) {
      throw std::invalid_argument("routing instance: one demand per node required");
    }
    if (demands_[kDepot] != 0) {
      throw std::invalid_argument("routing instance: depot demand must be 0");
    }
    for (std::size_t i = 1; i < demands_.size(); ++i) {
      if (demands_[i] <= 0 || demands_[i] > capacity_) {
        throw std::invalid_argument("routing instance: demands must lie in (0, capacity]");
      }
    }
  } else {
    demands_.clear();
    capacity_ = 0;
  }
  if (variant_ == Variant::MTSP) {
    if (salesmen_ < 2) {
      throw std::invalid_argument("routing instance: mTSP needs at least two salesmen");
    }
  } else {
    salesmen_ = variant_ == Variant::TSP ? 1 : 0;
  }
  dist_ = DistanceMatrix(coords_);
}

int default_capacity(std::size_t n) {
  if (n <= 10) return 20;
  if (n <= 20) return 30;
  if (n <= 50) return 40;
  return 50;
}

RoutingInstance generate_routing(Variant variant, std::size_t n, std::uint64_t seed, int salesmen) {
  if (n < 2) {
    throw std::invalid_argument("generate_routing: n must be >= 2");
  }
  Rng rng = make_rng(seed, "instance-gen/" + std::string(to_string(variant)), n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t nodes = variant == Variant::TSP ? n : n + 1;
  std::vector<Point> coords(nodes);
  for (auto& p : coords) {
    p.x = unit(rng);
    p.y = unit(rng);
  }
  switch (variant) {
    case Variant::TSP:
      return RoutingInstance(variant, std::move(coords));
    case Variant::CVRP: {
      std::vector<int> demands(nodes, 0);
      std::uniform_int_distribution<int> demand(1, 9);
      for (std::size_t i = 1; i < nodes; ++i) {
        demands[i] = demand(rng);
      }
      return RoutingInstance(variant, std::move(coords), std::move(demands), default_capacity(n));
    }
    case Variant::MTSP:
      return RoutingInstance(variant, std::move(coords), {}, 0, salesmen);
  }
  throw std::logic_error("unreachable");
}

std::size_t RoutingSolution::assigned_count() const {
  return std::accumulate(routes.begin(), routes.end(), std::size_t{0},
                         [](std::size_t acc, const auto& r) { return acc + r.size(); });
}

RoutingSolution empty_solution(const RoutingInstance& instance) {
  RoutingSolution s;
  switch (instance.variant()) {
    case Variant::TSP:
      s.routes.resize(1);
      break;
    case Variant::MTSP:
      s.routes.resize(static_cast<std::size_t>(instance.salesmen()));
      break;
    case Variant::CVRP:
      break;
  }
  return s;
}

double route_distance(const RoutingInstance& instance, const std::vector<int>& route) {
  if (route.empty()) {
    return 0.0;
  }
  double d = 0.0;
  int at = kDepot;
  for (const int c : route) {
    d += instance.distance(at, c);
    at = c;
  }
  return d + instance.distance(at, kDepot);
}

double total_distance(const RoutingInstance& instance, const RoutingSolution& solution) {
  double d = 0.0;
  for (const auto& r : solution.routes) {
    d += route_distance(instance, r);
  }
  return d;
}

int route_load(const RoutingInstance& instance, const std::vector<int>& route) {
  if (instance.variant() != Variant::CVRP) {
    return 0;
  }
  int load = 0;
  for (const int c : route) {
    load += instance.demands()[c];
  }
  return load;
}

void validate_solution(const RoutingInstance& instance, const RoutingSolution& solution,
                       bool require_complete) {
  switch (instance.variant()) {
    case Variant::TSP:
      if (solution.routes.size() != 1) {
        throw std::invalid_argument("tsp solution must have exactly one route");
      }
      break;
    case Variant::MTSP:
      if (solution.routes.size() != static_cast<std::size_t>(instance.salesmen())) {
        throw std::invalid_argument("mtsp solution must have exactly m routes");
      }
      break;
    case Variant::CVRP:
      break;
  }
  std::vector<bool> seen(instance.node_count(), false);
  for (const auto& r : solution.routes) {
    for (const int c : r) {
      if (c <= kDepot || static_cast<std::size_t>(c) >= instance.node_count()) {
        throw std::invalid_argument("solution: customer index out of range");
      }
      if (seen[c]) {
        throw std::invalid_argument("solution: customer assigned twice");
      }
      seen[c] = true;
    }
    if (instance.variant() == Variant::CVRP && route_load(instance, r) > instance.capacity()) {
      throw std::invalid_argument("solution: route exceeds capacity");
    }
  }
  if (require_complete && solution.assigned_count() != instance.customer_count()) {
    throw std::invalid_argument("solution: not every customer is assigned");
  }
}

}  // namespace dralns::routing
