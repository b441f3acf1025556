#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dralns/common/geometry.hpp"

namespace dralns::routing {

enum class Variant { TSP, CVRP, MTSP };

std::string_view to_string(Variant variant);
Variant parse_variant(std::string_view name);

inline constexpr int kDepot = 0;

// Node 0 is the depot (for TSP: the fixed start node of the tour). Customers
// are nodes 1..node_count()-1.
class RoutingInstance {
 public:
  RoutingInstance(Variant variant, std::vector<Point> coords, std::vector<int> demands = {},
                  int capacity = 0, int salesmen = 0);

  Variant variant() const { return variant_; }
  // Size as generated: node count for TSP, customer count otherwise.
  std::size_t n() const { return variant_ == Variant::TSP ? coords_.size() : coords_.size() - 1; }
  std::size_t node_count() const { return coords_.size(); }
  std::size_t customer_count() const { return coords_.size() - 1; }
  const std::vector<Point>& coords() const { return coords_; }
  const std::vector<int>& demands() const { return demands_; }
  int capacity() const { return capacity_; }
  int salesmen() const { return salesmen_; }
  double distance(std::size_t i, std::size_t j) const { return dist_(i, j); }

  friend bool operator==(const RoutingInstance& a, const RoutingInstance& b) {
    return a.variant_ == b.variant_ && a.coords_ == b.coords_ && a.demands_ == b.demands_ &&
           a.capacity_ == b.capacity_ && a.salesmen_ == b.salesmen_;
  }

 private:
  Variant variant_;
  std::vector<Point> coords_;
  std::vector<int> demands_;  // indexed by node, depot entry 0; CVRP only
  int capacity_;
  int salesmen_;
  DistanceMatrix dist_;
};

// Capacity used for generated CVRP instances of `n` customers.
int default_capacity(std::size_t n);

inline constexpr int kDefaultSalesmen = 2;

// Uniform unit-square coordinates; CVRP demands uniform in {1..9}.
// Deterministic in (variant, n, seed).
RoutingInstance generate_routing(Variant variant, std::size_t n, std::uint64_t seed,
                                 int salesmen = kDefaultSalesmen);

}  // namespace dralns::routing
