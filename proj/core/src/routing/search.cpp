#include "dralns/routing/search.hpp"

#include <stdexcept>

namespace dralns::routing {

RoutingSearch::RoutingSearch(const RoutingInstance& instance, SearchConfig config)
    : instance_(&instance), config_(std::move(config)) {
  for (const auto& name : config_.destroy_ops) {
    if (name == "random") {
      destroy_.push_back(DestroyOp::Random);
    } else if (name == "worst") {
      destroy_.push_back(DestroyOp::Worst);
    } else if (name == "related") {
      destroy_.push_back(DestroyOp::Related);
    } else {
      throw std::invalid_argument("unknown routing destroy operator: " + name);
    }
  }
  for (const auto& name : config_.repair_ops) {
    if (name != "greedy") {
      throw std::invalid_argument("unknown routing repair operator: " + name);
    }
  }
}

RoutingSolution RoutingSearch::initial_solution(Rng& rng) const {
  return repair_greedy(empty_solution(*instance_), *instance_, rng);
}

RoutingSolution RoutingSearch::destroy(std::size_t op, const RoutingSolution& s, std::size_t n_remove,
                                       Rng& rng) const {
  switch (destroy_.at(op)) {
    case DestroyOp::Random:
      return destroy_random_r(s, n_remove, *instance_, rng);
    case DestroyOp::Worst:
      return destroy_worst(s, n_remove, *instance_, rng);
    case DestroyOp::Related:
      return destroy_related_r(s, n_remove, *instance_, rng);
  }
  return s;
}

RoutingSolution RoutingSearch::repair(std::size_t op, RoutingSolution s, Rng& rng) const {
  (void)config_.repair_ops.at(op);
  return repair_greedy(std::move(s), *instance_, rng);
}

}  // namespace dralns::routing
