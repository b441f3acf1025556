#pragma once

#include <string>
#include <vector>

#include "dralns/alns/objective.hpp"
#include "dralns/alns/problem.hpp"
#include "dralns/routing/instance.hpp"
#include "dralns/routing/operators.hpp"
#include "dralns/routing/solution.hpp"

namespace dralns::routing {

enum class DestroyOp { Random, Worst, Related };

struct SearchConfig {
  std::vector<std::string> destroy_ops{"random", "worst", "related"};
  std::vector<std::string> repair_ops{"greedy"};
};

// Per-search adapter for TSP / CVRP / mTSP. Objective is total distance
// (minimized) and evaluation is exact. The instance must outlive the search.
class RoutingSearch {
 public:
  using Solution = RoutingSolution;

  explicit RoutingSearch(const RoutingInstance& instance, SearchConfig config = {});

  alns::Sense sense() const { return alns::Sense::Minimize; }
  std::size_t destroy_count() const { return destroy_.size(); }
  std::size_t repair_count() const { return config_.repair_ops.size(); }
  std::string destroy_name(std::size_t i) const { return config_.destroy_ops.at(i); }
  std::string repair_name(std::size_t i) const { return config_.repair_ops.at(i); }

  void reset(std::uint64_t) {}
  RoutingSolution initial_solution(Rng& rng) const;
  std::size_t removable_count(const RoutingSolution& s) const { return s.assigned_count(); }
  RoutingSolution destroy(std::size_t op, const RoutingSolution& s, std::size_t n_remove, Rng& rng) const;
  RoutingSolution repair(std::size_t op, RoutingSolution s, Rng& rng) const;
  double evaluate(const RoutingSolution& s) const { return total_distance(*instance_, s); }
  void observe(const RoutingSolution&, double) {}
  double t_start_reference(Rng& rng) const { return evaluate(initial_solution(rng)); }

  const RoutingInstance& instance() const { return *instance_; }

 private:
  const RoutingInstance* instance_;
  SearchConfig config_;
  std::vector<DestroyOp> destroy_;
};

static_assert(alns::Problem<RoutingSearch>);

}  // namespace dralns::routing
