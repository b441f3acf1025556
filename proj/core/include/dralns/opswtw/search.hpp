#pragma once

#include <string>
#include <vector>

#include "dralns/alns/objective.hpp"
#include "dralns/alns/problem.hpp"
#include "dralns/opswtw/instance.hpp"
#include "dralns/opswtw/neighbor_graph.hpp"
#include "dralns/opswtw/operators.hpp"
#include "dralns/opswtw/tour.hpp"

namespace dralns::opswtw {

enum class DestroyOp { Random, Related, History };

struct SearchConfig {
  int repair_samples = kRepairSamples;
  int accept_samples = 100;
  std::vector<std::string> destroy_ops{"random", "related", "history"};
  std::vector<std::string> repair_ops{"distance", "prize", "ratio"};
};

// Per-search adapter: one instance, its operator set, the neighbour graph and
// the travel-time noise stream. The instance must outlive the search.
class OpswtwSearch {
 public:
  using Solution = Tour;

  explicit OpswtwSearch(const OpswtwInstance& instance, SearchConfig config = {});

  alns::Sense sense() const { return alns::Sense::Maximize; }
  std::size_t destroy_count() const { return destroy_.size(); }
  std::size_t repair_count() const { return repair_.size(); }
  std::string destroy_name(std::size_t i) const { return config_.destroy_ops.at(i); }
  std::string repair_name(std::size_t i) const { return config_.repair_ops.at(i); }

  void reset(std::uint64_t seed);
  Tour initial_solution(Rng&) const { return {}; }
  std::size_t removable_count(const Tour& tour) const { return tour.size(); }
  Tour destroy(std::size_t op, const Tour& tour, std::size_t n_remove, Rng& rng);
  Tour repair(std::size_t op, Tour tour, Rng& rng);
  double evaluate(const Tour& tour);
  void observe(const Tour& tour, double value) { graph_.update(tour, value); }
  // Objective of the random-prize repair applied to the empty route.
  double t_start_reference(Rng& rng);

  const OpswtwInstance& instance() const { return *instance_; }
  const NeighborGraph& graph() const { return graph_; }

 private:
  const OpswtwInstance* instance_;
  SearchConfig config_;
  std::vector<DestroyOp> destroy_;
  std::vector<RepairRule> repair_;
  NeighborGraph graph_;
  Rng noise_;
};

static_assert(alns::Problem<OpswtwSearch>);

}  // namespace dralns::opswtw
