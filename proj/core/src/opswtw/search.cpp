#include "dralns/opswtw/search.hpp"

#include <stdexcept>

#include "dralns/opswtw/simulate.hpp"

namespace dralns::opswtw {
namespace {

DestroyOp parse_destroy(const std::string& name) {
  if (name == "random") return DestroyOp::Random;
  if (name == "related") return DestroyOp::Related;
  if (name == "history") return DestroyOp::History;
  throw std::invalid_argument("unknown opswtw destroy operator: " + name);
}

RepairRule parse_repair(const std::string& name) {
  if (name == "distance") return RepairRule::Distance;
  if (name == "prize") return RepairRule::Prize;
  if (name == "ratio") return RepairRule::Ratio;
  throw std::invalid_argument("unknown opswtw repair operator: " + name);
}

}  // namespace

OpswtwSearch::OpswtwSearch(const OpswtwInstance& instance, SearchConfig config)
    : instance_(&instance), config_(std::move(config)), graph_(instance.n()) {
  if (config_.repair_samples < 1 || config_.accept_samples < 1) {
    throw std::invalid_argument("opswtw search: sample counts must be >= 1");
  }
  for (const auto& name : config_.destroy_ops) {
    destroy_.push_back(parse_destroy(name));
  }
  for (const auto& name : config_.repair_ops) {
    repair_.push_back(parse_repair(name));
  }
}

void OpswtwSearch::reset(std::uint64_t seed) {
  graph_.clear();
  noise_.seed(seed);
}

Tour OpswtwSearch::destroy(std::size_t op, const Tour& tour, std::size_t n_remove, Rng& rng) {
  switch (destroy_.at(op)) {
    case DestroyOp::Random:
      return destroy_random(tour, n_remove, rng);
    case DestroyOp::Related:
      return destroy_related(tour, n_remove, *instance_, rng);
    case DestroyOp::History:
      return destroy_history(tour, n_remove, graph_, rng);
  }
  return tour;
}

Tour OpswtwSearch::repair(std::size_t op, Tour tour, Rng& rng) {
  return opswtw::repair(repair_.at(op), std::move(tour), *instance_, rng, noise_, config_.repair_samples);
}

double OpswtwSearch::evaluate(const Tour& tour) {
  return evaluate_mc(*instance_, tour, config_.accept_samples, noise_);
}

double OpswtwSearch::t_start_reference(Rng& rng) {
  const Tour start = opswtw::repair(RepairRule::Prize, Tour{}, *instance_, rng, noise_, config_.repair_samples);
  return evaluate(start);
}

}  // namespace dralns::opswtw
