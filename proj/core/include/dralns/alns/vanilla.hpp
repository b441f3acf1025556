#pragma once

#include <stdexcept>

#include "dralns/alns/annealing.hpp"
#include "dralns/alns/params.hpp"
#include "dralns/alns/problem.hpp"
#include "dralns/alns/search_state.hpp"
#include "dralns/alns/trace.hpp"
#include "dralns/alns/weights.hpp"

namespace dralns::alns {

template <Problem P>
struct AlnsResult {
  typename P::Solution best;
  Objective best_obj;
  Trace trace;
  OperatorWeights weights{0, 0};
};

// Classical ALNS: roulette-wheel operator choice, per-iteration adaptive
// weights (both chosen operators receive the same score), simulated annealing
// with linear cooling towards zero.
template <Problem P>
AlnsResult<P> run_vanilla_alns(P& problem, const AlnsParams& params, Rng& rng) {
  params.validate();
  if (problem.destroy_count() == 0 || problem.repair_count() == 0) {
    throw std::invalid_argument("run_vanilla_alns: need at least one destroy and one repair operator");
  }
  const Sense sense = problem.sense();

  auto initial = problem.initial_solution(rng);
  const double initial_value = problem.evaluate(initial);
  problem.observe(initial, initial_value);

  SearchState<typename P::Solution> state(std::move(initial), Objective{initial_value, sense},
                                          std::max<long long>(params.iterations, 1));
  OperatorWeights weights(problem.destroy_count(), problem.repair_count());

  AlnsResult<P> result;
  result.trace.reserve(static_cast<std::size_t>(params.iterations));

  for (long long it = 0; it < params.iterations; ++it) {
    const std::size_t d = roulette_select(weights.destroy_weights, rng);
    const std::size_t r = roulette_select(weights.repair_weights, rng);
    const double temperature = linear_temperature(params.t_start, it, params.iterations);

    const std::size_t n_remove = removal_count(params.dod, problem.removable_count(state.current));
    auto candidate = problem.repair(r, problem.destroy(d, state.current, n_remove, rng), rng);
    const Objective candidate_obj{problem.evaluate(candidate), sense};
    problem.observe(candidate, candidate_obj.value);

    const bool accepted = sa_accept(candidate_obj, state.status.current_obj, temperature, rng);
    const Outcome outcome = state.advance(std::move(candidate), candidate_obj, accepted);

    const double psi = score_outcome(outcome, params.omega);
    weights.destroy_weights[d] = update_weight(weights.destroy_weights[d], params.theta, psi);
    weights.repair_weights[r] = update_weight(weights.repair_weights[r], params.theta, psi);

    TraceRow row;
    row.iteration = it;
    row.current_obj = state.status.current_obj.value;
    row.best_obj = state.status.best_obj.value;
    row.destroy_idx = static_cast<int>(d);
    row.repair_idx = static_cast<int>(r);
    row.accepted = state.status.current_accepted;
    row.temperature = temperature;
    result.trace.push_back(row);
  }

  result.best = std::move(state.best);
  result.best_obj = state.status.best_obj;
  result.weights = std::move(weights);
  return result;
}

// Start temperature from the problem's reference objective (rule of thumb:
// 5% worse accepted with probability one half).
template <Problem P>
double auto_t_start(P& problem, Rng& rng) {
  return compute_t_start(Objective{problem.t_start_reference(rng), problem.sense()});
}

}  // namespace dralns::alns
