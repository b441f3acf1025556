#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "dralns/alns/annealing.hpp"
#include "dralns/alns/search_state.hpp"
#include "dralns/alns/vanilla.hpp"
#include "dralns/alns/weights.hpp"
#include "dralns/opswtw/search.hpp"
#include "dralns/routing/search.hpp"
#include "test_support.hpp"

namespace dralns::alns {
namespace {

TEST(RouletteSelect, UniformWeightsPassChiSquare) {
  Rng rng(11);
  std::vector<long long> counts(3, 0);
  const std::vector<double> w{1.0, 1.0, 1.0};
  for (int i = 0; i < 30000; ++i) {
    ++counts[roulette_select(w, rng)];
  }
  EXPECT_GT(testing::chi_square_p(counts, {1.0 / 3, 1.0 / 3, 1.0 / 3}), 0.01);
}

TEST(RouletteSelect, ProportionalToWeights) {
  Rng rng(12);
  const std::vector<double> w{3.0, 1.0};
  int zeros = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    zeros += roulette_select(w, rng) == 0 ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(zeros) / n, 0.75, 0.01);
}

TEST(RouletteSelect, ConsumesExactlyOneDraw) {
  Rng a(5), b(5);
  const std::vector<double> w{0.2, 0.5, 0.3};
  roulette_select(w, a);
  b.discard(1);
  EXPECT_EQ(a(), b());
}

TEST(RouletteSelect, RejectsInvalidWeights) {
  Rng rng(1);
  EXPECT_THROW(roulette_select(std::vector<double>{5.0, 0.0}, rng), std::invalid_argument);
  EXPECT_THROW(roulette_select(std::vector<double>{}, rng), std::invalid_argument);
  EXPECT_THROW(roulette_select(std::vector<double>{1.0, -2.0}, rng), std::invalid_argument);
}

TEST(UpdateWeight, FormulaAndFloor) {
  EXPECT_DOUBLE_EQ(update_weight(1.0, 0.8, 5.0), 1.8);
  EXPECT_DOUBLE_EQ(update_weight(2.0, 1.0, 100.0), 2.0);
  EXPECT_DOUBLE_EQ(update_weight(1.0, 0.0, 0.0), 1e-6);
  EXPECT_DOUBLE_EQ(update_weight(4.0, 0.0, 7.0), 7.0);
}

TEST(UpdateWeight, StaysPositiveUnderRepeatedZeroScores) {
  double w = 3.0;
  for (int i = 0; i < 1000; ++i) {
    w = update_weight(w, 0.5, 0.0);
    ASSERT_GE(w, kWeightFloor);
  }
}

TEST(ScoreOutcome, MapsOutcomesToOmega) {
  const std::array<double, 4> omega{5, 3, 1, 0};
  EXPECT_EQ(score_outcome(Outcome::NewBest, omega), 5.0);
  EXPECT_EQ(score_outcome(Outcome::ImprovedCurrent, omega), 3.0);
  EXPECT_EQ(score_outcome(Outcome::Rejected, omega), 0.0);
  EXPECT_EQ(score_outcome(Outcome::Accepted, {28.2, 22.6, 9.9, 0}), 9.9);
}

TEST(OperatorWeights, ProbabilitiesSumToOne) {
  const auto p = OperatorWeights::probabilities(std::vector<double>{0.3, 1e-6, 7.1, 2.0});
  double sum = 0.0;
  for (const double x : p) sum += x;
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(SaAccept, ImprovingAndEqualMovesAlwaysAccepted) {
  Rng rng(3);
  EXPECT_TRUE(sa_accept({5.0, Sense::Minimize}, {10.0, Sense::Minimize}, 0.1, rng));
  EXPECT_TRUE(sa_accept({10.0, Sense::Maximize}, {5.0, Sense::Maximize}, 0.1, rng));
  EXPECT_TRUE(sa_accept({1.0, Sense::Minimize}, {1.0, Sense::Minimize}, 1.0, rng));
}

TEST(SaAccept, NoDrawWhenNotWorsening) {
  Rng a(9), b(9);
  sa_accept({5.0, Sense::Minimize}, {10.0, Sense::Minimize}, 1.0, a);
  EXPECT_EQ(a(), b());
}

TEST(SaAccept, FrequencyMatchesBoltzmann) {
  Rng rng(21);
  const int n = 100000;
  int accepted = 0;
  for (int i = 0; i < n; ++i) {
    accepted += sa_accept({2.0, Sense::Minimize}, {1.0, Sense::Minimize}, 1.0, rng) ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(accepted) / n, std::exp(-1.0), 0.01);
}

TEST(SaAccept, RejectsNonPositiveTemperature) {
  Rng rng(1);
  EXPECT_THROW(sa_accept({2.0, Sense::Minimize}, {1.0, Sense::Minimize}, 0.0, rng), std::invalid_argument);
}

TEST(LinearTemperature, Schedule) {
  EXPECT_DOUBLE_EQ(linear_temperature(1.2, 0, 100), 1.2);
  EXPECT_DOUBLE_EQ(linear_temperature(1.2, 100, 100), kMinTemperature);
  EXPECT_DOUBLE_EQ(linear_temperature(2.0, 50, 100), 1.0);
}

TEST(ComputeTStart, RuleOfThumb) {
  const double t10 = compute_t_start({10.0, Sense::Minimize});
  EXPECT_NEAR(t10, 0.05 * 10.0 / std::log(2.0), 1e-12);
  EXPECT_NEAR(std::exp(-0.5 / t10), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(compute_t_start({0.0, Sense::Maximize}), 1.0);
  EXPECT_NEAR(compute_t_start({20.0, Sense::Maximize}), 2.0 * t10, 1e-12);
}

TEST(RemovalCount, ClampRule) {
  EXPECT_EQ(removal_count(0.3, 1), 1u);
  EXPECT_EQ(removal_count(0.3, 10), 3u);
  EXPECT_EQ(removal_count(1.0, 7), 7u);
  EXPECT_EQ(removal_count(0.5, 0), 0u);
}

TEST(SearchStatus, OutcomeChainAndStagnation) {
  auto s = SearchStatus::start({10.0, Sense::Minimize}, 10);
  EXPECT_TRUE(s.is_current_best);
  EXPECT_EQ(s.record({12.0, Sense::Minimize}, false), Outcome::Rejected);
  EXPECT_EQ(s.stagnation_count, 1);
  EXPECT_EQ(s.record({12.0, Sense::Minimize}, true), Outcome::Accepted);
  EXPECT_FALSE(s.is_current_best);
  EXPECT_EQ(s.record({11.0, Sense::Minimize}, true), Outcome::ImprovedCurrent);
  EXPECT_EQ(s.stagnation_count, 3);
  // Equal to best is not a new best.
  EXPECT_EQ(s.record({10.0, Sense::Minimize}, true), Outcome::ImprovedCurrent);
  EXPECT_TRUE(s.is_current_best);
  EXPECT_EQ(s.stagnation_count, 4);
  // Strict improvement of best is forced to be accepted.
  EXPECT_EQ(s.record({9.0, Sense::Minimize}, false), Outcome::NewBest);
  EXPECT_EQ(s.stagnation_count, 0);
  EXPECT_TRUE(s.best_improved && s.current_accepted && s.current_improved && s.is_current_best);
  EXPECT_EQ(s.iteration, 5);
}

routing::RoutingInstance small_tsp(std::uint64_t seed) { return routing::generate_routing(routing::Variant::TSP, 12, seed); }

TEST(RunVanilla, BestIsMonotoneAndTraceComplete) {
  const auto inst = small_tsp(4);
  routing::RoutingSearch problem(inst);
  Rng rng(17);
  AlnsParams params;
  params.iterations = 300;
  const auto result = run_vanilla_alns(problem, params, rng);
  ASSERT_EQ(result.trace.size(), 300u);
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    ASSERT_LE(result.trace[i].best_obj, result.trace[i - 1].best_obj);
    ASSERT_LE(result.trace[i].best_obj, result.trace[i].current_obj);
  }
  EXPECT_DOUBLE_EQ(result.best_obj.value, routing::total_distance(inst, result.best));
  for (const double w : result.weights.destroy_weights) {
    EXPECT_GE(w, kWeightFloor);
  }
}

TEST(RunVanilla, DeterministicTrace) {
  const auto inst = small_tsp(5);
  auto run = [&] {
    routing::RoutingSearch problem(inst);
    Rng rng(99);
    AlnsParams params;
    params.iterations = 200;
    std::ostringstream out;
    write_trace_csv(out, run_vanilla_alns(problem, params, rng).trace);
    return out.str();
  };
  EXPECT_EQ(run(), run());
}

TEST(RunVanilla, ZeroIterationsOnOpswtwReturnsEmptyRoute) {
  const auto inst = opswtw::generate_instance(20, 3);
  opswtw::OpswtwSearch problem(inst);
  problem.reset(1);
  Rng rng(2);
  AlnsParams params;
  params.iterations = 0;
  const auto result = run_vanilla_alns(problem, params, rng);
  EXPECT_TRUE(result.best.empty());
  EXPECT_EQ(result.best_obj.value, 0.0);
  EXPECT_TRUE(result.trace.empty());
}

TEST(RunVanilla, OpswtwLeavesTheEmptyRoute) {
  const auto inst = opswtw::generate_instance(20, 8);
  opswtw::OpswtwSearch problem(inst);
  problem.reset(1);
  Rng rng(2);
  AlnsParams params;
  params.iterations = 50;
  const auto result = run_vanilla_alns(problem, params, rng);
  EXPECT_GT(result.best_obj.value, 0.0);
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    ASSERT_GE(result.trace[i].best_obj, result.trace[i - 1].best_obj);
  }
}

TEST(RunVanilla, ThetaOneFreezesWeights) {
  const auto inst = small_tsp(6);
  routing::RoutingSearch problem(inst);
  Rng rng(1);
  AlnsParams params;
  params.theta = 1.0;
  params.iterations = 50;
  const auto result = run_vanilla_alns(problem, params, rng);
  for (const double w : result.weights.destroy_weights) {
    EXPECT_EQ(w, 1.0);
  }
}

}  // namespace
}  // namespace dralns::alns
