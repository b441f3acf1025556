#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dralns/env/environment.hpp"
#include "dralns/opswtw/instance.hpp"
#include "dralns/opswtw/search.hpp"
#include "dralns/routing/instance.hpp"
#include "dralns/routing/search.hpp"

namespace dralns::env {
namespace {

// Each repair returns the next scripted objective; nothing else happens.
class ScriptedProblem {
 public:
  using Solution = double;

  ScriptedProblem(double initial, std::vector<double> script, alns::Sense sense = alns::Sense::Minimize)
      : initial_(initial), script_(std::move(script)), sense_(sense) {}

  alns::Sense sense() const { return sense_; }
  std::size_t destroy_count() const { return 2; }
  std::size_t repair_count() const { return 1; }
  std::string destroy_name(std::size_t i) const { return "d" + std::to_string(i); }
  std::string repair_name(std::size_t) const { return "r"; }
  void reset(std::uint64_t) { next_ = 0; }
  double initial_solution(Rng&) const { return initial_; }
  std::size_t removable_count(const double&) const { return 20; }
  double destroy(std::size_t, const double& s, std::size_t n, Rng&) {
    removed.push_back(n);
    return s;
  }
  double repair(std::size_t, double, Rng&) { return script_.at(next_++); }
  double evaluate(const double& s) const { return s; }
  void observe(const double&, double) {}
  double t_start_reference(Rng&) const { return initial_; }

  std::vector<std::size_t> removed;

 private:
  double initial_;
  std::vector<double> script_;
  alns::Sense sense_;
  std::size_t next_ = 0;
};

static_assert(alns::Problem<ScriptedProblem>);

EnvConfig config_of(long long m) {
  EnvConfig c;
  c.episode_length = m;
  return c;
}

TEST(Decoding, SeverityAndTemperatureLevels) {
  EXPECT_DOUBLE_EQ(severity_to_fraction(1), 0.1);
  EXPECT_DOUBLE_EQ(severity_to_fraction(10), 1.0);
  EXPECT_DOUBLE_EQ(temp_level_to_T(1), 0.1);
  EXPECT_DOUBLE_EQ(temp_level_to_T(37), 3.7);
  EXPECT_DOUBLE_EQ(temp_level_to_T(50), 5.0);
  EXPECT_THROW(severity_to_fraction(0), std::invalid_argument);
  EXPECT_THROW(severity_to_fraction(11), std::invalid_argument);
  EXPECT_THROW(temp_level_to_T(0), std::invalid_argument);
  EXPECT_THROW(temp_level_to_T(51), std::invalid_argument);
}

TEST(CostDifference, NormalizedAndSentinel) {
  EXPECT_DOUBLE_EQ(cost_difference_best(12.0, 10.0), 0.2);
  EXPECT_DOUBLE_EQ(cost_difference_best(8.0, 10.0), 0.2);
  EXPECT_DOUBLE_EQ(cost_difference_best(0.0, 10.0), -1.0);
  EXPECT_DOUBLE_EQ(cost_difference_best(-2.0, 1.0), -1.0);
  EXPECT_DOUBLE_EQ(cost_difference_best(3.0, 0.0), -1.0);
}

TEST(Environment, ResetObservation) {
  Environment env(ScriptedProblem(10.0, {}), config_of(5));
  Rng rng(1);
  const Observation o = env.reset(rng);
  EXPECT_EQ(o.best_improved, 0.0);
  EXPECT_EQ(o.current_accepted, 0.0);
  EXPECT_EQ(o.current_improved, 0.0);
  EXPECT_EQ(o.is_current_best, 1.0);
  EXPECT_EQ(o.cost_difference_best, 0.0);
  EXPECT_EQ(o.stagnation_count, 0.0);
  EXPECT_EQ(o.search_budget, 0.0);
  EXPECT_FALSE(env.done());
}

TEST(Environment, RewardOnlyForNewBest) {
  // 9 new best, 9 tie (rejected at T -> accept prob 1 but not better), 8 new best, 12 worse.
  Environment env(ScriptedProblem(10.0, {9.0, 9.0, 8.0, 12.0}), config_of(4));
  Rng rng(2);
  env.reset(rng);
  const ActionTuple a{0, 0, 1, 1};
  auto s1 = env.step(a, rng);
  EXPECT_EQ(s1.reward, kImprovementReward);
  EXPECT_EQ(s1.observation.best_improved, 1.0);
  EXPECT_EQ(s1.observation.stagnation_count, 0.0);
  EXPECT_EQ(s1.info.outcome, alns::Outcome::NewBest);
  auto s2 = env.step(a, rng);
  EXPECT_EQ(s2.reward, 0.0);
  EXPECT_EQ(s2.observation.stagnation_count, 1.0);
  EXPECT_EQ(s2.observation.is_current_best, 1.0);
  auto s3 = env.step(a, rng);
  EXPECT_EQ(s3.reward, kImprovementReward);
  EXPECT_DOUBLE_EQ(s3.observation.search_budget, 0.75);
  auto s4 = env.step(a, rng);
  EXPECT_EQ(s4.reward, 0.0);
  EXPECT_TRUE(s4.done);
  EXPECT_DOUBLE_EQ(s4.observation.search_budget, 1.0);
  EXPECT_EQ(env.best(), 8.0);
  if (s4.info.accepted) {
    EXPECT_DOUBLE_EQ(s4.observation.cost_difference_best, 0.5);
    EXPECT_EQ(s4.observation.is_current_best, 0.0);
  } else {
    EXPECT_DOUBLE_EQ(s4.observation.cost_difference_best, 0.0);
    EXPECT_EQ(s4.observation.is_current_best, 1.0);
  }
  EXPECT_THROW(env.step(a, rng), std::logic_error);
}

TEST(Environment, ActionDrivesSeverity) {
  Environment env(ScriptedProblem(10.0, std::vector<double>(10, 11.0)), config_of(10));
  Rng rng(3);
  env.reset(rng);
  for (int sev = 1; sev <= 10; ++sev) {
    env.step({0, 0, sev, 1}, rng);
  }
  const auto& removed = env.problem().removed;
  for (int sev = 1; sev <= 10; ++sev) {
    EXPECT_EQ(removed[static_cast<std::size_t>(sev - 1)], static_cast<std::size_t>(2 * sev));
  }
}

TEST(Environment, TemperatureFromActionOrFallback) {
  Environment env(ScriptedProblem(10.0, std::vector<double>(4, 11.0)), config_of(4));
  Rng rng(3);
  env.reset(rng);
  EXPECT_DOUBLE_EQ(env.step({0, 0, 1, 23}, rng).info.temperature, 2.3);

  EnvConfig fixed = config_of(4);
  fixed.control_severity = false;
  fixed.control_temperature = false;
  fixed.fallback_dod = 0.25;
  fixed.fallback_t_start = 2.0;
  Environment ablated(ScriptedProblem(10.0, std::vector<double>(4, 11.0)), fixed);
  ablated.reset(rng);
  const auto s0 = ablated.step({0, 0, 10, 50}, rng);
  const auto s1 = ablated.step({0, 0, 10, 50}, rng);
  EXPECT_DOUBLE_EQ(s0.info.temperature, alns::linear_temperature(2.0, 0, 4));
  EXPECT_DOUBLE_EQ(s1.info.temperature, alns::linear_temperature(2.0, 1, 4));
  EXPECT_EQ(s0.info.removed, 5u);
}

TEST(Environment, RejectsInvalidUse) {
  Environment env(ScriptedProblem(10.0, {11.0}), config_of(3));
  Rng rng(4);
  EXPECT_THROW(env.step({0, 0, 1, 1}, rng), std::logic_error);
  env.reset(rng);
  EXPECT_THROW(env.step({2, 0, 1, 1}, rng), std::invalid_argument);
  EXPECT_THROW(env.step({0, 1, 1, 1}, rng), std::invalid_argument);
  EXPECT_THROW(env.step({0, 0, 0, 1}, rng), std::invalid_argument);
  EXPECT_THROW(env.step({0, 0, 1, 51}, rng), std::invalid_argument);
  EXPECT_THROW(env.step({-1, 0, 1, 1}, rng), std::invalid_argument);
  EnvConfig bad;
  bad.episode_length = 0;
  EXPECT_THROW(Environment(ScriptedProblem(1.0, {}), bad), std::invalid_argument);
}

TEST(Environment, MaximizeSenseRewardsIncrease) {
  Environment env(ScriptedProblem(1.0, {2.0, 1.5}, alns::Sense::Maximize), config_of(2));
  Rng rng(5);
  env.reset(rng);
  EXPECT_EQ(env.step({0, 0, 1, 1}, rng).reward, kImprovementReward);
  EXPECT_EQ(env.step({0, 0, 1, 1}, rng).reward, 0.0);
}

// Random-action rollouts over every problem family check the shared invariants.
template <alns::Problem P>
void check_rollout(P problem, long long m, std::uint64_t seed) {
  Environment env(std::move(problem), config_of(m));
  Rng rng(seed);
  Observation o = env.reset(rng);
  const auto dims = env.action_dims();
  double best = env.status().best_obj.value;
  const auto sense = env.problem().sense();
  long long last_best_step = -1;
  for (long long t = 0; t < m; ++t) {
    const ActionTuple a{std::uniform_int_distribution<int>(0, dims[0] - 1)(rng),
                        std::uniform_int_distribution<int>(0, dims[1] - 1)(rng),
                        std::uniform_int_distribution<int>(1, dims[2])(rng),
                        std::uniform_int_distribution<int>(1, dims[3])(rng)};
    const auto r = env.step(a, rng);
    o = r.observation;
    for (const double f : {o.best_improved, o.current_accepted, o.current_improved, o.is_current_best}) {
      ASSERT_TRUE(f == 0.0 || f == 1.0);
    }
    ASSERT_TRUE(o.cost_difference_best == -1.0 || o.cost_difference_best >= 0.0);
    ASSERT_GE(o.search_budget, 0.0);
    ASSERT_LE(o.search_budget, 1.0);
    ASSERT_DOUBLE_EQ(o.search_budget, static_cast<double>(t + 1) / static_cast<double>(m));
    ASSERT_TRUE(r.reward == 0.0 || r.reward == kImprovementReward);
    ASSERT_EQ(r.reward == kImprovementReward, o.best_improved == 1.0);
    if (o.best_improved == 1.0) {
      ASSERT_TRUE(alns::is_better(r.info.best_obj, best, sense));
      best = r.info.best_obj;
      last_best_step = t;
      ASSERT_EQ(o.is_current_best, 1.0);
    } else {
      ASSERT_EQ(r.info.best_obj, best);
    }
    ASSERT_EQ(o.stagnation_count, static_cast<double>(t - last_best_step));
    ASSERT_EQ(r.done, t + 1 == m);
  }
}

TEST(Environment, InvariantsAcrossProblems) {
  const auto op = opswtw::generate_instance(20, 4);
  check_rollout(opswtw::OpswtwSearch(op), 60, 1);
  const auto tsp = routing::generate_routing(routing::Variant::TSP, 30, 4);
  check_rollout(routing::RoutingSearch(tsp), 60, 2);
  const auto cvrp = routing::generate_routing(routing::Variant::CVRP, 30, 4);
  check_rollout(routing::RoutingSearch(cvrp), 60, 3);
  const auto mtsp = routing::generate_routing(routing::Variant::MTSP, 30, 4);
  check_rollout(routing::RoutingSearch(mtsp), 60, 4);
}

TEST(Environment, DeterministicGivenSeed) {
  const auto inst = opswtw::generate_instance(20, 7);
  auto run = [&] {
    Environment env(opswtw::OpswtwSearch(inst), config_of(30));
    Rng rng(11);
    env.reset(rng);
    std::vector<double> trace;
    for (int t = 0; t < 30; ++t) {
      const auto r = env.step({t % 3, 0, 1 + t % 10, 1 + t % 50}, rng);
      trace.push_back(r.info.candidate_obj);
      trace.push_back(r.reward);
    }
    return trace;
  };
  EXPECT_EQ(run(), run());
}

}  // namespace
}  // namespace dralns::env
