#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dralns/harness/bench.hpp"
#include "dralns/harness/config.hpp"
#include "dralns/harness/instance_io.hpp"
#include "dralns/harness/runner.hpp"
#include "dralns/harness/tuner.hpp"
#include "dralns/policy/checkpoint.hpp"

namespace dralns::harness {
namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::path(::testing::TempDir()) / ("dralns_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(InstanceIo, ProblemNames) {
  EXPECT_EQ(parse_problem("OPSWTW"), ProblemKind::Opswtw);
  EXPECT_EQ(parse_problem("mtsp"), ProblemKind::Mtsp);
  EXPECT_EQ(to_string(ProblemKind::Cvrp), "cvrp");
  EXPECT_THROW(parse_problem("vrp"), std::invalid_argument);
  EXPECT_EQ(instance_id(ProblemKind::Tsp, 100, 2026, 3), "tsp-100-s2026-0003");
}

TEST(InstanceIo, GeneratedSetsAreDeterministicAndDistinct) {
  const auto a = generate_set(ProblemKind::Cvrp, {4, 20, 9});
  const auto b = generate_set(ProblemKind::Cvrp, {4, 20, 9});
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a.routing, b.routing);
  EXPECT_EQ(a.ids, b.ids);
  EXPECT_NE(a.routing[0], a.routing[1]);
  EXPECT_TRUE(a.opswtw.empty());
  EXPECT_EQ(count_shared(a, b), 4u);
  EXPECT_EQ(count_shared(a, generate_set(ProblemKind::Cvrp, {4, 20, 10})), 0u);
}

TEST(InstanceIo, RoundTripEveryProblem) {
  for (const auto kind : {ProblemKind::Opswtw, ProblemKind::Tsp, ProblemKind::Cvrp, ProblemKind::Mtsp}) {
    const auto dir = fresh_dir(std::string("set_") + std::string(to_string(kind)));
    const auto set = generate_set(kind, {3, 12, 5, 3});
    EXPECT_EQ(write_set(set, dir).size(), 3u);
    const auto back = load_set(kind, dir);
    EXPECT_EQ(back.ids, set.ids);
    EXPECT_EQ(back.opswtw, set.opswtw);
    EXPECT_EQ(back.routing, set.routing);
    if (kind == ProblemKind::Mtsp) {
      EXPECT_EQ(back.routing[0].salesmen(), 3);
    }
  }
}

TEST(InstanceIo, RejectsMalformedFiles) {
  const auto dir = fresh_dir("bad_instances");
  std::ofstream(dir / "x.json") << "{\"format\": \"dralns-instance\", \"version\": 1, \"problem\": \"tsp\"}";
  EXPECT_ANY_THROW(load_routing(dir / "x.json"));
  std::ofstream(dir / "y.json") << "[1, 2";
  EXPECT_ANY_THROW(load_opswtw(dir / "y.json"));
  const auto op = generate_set(ProblemKind::Opswtw, {1, 5, 1});
  save_instance(dir / "op.json", op.opswtw[0]);
  EXPECT_ANY_THROW(load_routing(dir / "op.json"));
}

const char* kMinimal = R"({"problem": "tsp", "mode": "vanilla", "seed": 3,
  "instances": {"count": 2, "size": 10, "seed": 4}})";

TEST(Config, MinimalAndDefaults) {
  const auto c = parse_config(kMinimal);
  EXPECT_EQ(c.problem, ProblemKind::Tsp);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.evaluation_seed, 3u);
  EXPECT_TRUE(c.auto_t_start);
  EXPECT_EQ(c.instances.generate.count, 2);
  EXPECT_EQ(c.alns.iterations, 100);
  EXPECT_EQ(c.ppo.total_steps, 300000);
  const auto methods = c.solve_methods();
  ASSERT_EQ(methods.size(), 1u);
  EXPECT_EQ(methods[0].name, "alns-vanilla");
}

TEST(Config, ExplicitValues) {
  const auto c = parse_config(R"({"problem": "opswtw", "mode": "dr", "seed": 1, "evaluation_seed": 8,
    "instances": {"path": "some/dir"},
    "alns": {"omega": [1, 2, 3, 0], "theta": 0.5, "dod": 0.2, "t_start": 2.5, "iterations": 7},
    "env": {"episode_length": 7}, "ppo": {"learning_rate": 0.003, "horizon": 20},
    "policy": {"checkpoint": "c.json", "greedy": false}})");
  EXPECT_EQ(c.instances.path, "some/dir");
  EXPECT_EQ(c.evaluation_seed, 8u);
  EXPECT_FALSE(c.auto_t_start);
  EXPECT_DOUBLE_EQ(c.alns.t_start, 2.5);
  EXPECT_EQ(c.alns.omega[2], 3.0);
  EXPECT_DOUBLE_EQ(c.ppo.learning_rate, 0.003);
  const auto m = c.solve_methods();
  EXPECT_EQ(m[0].name, "dr-alns");
  EXPECT_EQ(m[0].checkpoint, "c.json");
  EXPECT_FALSE(m[0].greedy);
}

TEST(Config, Errors) {
  const std::vector<std::string> bad{
      R"({"problem": "tsp", "mode": "vanilla", "instances": {"count": 1, "size": 5, "seed": 1}})",
      R"({"problem": "tsp", "mode": "nope", "seed": 1, "instances": {"count": 1, "size": 5, "seed": 1}})",
      R"({"problem": "vrp", "mode": "vanilla", "seed": 1, "instances": {"count": 1, "size": 5, "seed": 1}})",
      R"({"problem": "tsp", "mode": "vanilla", "seed": 1})",
      R"({"problem": "tsp", "mode": "vanilla", "seed": 1, "instances": {"count": 1}})",
      R"({"problem": "tsp", "mode": "vanilla", "seed": 1, "instances": {"path": "x"}, "alns": {"dod": 0}})",
      R"({"problem": "tsp", "mode": "vanilla", "seed": 1, "instances": {"path": "x"}, "alns": {"t_start": "hot"}})",
      R"({"problem": "tsp", "mode": "dr", "seed": 1, "instances": {"path": "x"}})",
      R"({"problem": "tsp", "mode": "bench", "seed": 1, "instances": {"path": "x"}})",
      R"({"problem": "tsp", "mode": "tune", "seed": 1, "instances": {"path": "x"}, "tune": {"budget": 0}})",
      R"({"problem": "tsp", "mode": "bench", "seed": 1, "instances": {"path": "x"},
          "bench": {"methods": [{"name": "a,b"}]}})",
      R"({"problem": "tsp", "mode": "bench", "seed": 1, "instances": {"path": "x"},
          "bench": {"methods": [{"name": "d", "kind": "dr"}]}})",
      R"({"problem": "tsp", "mode": "vanilla", "seed": 1, "instances": {"path": "x"}, "ppo": {"gamma": 2}})",
      R"({"problem": "tsp", "mode": "vanilla", "seed": "one", "instances": {"path": "x"}})",
      "{not json",
  };
  for (const auto& text : bad) {
    EXPECT_THROW(parse_config(text), ConfigError) << text;
  }
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, BenchMethodsInheritBase) {
  const auto c = parse_config(R"({"problem": "cvrp", "mode": "bench", "seed": 1,
    "instances": {"count": 1, "size": 10, "seed": 1}, "alns": {"iterations": 9},
    "bench": {"methods": [{"name": "v"}, {"name": "r", "kind": "random"},
                          {"name": "v2", "alns": {"dod": 0.5}}]}})");
  const auto m = c.solve_methods();
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[1].kind, MethodKind::Random);
  EXPECT_EQ(m[0].alns.iterations, 9);
  EXPECT_EQ(m[2].alns.iterations, 9);
  EXPECT_DOUBLE_EQ(m[2].alns.dod, 0.5);
  const auto agg = parse_config(R"({"problem": "cvrp", "mode": "bench", "seed": 1,
    "bench": {"results": ["a.csv"]}})");
  EXPECT_EQ(agg.results.size(), 1u);
}

TEST(Aggregate, AveragesAndTies) {
  const std::vector<ResultRow> rows{
      {"i1", "a", 10.0, 5, 1, 0}, {"i1", "b", 10.0, 5, 1, 0}, {"i1", "c", 12.0, 5, 1, 0},
      {"i2", "a", 9.0, 5, 1, 0},  {"i2", "b", 8.0, 5, 1, 0},  {"i2", "c", 7.0, 5, 1, 0},
      {"i3", "a", 1.0, 5, 1, 0},
  };
  const auto s = aggregate(rows, alns::Sense::Minimize);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].method, "a");
  EXPECT_DOUBLE_EQ(s[0].avg, 20.0 / 3.0);
  EXPECT_EQ(s[0].nr_best, 1);
  EXPECT_EQ(s[1].nr_best, 1);
  EXPECT_EQ(s[2].nr_best, 1);
  EXPECT_EQ(s[0].runs, 3);
  EXPECT_EQ(s[0].instances, 3);
  const auto m = aggregate(rows, alns::Sense::Maximize);
  EXPECT_EQ(m[2].nr_best, 1);
  EXPECT_EQ(m[0].nr_best, 1);
  EXPECT_EQ(m[1].nr_best, 0);
}

TEST(Aggregate, PerInstanceMeansOverSeeds) {
  const std::vector<ResultRow> rows{
      {"i1", "a", 4.0, 5, 1, 0}, {"i1", "a", 0.0, 5, 2, 0}, {"i1", "b", 3.0, 5, 1, 0}, {"i1", "b", 3.0, 5, 2, 0}};
  const auto s = aggregate(rows, alns::Sense::Minimize);
  EXPECT_EQ(s[0].nr_best, 1);
  EXPECT_EQ(s[1].nr_best, 0);
  EXPECT_EQ(s[0].runs, 2);
  EXPECT_EQ(s[0].instances, 1);
}

TEST(Results, WriteReadRoundTripAndOrdering) {
  const auto dir = fresh_dir("results");
  std::vector<ResultRow> rows{{"b", "m", 1.5, 10, 2, 0.1}, {"a", "z", 0.1 + 0.2, 10, 1, 0.2},
                              {"a", "m", -3.25, 10, 1, 0.3}};
  sort_rows(rows);
  EXPECT_EQ(rows[0].method, "m");
  EXPECT_EQ(rows[2].instance_id, "b");
  write_results(dir / "r.csv", rows);
  const auto back = read_results(dir / "r.csv");
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back[i].instance_id, rows[i].instance_id);
    EXPECT_EQ(back[i].best_objective, rows[i].best_objective);
    EXPECT_EQ(back[i].seed, rows[i].seed);
  }
  EXPECT_EQ(slurp(dir / "r.csv").substr(0, 50).find("wall"), std::string::npos);
}

TEST(Solve, DeterministicRowsAndTraces) {
  auto c = parse_config(R"({"problem": "opswtw", "mode": "bench", "seed": 5, "runs_per_instance": 2,
    "evaluation_samples": 200, "instances": {"count": 2, "size": 8, "seed": 1}, "alns": {"iterations": 15},
    "bench": {"methods": [{"name": "vanilla"}, {"name": "random", "kind": "random"}]}})");
  const auto set = load_instances(c.problem, c.instances);
  const auto dir = fresh_dir("traces");
  SolveOptions opt;
  opt.trace_dir = dir;
  auto a = solve(c, set, c.solve_methods(), opt);
  auto b = solve(c, set, c.solve_methods(), {});
  ASSERT_EQ(a.size(), 8u);
  sort_rows(a);
  sort_rows(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].best_objective, b[i].best_objective);
    EXPECT_EQ(a[i].iterations, 15);
    EXPECT_TRUE(a[i].seed == 5 || a[i].seed == 6);
  }
  std::size_t traces = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    (void)e;
    ++traces;
  }
  EXPECT_EQ(traces, 8u);
  EXPECT_TRUE(std::filesystem::exists(dir / (set.ids[0] + "__vanilla__s5.csv")));
}

TEST(Solve, DrNeedsMatchingCheckpoint) {
  const auto dir = fresh_dir("dr_ckpt");
  const policy::Fingerprint fp = fingerprint_for(ProblemKind::Tsp);
  policy::PolicyNetwork net({fp.destroy_ops, fp.repair_ops, env::kSeverityLevels, env::kTemperatureLevels});
  Rng rng(1);
  net.initialize(rng);
  policy::save_checkpoint(dir / "tsp.json", {fp, net, policy::Adam(net.parameter_count()), 0, 0, 1});
  auto c = parse_config(R"({"problem": "mtsp", "mode": "dr", "seed": 2,
    "instances": {"count": 1, "size": 10, "seed": 1}, "alns": {"iterations": 5},
    "policy": {"checkpoint": "placeholder"}})");
  c.checkpoint = (dir / "tsp.json").string();
  const auto set = load_instances(c.problem, c.instances);
  EXPECT_THROW(solve(c, set, c.solve_methods(), {}), policy::FingerprintError);
  SolveOptions opt;
  opt.allow_transfer = true;
  const auto rows = solve(c, set, c.solve_methods(), opt);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].method, "dr-alns");

  c.problem = ProblemKind::Opswtw;
  const auto op = generate_set(ProblemKind::Opswtw, {1, 8, 1});
  ASSERT_NE(fingerprint_for(ProblemKind::Opswtw), fp);
  EXPECT_THROW(solve(c, op, c.solve_methods(), opt), policy::FingerprintError);
}

RunConfig tune_config(int budget, bool defaults) {
  auto c = parse_config(R"({"problem": "tsp", "mode": "tune", "seed": 3,
    "instances": {"count": 2, "size": 12, "seed": 8}, "alns": {"iterations": 20}})");
  c.tune.budget = budget;
  c.tune.include_defaults = defaults;
  return c;
}

TEST(Tuner, SampledParametersStayInRange) {
  Rng rng(4);
  for (int i = 0; i < 2000; ++i) {
    const auto p = sample_params(rng, 50);
    for (int k = 0; k < 3; ++k) {
      ASSERT_GE(p.omega[static_cast<std::size_t>(k)], 0.0);
      ASSERT_LE(p.omega[static_cast<std::size_t>(k)], TuneRanges::kOmegaMax);
    }
    ASSERT_EQ(p.omega[3], 0.0);
    ASSERT_GE(p.theta, TuneRanges::kThetaMin);
    ASSERT_LE(p.theta, TuneRanges::kThetaMax);
    ASSERT_GE(p.dod, TuneRanges::kDodMin);
    ASSERT_LE(p.dod, TuneRanges::kDodMax);
    ASSERT_GT(p.t_start, 0.0);
    ASSERT_LE(p.t_start, TuneRanges::kTStartMax);
    ASSERT_EQ(p.iterations, 50);
    ASSERT_NO_THROW(p.validate());
  }
}

TEST(Tuner, BudgetOneReturnsItsOnlyCandidate) {
  const auto c = tune_config(1, false);
  const auto set = load_instances(c.problem, c.instances);
  const auto r = tune(c, set);
  ASSERT_EQ(r.leaderboard.size(), 1u);
  EXPECT_EQ(r.best.index, r.leaderboard[0].index);
  EXPECT_FALSE(r.best.is_default);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Tuner, BestIsArgminAndDeterministic) {
  const auto c = tune_config(6, true);
  const auto set = load_instances(c.problem, c.instances);
  const auto a = tune(c, set);
  const auto b = tune(c, set);
  ASSERT_EQ(a.leaderboard.size(), 7u);
  EXPECT_EQ(std::count_if(a.leaderboard.begin(), a.leaderboard.end(), [](const auto& t) { return t.is_default; }), 1);
  for (const auto& t : a.leaderboard) {
    EXPECT_LE(a.best.score, t.score);
  }
  for (std::size_t i = 1; i < a.leaderboard.size(); ++i) {
    EXPECT_LE(a.leaderboard[i - 1].score, a.leaderboard[i].score);
  }
  EXPECT_EQ(a.best.score, b.best.score);
  EXPECT_EQ(a.best.index, b.best.index);
  const auto dir = fresh_dir("tune");
  write_leaderboard(dir / "lb.csv", a);
  write_leaderboard(dir / "lb2.csv", b);
  EXPECT_EQ(slurp(dir / "lb.csv"), slurp(dir / "lb2.csv"));
}

TEST(Tuner, WarnsOnOverlappingEvaluationSet) {
  const auto c = tune_config(1, false);
  const auto set = load_instances(c.problem, c.instances);
  const auto overlap = generate_set(ProblemKind::Tsp, {3, 12, 8});
  const auto r = tune(c, set, &overlap);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("share 2 instance"), std::string::npos);
  const auto disjoint = generate_set(ProblemKind::Tsp, {3, 12, 9});
  EXPECT_TRUE(tune(c, set, &disjoint).warnings.empty());
}

}  // namespace
}  // namespace dralns::harness
