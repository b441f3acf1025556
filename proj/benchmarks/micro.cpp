#include <benchmark/benchmark.h>

#include "dralns/alns/vanilla.hpp"
#include "dralns/opswtw/instance.hpp"
#include "dralns/opswtw/search.hpp"
#include "dralns/opswtw/simulate.hpp"
#include "dralns/policy/network.hpp"
#include "dralns/policy/ppo.hpp"
#include "dralns/routing/instance.hpp"
#include "dralns/routing/search.hpp"

namespace {

using namespace dralns;

void BM_RoutingDestroyRepair(benchmark::State& state) {
  const auto variant = static_cast<routing::Variant>(state.range(0));
  const auto inst = routing::generate_routing(variant, 100, 1);
  routing::RoutingSearch search(inst);
  Rng rng(2);
  auto s = search.initial_solution(rng);
  std::size_t op = 0;
  for (auto _ : state) {
    s = search.repair(0, search.destroy(op++ % search.destroy_count(), s, 30, rng), rng);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RoutingDestroyRepair)->Arg(0)->Arg(1)->Arg(2)->ArgName("variant");

void BM_OpswtwDestroyRepair(benchmark::State& state) {
  const auto inst = opswtw::generate_instance(static_cast<std::size_t>(state.range(0)), 3);
  opswtw::OpswtwSearch search(inst);
  Rng rng(4);
  search.reset(5);
  auto tour = search.repair(0, search.initial_solution(rng), rng);
  std::size_t op = 0;
  for (auto _ : state) {
    tour = search.repair(op % 3, search.destroy(op % 3, tour, 3, rng), rng);
    ++op;
    benchmark::DoNotOptimize(tour);
  }
}
BENCHMARK(BM_OpswtwDestroyRepair)->Arg(20)->Arg(50)->ArgName("n");

void BM_OpswtwEvaluate(benchmark::State& state) {
  const auto inst = opswtw::generate_instance(20, 3);
  opswtw::OpswtwSearch search(inst);
  Rng rng(6);
  search.reset(7);
  const auto tour = search.repair(0, search.initial_solution(rng), rng);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(opswtw::evaluate_mc(inst, tour, k, rng));
  }
  state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_OpswtwEvaluate)->Arg(100)->Arg(10000)->ArgName("samples");

void BM_VanillaTsp100(benchmark::State& state) {
  const auto inst = routing::generate_routing(routing::Variant::TSP, 100, 8);
  alns::AlnsParams params;
  params.iterations = state.range(0);
  for (auto _ : state) {
    routing::RoutingSearch search(inst);
    Rng rng(9);
    benchmark::DoNotOptimize(alns::run_vanilla_alns(search, params, rng).best_obj.value);
  }
}
BENCHMARK(BM_VanillaTsp100)->Arg(1000)->ArgName("iterations")->Unit(benchmark::kMillisecond);

policy::PolicyNetwork bench_network() {
  policy::PolicyNetwork net({3, 3, 10, 50});
  Rng rng(10);
  net.initialize(rng);
  return net;
}

void BM_PolicyForward(benchmark::State& state) {
  const auto net = bench_network();
  const Eigen::MatrixXd x = Eigen::MatrixXd::Random(7, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(net.forward_batch(x));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PolicyForward)->Arg(1)->Arg(10)->Arg(256)->ArgName("batch");

void BM_PpoUpdate(benchmark::State& state) {
  auto net = bench_network();
  policy::PpoConfig config;
  policy::RolloutBuffer buffer(config.parallel_envs, config.horizon, 7);
  Rng rng(11);
  for (int e = 0; e < buffer.envs(); ++e) {
    for (int t = 0; t < buffer.horizon(); ++t) {
      const Eigen::VectorXd x = Eigen::VectorXd::Random(7);
      const auto out = net.forward(x);
      const auto a = policy::sample_action(out.logits, rng);
      buffer.add(e, t, x, a.indices, a.log_prob, out.value, (t % 7 == 0) ? 5.0 : 0.0, t + 1 == buffer.horizon());
    }
  }
  buffer.finish(std::vector<double>(static_cast<std::size_t>(buffer.envs()), 0.0), config.gamma, config.gae_lambda);
  for (auto _ : state) {
    policy::Adam adam(net.parameter_count(), config.learning_rate);
    auto copy = net;
    benchmark::DoNotOptimize(policy::ppo_update(copy, adam, buffer, config, rng));
  }
}
BENCHMARK(BM_PpoUpdate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
