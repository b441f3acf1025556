#include "dralns/opswtw/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dralns/alns/weights.hpp"
#include "dralns/opswtw/simulate.hpp"

namespace dralns::opswtw {
namespace {

Tour without(const Tour& tour, const std::vector<bool>& removed) {
  Tour out;
  out.sequence.reserve(tour.size());
  for (std::size_t i = 0; i < tour.size(); ++i) {
    if (!removed[i]) {
      out.sequence.push_back(tour.sequence[i]);
    }
  }
  return out;
}

}  // namespace

Tour destroy_random(const Tour& tour, std::size_t n_remove, Rng& rng) {
  const std::size_t m = tour.size();
  const std::size_t k = std::min(n_remove, m);
  if (k == 0) {
    return tour;
  }
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<bool> removed(m, false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_index(rng, m - i);
    std::swap(idx[i], idx[j]);
    removed[idx[i]] = true;
  }
  return without(tour, removed);
}

Tour destroy_related(const Tour& tour, std::size_t n_remove, const OpswtwInstance& instance, Rng& rng) {
  const std::size_t m = tour.size();
  const std::size_t k = std::min(n_remove, m);
  if (k == 0) {
    return tour;
  }
  std::vector<bool> removed(m, false);
  std::vector<double> closest(m, INFINITY);
  std::size_t last = uniform_index(rng, m);
  removed[last] = true;
  for (std::size_t step = 1; step < k; ++step) {
    std::size_t next = m;
    double best = INFINITY;
    for (std::size_t i = 0; i < m; ++i) {
      if (removed[i]) {
        continue;
      }
      closest[i] = std::min(closest[i], instance.distance(tour.sequence[i], tour.sequence[last]));
      if (closest[i] < best) {
        best = closest[i];
        next = i;
      }
    }
    removed[next] = true;
    last = next;
  }
  return without(tour, removed);
}

Tour destroy_history(const Tour& tour, std::size_t n_remove, const NeighborGraph& graph, Rng& rng) {
  const std::size_t m = tour.size();
  const std::size_t k = std::min(n_remove, m);
  if (k == 0) {
    return tour;
  }
  const double fallback = graph.mean_known();
  auto edge = [&](std::size_t from, std::size_t to) { return graph.weight(from, to).value_or(fallback); };

  std::vector<double> score(m);
  std::vector<double> tie_key(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = static_cast<std::size_t>(tour.sequence[i]);
    const std::size_t pred = i == 0 ? kDepot : static_cast<std::size_t>(tour.sequence[i - 1]);
    const std::size_t succ = i + 1 == m ? kDepot : static_cast<std::size_t>(tour.sequence[i + 1]);
    score[i] = edge(pred, c) + edge(c, succ);
    tie_key[i] = uniform01(rng);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score[a] != score[b] ? score[a] < score[b] : tie_key[a] < tie_key[b];
  });
  std::vector<bool> removed(m, false);
  for (std::size_t i = 0; i < k; ++i) {
    removed[order[i]] = true;
  }
  return without(tour, removed);
}

Insertion cheapest_insertion(const OpswtwInstance& instance, const Tour& tour, int customer) {
  Insertion best{0, INFINITY};
  int prev = kDepot;
  for (std::size_t pos = 0; pos <= tour.size(); ++pos) {
    const int next = pos < tour.size() ? tour.sequence[pos] : kDepot;
    const double added =
        instance.distance(prev, customer) + instance.distance(customer, next) - instance.distance(prev, next);
    if (added < best.added_distance) {
      best = {pos, added};
    }
    prev = next;
  }
  return best;
}

std::size_t pick_candidate(RepairRule rule, const std::vector<int>& candidates, const Tour& tour,
                           const OpswtwInstance& instance, Rng& rng) {
  if (rule == RepairRule::Distance) {
    return uniform_index(rng, candidates.size());
  }
  std::vector<double> weights(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const int c = candidates[i];
    double w = instance.prizes()[c];
    if (rule == RepairRule::Ratio) {
      double nearest = instance.distance(c, kDepot);
      for (const int v : tour.sequence) {
        nearest = std::min(nearest, instance.distance(c, v));
      }
      w /= nearest + kRatioEpsilon;
    }
    weights[i] = w;
  }
  if (std::none_of(weights.begin(), weights.end(), [](double w) { return w > 0.0; })) {
    return uniform_index(rng, candidates.size());
  }
  // roulette_select needs strictly positive weights; zero-prize customers
  // keep a negligible chance.
  for (auto& w : weights) {
    w = std::max(w, 1e-12);
  }
  return alns::roulette_select(weights, rng);
}

Tour repair(RepairRule rule, Tour tour, const OpswtwInstance& instance, Rng& rng, Rng& noise, int samples) {
  std::vector<bool> visited(instance.n(), false);
  for (const int c : tour.sequence) {
    visited[c] = true;
  }
  std::vector<int> candidates;
  for (std::size_t c = 1; c < instance.n(); ++c) {
    if (!visited[c]) {
      candidates.push_back(static_cast<int>(c));
    }
  }
  double mean = evaluate_mc(instance, tour, samples, noise);
  while (!candidates.empty()) {
    const std::size_t pick = pick_candidate(rule, candidates, tour, instance, rng);
    const int customer = candidates[pick];
    const Insertion ins = cheapest_insertion(instance, tour, customer);
    Tour trial = tour;
    trial.sequence.insert(trial.sequence.begin() + static_cast<std::ptrdiff_t>(ins.position), customer);
    const double trial_mean = evaluate_mc(instance, trial, samples, noise);
    if (trial_mean < mean) {
      break;
    }
    tour = std::move(trial);
    mean = trial_mean;
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return tour;
}

}  // namespace dralns::opswtw
