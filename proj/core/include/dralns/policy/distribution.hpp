#pragma once

#include <array>
#include <Eigen/Dense>

#include "dralns/common/random.hpp"
#include "dralns/env/observation.hpp"
#include "dralns/policy/network.hpp"

namespace dralns::policy {

using HeadLogits = std::array<Eigen::VectorXd, kHeads>;
// Zero-based category index per head.
using HeadIndices = std::array<int, kHeads>;

// Severity and temperature levels are 1-based in the action tuple.
env::ActionTuple to_action(const HeadIndices& idx);
HeadIndices to_indices(const env::ActionTuple& action);

struct SampledAction {
  env::ActionTuple action;
  HeadIndices indices{};
  double log_prob = 0.0;  // sum of per-head log-probabilities
};

// Each head sampled independently with one uniform draw.
SampledAction sample_action(const HeadLogits& logits, Rng& rng);
// Per-head argmax.
SampledAction greedy_action(const HeadLogits& logits);

double log_prob(const HeadLogits& logits, const env::ActionTuple& action);
// Sum of per-head entropies.
double entropy(const HeadLogits& logits);

}  // namespace dralns::policy
