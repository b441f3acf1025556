#include "dralns/policy/distribution.hpp"

#include <cmath>

namespace dralns::policy {

env::ActionTuple to_action(const HeadIndices& idx) {
  return {idx[0], idx[1], idx[2] + 1, idx[3] + 1};
}

HeadIndices to_indices(const env::ActionTuple& a) {
  return {a.destroy_idx, a.repair_idx, a.severity - 1, a.temp_level - 1};
}

SampledAction sample_action(const HeadLogits& logits, Rng& rng) {
  SampledAction s;
  for (int h = 0; h < kHeads; ++h) {
    const Eigen::VectorXd lp = log_softmax(logits[h]);
    const double u = uniform01(rng);
    double cumulative = 0.0;
    int pick = static_cast<int>(lp.size()) - 1;
    for (Eigen::Index i = 0; i < lp.size(); ++i) {
      cumulative += std::exp(lp[i]);
      if (u < cumulative) {
        pick = static_cast<int>(i);
        break;
      }
    }
    s.indices[h] = pick;
    s.log_prob += lp[pick];
  }
  s.action = to_action(s.indices);
  return s;
}

SampledAction greedy_action(const HeadLogits& logits) {
  SampledAction s;
  for (int h = 0; h < kHeads; ++h) {
    Eigen::Index pick = 0;
    logits[h].maxCoeff(&pick);
    s.indices[h] = static_cast<int>(pick);
    s.log_prob += log_softmax(logits[h])[pick];
  }
  s.action = to_action(s.indices);
  return s;
}

double log_prob(const HeadLogits& logits, const env::ActionTuple& action) {
  const HeadIndices idx = to_indices(action);
  double lp = 0.0;
  for (int h = 0; h < kHeads; ++h) {
    lp += log_softmax(logits[h])[idx[h]];
  }
  return lp;
}

double entropy(const HeadLogits& logits) {
  double total = 0.0;
  for (int h = 0; h < kHeads; ++h) {
    const Eigen::ArrayXd lp = log_softmax(logits[h]).array();
    total -= (lp.exp() * lp).sum();
  }
  return total;
}

}  // namespace dralns::policy
