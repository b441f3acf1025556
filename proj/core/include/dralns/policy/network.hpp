#pragma once

#include <array>
#include <Eigen/Dense>

#include "dralns/common/random.hpp"
#include "dralns/env/observation.hpp"

namespace dralns::policy {

inline constexpr int kHeads = 4;
using HeadSizes = std::array<int, kHeads>;

// Network input: the observation with stagnation_count divided by the search
// budget M; every other feature is passed through unchanged.
Eigen::VectorXd to_network_input(const env::Observation& obs, long long budget);

struct ForwardOutput {
  std::array<Eigen::VectorXd, kHeads> logits;
  double value = 0.0;
};

struct BatchForward {
  Eigen::MatrixXd hidden1;  // H x B, post-tanh
  Eigen::MatrixXd hidden2;  // H x B, post-tanh
  std::array<Eigen::MatrixXd, kHeads> logits;  // k_h x B
  Eigen::RowVectorXd values;                   // 1 x B
};

// Shared trunk (input -> 64 -> 64, tanh) with one linear categorical head per
// action component and a linear value head. All parameters live in a single
// flat vector so optimizers and gradient checks can treat them uniformly.
class PolicyNetwork {
 public:
  PolicyNetwork(HeadSizes heads, int hidden = 64, int input = static_cast<int>(env::kObservationSize));

  // Orthogonal initialisation: gain sqrt(2) for the trunk, 0.01 for the
  // policy heads, 1 for the value head; biases zero.
  void initialize(Rng& rng);

  const HeadSizes& head_sizes() const { return heads_; }
  int hidden() const { return hidden_; }
  int input() const { return input_; }
  Eigen::Index parameter_count() const { return params_.size(); }

  Eigen::VectorXd& parameters() { return params_; }
  const Eigen::VectorXd& parameters() const { return params_; }

  ForwardOutput forward(const Eigen::VectorXd& x) const;
  BatchForward forward_batch(const Eigen::MatrixXd& inputs) const;

  // Accumulates into `grad` the parameter gradient given upstream gradients on
  // head logits and values for a forward pass over `inputs`.
  void backward(const Eigen::MatrixXd& inputs, const BatchForward& fwd,
                const std::array<Eigen::MatrixXd, kHeads>& dlogits, const Eigen::RowVectorXd& dvalues,
                Eigen::VectorXd& grad) const;

  // Views into the flat parameter vector.
  Eigen::Map<const Eigen::MatrixXd> w1() const { return mat(w1_, hidden_, input_); }
  Eigen::Map<const Eigen::VectorXd> b1() const { return vec(b1_, hidden_); }
  Eigen::Map<const Eigen::MatrixXd> w2() const { return mat(w2_, hidden_, hidden_); }
  Eigen::Map<const Eigen::VectorXd> b2() const { return vec(b2_, hidden_); }
  Eigen::Map<const Eigen::MatrixXd> head_w(int h) const { return mat(head_w_[h], heads_[h], hidden_); }
  Eigen::Map<const Eigen::VectorXd> head_b(int h) const { return vec(head_b_[h], heads_[h]); }
  Eigen::Map<const Eigen::MatrixXd> value_w() const { return mat(value_w_, 1, hidden_); }
  double value_b() const { return params_[value_b_]; }

 private:
  Eigen::Map<const Eigen::MatrixXd> mat(Eigen::Index off, Eigen::Index r, Eigen::Index c) const {
    return {params_.data() + off, r, c};
  }
  Eigen::Map<const Eigen::VectorXd> vec(Eigen::Index off, Eigen::Index n) const {
    return {params_.data() + off, n};
  }
  void orthogonal(Eigen::Index off, Eigen::Index rows, Eigen::Index cols, double gain, Rng& rng);

  HeadSizes heads_;
  int hidden_;
  int input_;
  Eigen::Index w1_, b1_, w2_, b2_;
  std::array<Eigen::Index, kHeads> head_w_{}, head_b_{};
  Eigen::Index value_w_, value_b_;
  Eigen::VectorXd params_;
};

// Numerically stable log-softmax of one logit vector.
Eigen::VectorXd log_softmax(const Eigen::VectorXd& logits);

}  // namespace dralns::policy
