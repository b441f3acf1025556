#include "dralns/policy/network.hpp"

#include <cmath>
#include <stdexcept>

namespace dralns::policy {

Eigen::VectorXd to_network_input(const env::Observation& obs, long long budget) {
  const auto a = obs.to_array();
  Eigen::VectorXd x(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    x[static_cast<Eigen::Index>(i)] = a[i];
  }
  x[5] = obs.stagnation_count / static_cast<double>(budget);
  return x;
}

PolicyNetwork::PolicyNetwork(HeadSizes heads, int hidden, int input)
    : heads_(heads), hidden_(hidden), input_(input) {
  for (const int k : heads_) {
    if (k < 1) {
      throw std::invalid_argument("policy network: head sizes must be >= 1");
    }
  }
  Eigen::Index off = 0;
  auto take = [&off](Eigen::Index n) {
    const Eigen::Index at = off;
    off += n;
    return at;
  };
  w1_ = take(static_cast<Eigen::Index>(hidden_) * input_);
  b1_ = take(hidden_);
  w2_ = take(static_cast<Eigen::Index>(hidden_) * hidden_);
  b2_ = take(hidden_);
  for (int h = 0; h < kHeads; ++h) {
    head_w_[h] = take(static_cast<Eigen::Index>(heads_[h]) * hidden_);
    head_b_[h] = take(heads_[h]);
  }
  value_w_ = take(hidden_);
  value_b_ = take(1);
  params_ = Eigen::VectorXd::Zero(off);
}

void PolicyNetwork::orthogonal(Eigen::Index off, Eigen::Index rows, Eigen::Index cols, double gain, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index big = std::max(rows, cols);
  const Eigen::Index small = std::min(rows, cols);
  Eigen::MatrixXd a(big, small);
  for (Eigen::Index j = 0; j < small; ++j) {
    for (Eigen::Index i = 0; i < big; ++i) {
      a(i, j) = normal(rng);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(big, small);
  // Sign fix so the distribution is uniform over orthogonal matrices.
  const Eigen::MatrixXd r = qr.matrixQR().topRows(small).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < small; ++j) {
    if (r(j, j) < 0.0) {
      q.col(j) *= -1.0;
    }
  }
  Eigen::Map<Eigen::MatrixXd> w(params_.data() + off, rows, cols);
  w = gain * (rows >= cols ? q : Eigen::MatrixXd(q.transpose()));
}

void PolicyNetwork::initialize(Rng& rng) {
  params_.setZero();
  orthogonal(w1_, hidden_, input_, std::sqrt(2.0), rng);
  orthogonal(w2_, hidden_, hidden_, std::sqrt(2.0), rng);
  for (int h = 0; h < kHeads; ++h) {
    orthogonal(head_w_[h], heads_[h], hidden_, 0.01, rng);
  }
  orthogonal(value_w_, 1, hidden_, 1.0, rng);
}

ForwardOutput PolicyNetwork::forward(const Eigen::VectorXd& x) const {
  if (x.size() != input_) {
    throw std::invalid_argument("policy network: wrong observation size");
  }
  const Eigen::VectorXd h1 = (w1() * x + b1()).array().tanh().matrix();
  const Eigen::VectorXd h2 = (w2() * h1 + b2()).array().tanh().matrix();
  ForwardOutput out;
  for (int h = 0; h < kHeads; ++h) {
    out.logits[h] = head_w(h) * h2 + head_b(h);
  }
  out.value = value_w().row(0).dot(h2) + value_b();
  return out;
}

BatchForward PolicyNetwork::forward_batch(const Eigen::MatrixXd& inputs) const {
  if (inputs.rows() != input_) {
    throw std::invalid_argument("policy network: wrong observation size");
  }
  BatchForward f;
  f.hidden1 = ((w1() * inputs).colwise() + b1()).array().tanh().matrix();
  f.hidden2 = ((w2() * f.hidden1).colwise() + b2()).array().tanh().matrix();
  for (int h = 0; h < kHeads; ++h) {
    f.logits[h] = (head_w(h) * f.hidden2).colwise() + head_b(h);
  }
  f.values = (value_w() * f.hidden2).array() + value_b();
  return f;
}

void PolicyNetwork::backward(const Eigen::MatrixXd& inputs, const BatchForward& fwd,
                             const std::array<Eigen::MatrixXd, kHeads>& dlogits,
                             const Eigen::RowVectorXd& dvalues, Eigen::VectorXd& grad) const {
  auto gmat = [&grad](Eigen::Index off, Eigen::Index r, Eigen::Index c) {
    return Eigen::Map<Eigen::MatrixXd>(grad.data() + off, r, c);
  };
  auto gvec = [&grad](Eigen::Index off, Eigen::Index n) { return Eigen::Map<Eigen::VectorXd>(grad.data() + off, n); };

  Eigen::MatrixXd dh2 = value_w().transpose() * dvalues;
  gmat(value_w_, 1, hidden_) += dvalues * fwd.hidden2.transpose();
  grad[value_b_] += dvalues.sum();
  for (int h = 0; h < kHeads; ++h) {
    gmat(head_w_[h], heads_[h], hidden_) += dlogits[h] * fwd.hidden2.transpose();
    gvec(head_b_[h], heads_[h]) += dlogits[h].rowwise().sum();
    dh2 += head_w(h).transpose() * dlogits[h];
  }
  const Eigen::MatrixXd dz2 = dh2.array() * (1.0 - fwd.hidden2.array().square());
  gmat(w2_, hidden_, hidden_) += dz2 * fwd.hidden1.transpose();
  gvec(b2_, hidden_) += dz2.rowwise().sum();
  const Eigen::MatrixXd dz1 = (w2().transpose() * dz2).array() * (1.0 - fwd.hidden1.array().square());
  gmat(w1_, hidden_, input_) += dz1 * inputs.transpose();
  gvec(b1_, hidden_) += dz1.rowwise().sum();
}

Eigen::VectorXd log_softmax(const Eigen::VectorXd& logits) {
  const double m = logits.maxCoeff();
  const double lse = m + std::log((logits.array() - m).exp().sum());
  return logits.array() - lse;
}

}  // namespace dralns::policy
