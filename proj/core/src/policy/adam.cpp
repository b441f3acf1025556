#include "dralns/policy/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace dralns::policy {

Adam::Adam(Eigen::Index size, double learning_rate, double beta1, double beta2, double epsilon)
    : lr_(learning_rate),
      beta1_(beta1),
      beta2_(beta2),
      eps_(epsilon),
      m_(Eigen::VectorXd::Zero(size)),
      v_(Eigen::VectorXd::Zero(size)) {}

void Adam::step(Eigen::VectorXd& params, const Eigen::VectorXd& grad) {
  ++t_;
  m_ = beta1_ * m_ + (1.0 - beta1_) * grad;
  v_ = beta2_ * v_ + (1.0 - beta2_) * grad.cwiseProduct(grad);
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  params.array() -= lr_ * (m_.array() / c1) / ((v_.array() / c2).sqrt() + eps_);
}

void Adam::restore(Eigen::VectorXd m, Eigen::VectorXd v, long long t) {
  if (m.size() != m_.size() || v.size() != v_.size()) {
    throw std::invalid_argument("adam: restored state has the wrong size");
  }
  m_ = std::move(m);
  v_ = std::move(v);
  t_ = t;
}

}  // namespace dralns::policy
