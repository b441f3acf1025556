#pragma once

#include <Eigen/Dense>

namespace dralns::policy {

// Adam with bias correction.
class Adam {
 public:
  explicit Adam(Eigen::Index size, double learning_rate = 3e-4, double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8);

  void step(Eigen::VectorXd& params, const Eigen::VectorXd& grad);

  double learning_rate() const { return lr_; }
  long long steps() const { return t_; }
  const Eigen::VectorXd& first_moment() const { return m_; }
  const Eigen::VectorXd& second_moment() const { return v_; }
  void restore(Eigen::VectorXd m, Eigen::VectorXd v, long long t);

 private:
  double lr_, beta1_, beta2_, eps_;
  Eigen::VectorXd m_, v_;
  long long t_ = 0;
};

}  // namespace dralns::policy
