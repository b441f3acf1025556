#pragma once

#include <cmath>
#include <vector>

namespace dralns {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double euclidean(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Dense row-major Euclidean distance matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const std::vector<Point>& points) : n_(points.size()), d_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        d_[i * n_ + j] = euclidean(points[i], points[j]);
      }
    }
  }

  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

}  // namespace dralns
