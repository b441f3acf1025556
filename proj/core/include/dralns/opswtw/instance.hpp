#pragma once

#include <cstdint>
#include <vector>

#include "dralns/common/geometry.hpp"

namespace dralns::opswtw {

inline constexpr int kDepot = 0;

// Orienteering instance with stochastic travel times and time windows. Node 0
// is the depot; `n()` counts every node including the depot. Immutable once
// constructed.
class OpswtwInstance {
 public:
  OpswtwInstance(std::vector<Point> coords, std::vector<double> prizes, std::vector<double> tw_open,
                 std::vector<double> tw_close, double max_tour, int beta = 100);

  std::size_t n() const { return coords_.size(); }
  const std::vector<Point>& coords() const { return coords_; }
  const std::vector<double>& prizes() const { return prizes_; }
  const std::vector<double>& tw_open() const { return tw_open_; }
  const std::vector<double>& tw_close() const { return tw_close_; }
  double max_tour() const { return max_tour_; }
  int beta() const { return beta_; }
  double distance(std::size_t i, std::size_t j) const { return dist_(i, j); }

  friend bool operator==(const OpswtwInstance& a, const OpswtwInstance& b) {
    return a.coords_ == b.coords_ && a.prizes_ == b.prizes_ && a.tw_open_ == b.tw_open_ &&
           a.tw_close_ == b.tw_close_ && a.max_tour_ == b.max_tour_ && a.beta_ == b.beta_;
  }

 private:
  std::vector<Point> coords_;
  std::vector<double> prizes_;
  std::vector<double> tw_open_;
  std::vector<double> tw_close_;
  double max_tour_;
  int beta_;
  DistanceMatrix dist_;
};

// Random instance: coordinates in the unit square, prizes in [0.1, 1.0] with
// two decimals, budget L a random multiple in [1.5, 3.0] of the expected
// nearest-neighbour tour time, windows opening in [0, 0.8L] and lasting
// [0.1L, 0.4L]. Deterministic in (n, seed).
OpswtwInstance generate_instance(std::size_t n, std::uint64_t seed);

}  // namespace dralns::opswtw
