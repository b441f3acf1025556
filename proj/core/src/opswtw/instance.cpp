#include "dralns/opswtw/instance.hpp"

#include <cmath>
#include <stdexcept>

#include "dralns/common/random.hpp"

namespace dralns::opswtw {

OpswtwInstance::OpswtwInstance(std::vector<Point> coords, std::vector<double> prizes,
                               std::vector<double> tw_open, std::vector<double> tw_close,
                               double max_tour, int beta)
    : coords_(std::move(coords)),
      prizes_(std::move(prizes)),
      tw_open_(std::move(tw_open)),
      tw_close_(std::move(tw_close)),
      max_tour_(max_tour),
      beta_(beta) {
  const std::size_t n = coords_.size();
  if (n < 2) {
    throw std::invalid_argument("opswtw instance: need a depot and at least one customer");
  }
  if (prizes_.size() != n || tw_open_.size() != n || tw_close_.size() != n) {
    throw std::invalid_argument("opswtw instance: field lengths disagree with coords");
  }
  if (!(max_tour_ > 0.0) || beta_ <= 0) {
    throw std::invalid_argument("opswtw instance: max_tour and beta must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(tw_open_[i] <= tw_close_[i])) {
      throw std::invalid_argument("opswtw instance: tw_open must not exceed tw_close");
    }
    if (prizes_[i] < 0.0) {
      throw std::invalid_argument("opswtw instance: negative prize");
    }
  }
  if (prizes_[kDepot] != 0.0) {
    throw std::invalid_argument("opswtw instance: depot prize must be 0");
  }
  dist_ = DistanceMatrix(coords_);
}

namespace {

double nearest_neighbour_length(const std::vector<Point>& pts) {
  std::vector<bool> seen(pts.size(), false);
  seen[kDepot] = true;
  std::size_t at = kDepot;
  double length = 0.0;
  for (std::size_t step = 1; step < pts.size(); ++step) {
    std::size_t next = at;
    double best = INFINITY;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!seen[j] && euclidean(pts[at], pts[j]) < best) {
        best = euclidean(pts[at], pts[j]);
        next = j;
      }
    }
    seen[next] = true;
    length += best;
    at = next;
  }
  return length + euclidean(pts[at], pts[kDepot]);
}

}  // namespace

OpswtwInstance generate_instance(std::size_t n, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("generate_instance: n must be >= 2");
  }
  constexpr int beta = 100;
  Rng rng = make_rng(seed, "instance-gen/opswtw", n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Point> coords(n);
  for (auto& p : coords) {
    p.x = unit(rng);
    p.y = unit(rng);
  }
  std::vector<double> prizes(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    prizes[i] = std::round(std::uniform_real_distribution<double>(0.1, 1.0)(rng) * 100.0) / 100.0;
  }

  // Mean of U{1..100} / beta.
  const double expected_noise = (1.0 + 100.0) / 2.0 / beta;
  const double multiplier = std::uniform_real_distribution<double>(1.5, 3.0)(rng);
  const double max_tour = multiplier * expected_noise * nearest_neighbour_length(coords);

  std::vector<double> open(n, 0.0);
  std::vector<double> close(n, max_tour);
  for (std::size_t i = 1; i < n; ++i) {
    open[i] = std::uniform_real_distribution<double>(0.0, 0.8 * max_tour)(rng);
    close[i] = open[i] + std::uniform_real_distribution<double>(0.1 * max_tour, 0.4 * max_tour)(rng);
  }
  return OpswtwInstance(std::move(coords), std::move(prizes), std::move(open), std::move(close),
                        max_tour, beta);
}

}  // namespace dralns::opswtw
