#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dralns::alns {

struct AlnsParams {
  std::array<double, 4> omega{5.0, 3.0, 1.0, 0.0};
  double theta = 0.8;  // weight decay
  double dod = 0.3;    // degree of destruction
  double t_start = 1.0;
  long long iterations = 100;

  void validate() const {
    for (const double w : omega) {
      if (!(w >= 0.0)) {
        throw std::invalid_argument("alns params: omega entries must be >= 0");
      }
    }
    if (!(theta >= 0.0 && theta <= 1.0)) {
      throw std::invalid_argument("alns params: theta must lie in [0, 1]");
    }
    if (!(dod > 0.0 && dod <= 1.0)) {
      throw std::invalid_argument("alns params: dod must lie in (0, 1]");
    }
    if (!(t_start > 0.0)) {
      throw std::invalid_argument("alns params: t_start must be positive");
    }
    if (iterations < 0) {
      throw std::invalid_argument("alns params: iterations must be >= 0");
    }
  }
};

// Number of elements a destroy step removes for a severity fraction: at least
// one whenever anything is removable.
inline std::size_t removal_count(double fraction, std::size_t removable) {
  if (removable == 0) {
    return 0;
  }
  const auto n = static_cast<std::size_t>(fraction * static_cast<double>(removable) + 0.5);
  return std::clamp<std::size_t>(n, 1, removable);
}

}  // namespace dralns::alns
