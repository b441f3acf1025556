#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dralns {

// All stochastic components draw from this engine. Distributions come from
// <random>, so streams are reproducible for a given standard library build.
using Rng = std::mt19937_64;

// Derives an independent seed for a named stream ("search", "noise",
// "policy", "instance-gen", ...) and an index such as a run number.
std::uint64_t derive_seed(std::uint64_t base, std::string_view stream, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t base, std::string_view stream, std::uint64_t index = 0) {
  return Rng(derive_seed(base, stream, index));
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace dralns
