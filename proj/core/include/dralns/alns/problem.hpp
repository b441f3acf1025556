#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>

#include "dralns/alns/objective.hpp"
#include "dralns/common/random.hpp"

namespace dralns::alns {

// A per-search view of one problem instance together with its destroy and
// repair operators. The search loop and the MDP environment only talk to a
// problem through this surface.
//
//   reset(seed)          start a fresh search: clears per-search history and
//                        reseeds any internal evaluation noise stream
//   initial_solution     the solution every search starts from
//   removable_count      how many elements a destroy operator may remove
//   destroy / repair     operator application by index
//   evaluate             objective used for acceptance and best tracking
//   observe              hook called with every evaluated candidate
//   t_start_reference    objective fed into the start-temperature rule
template <typename P>
concept Problem = requires(P& p, const P& cp, const typename P::Solution& s,
                           typename P::Solution moved, Rng& rng, std::size_t k,
                           std::uint64_t seed, double value) {
  typename P::Solution;
  { cp.sense() } -> std::same_as<Sense>;
  { cp.destroy_count() } -> std::convertible_to<std::size_t>;
  { cp.repair_count() } -> std::convertible_to<std::size_t>;
  { cp.destroy_name(k) } -> std::convertible_to<std::string>;
  { cp.repair_name(k) } -> std::convertible_to<std::string>;
  { p.reset(seed) };
  { p.initial_solution(rng) } -> std::same_as<typename P::Solution>;
  { cp.removable_count(s) } -> std::convertible_to<std::size_t>;
  { p.destroy(k, s, k, rng) } -> std::same_as<typename P::Solution>;
  { p.repair(k, std::move(moved), rng) } -> std::same_as<typename P::Solution>;
  { p.evaluate(s) } -> std::convertible_to<double>;
  { p.observe(s, value) };
  { p.t_start_reference(rng) } -> std::convertible_to<double>;
};

}  // namespace dralns::alns
