#pragma once

namespace dralns::alns {

enum class Sense { Maximize, Minimize };

struct Objective {
  double value = 0.0;
  Sense sense = Sense::Minimize;
};

// Strict improvement of `a` over `b` under the shared sense.
inline bool is_better(const Objective& a, const Objective& b) {
  return a.sense == Sense::Maximize ? a.value > b.value : a.value < b.value;
}

inline bool is_better(double a, double b, Sense sense) {
  return is_better(Objective{a, sense}, Objective{b, sense});
}

// Positive when `candidate` is worse than `reference`.
inline double worsening(const Objective& candidate, const Objective& reference) {
  return candidate.sense == Sense::Maximize ? reference.value - candidate.value
                                            : candidate.value - reference.value;
}

}  // namespace dralns::alns
