#pragma once

#include <string_view>

#include "dralns/alns/objective.hpp"

namespace dralns::alns {

enum class Outcome { NewBest, ImprovedCurrent, Accepted, Rejected };

std::string_view to_string(Outcome outcome);

// Solution-independent bookkeeping of a search; every observation feature is
// derived from it.
struct SearchStatus {
  Objective current_obj;
  Objective best_obj;
  long long iteration = 0;
  long long budget = 1;
  long long stagnation_count = 0;
  Outcome last_outcome = Outcome::Rejected;
  bool best_improved = false;
  bool current_accepted = false;
  bool current_improved = false;
  bool is_current_best = true;

  static SearchStatus start(const Objective& initial, long long budget);

  // Folds one iteration into the status. A candidate strictly better than the
  // best becomes the new best (and current) regardless of `accepted`; ties
  // with the best are not improvements.
  Outcome record(const Objective& candidate, bool accepted);
};

template <typename Solution>
struct SearchState {
  Solution current;
  Solution best;
  SearchStatus status;

  SearchState(Solution initial, const Objective& initial_obj, long long budget)
      : current(initial), best(std::move(initial)), status(SearchStatus::start(initial_obj, budget)) {}

  Outcome advance(Solution&& candidate, const Objective& candidate_obj, bool accepted) {
    const Outcome outcome = status.record(candidate_obj, accepted);
    if (outcome == Outcome::NewBest) {
      best = candidate;
      current = std::move(candidate);
    } else if (outcome != Outcome::Rejected) {
      current = std::move(candidate);
    }
    return outcome;
  }
};

}  // namespace dralns::alns
