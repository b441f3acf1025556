#include "dralns/alns/search_state.hpp"

namespace dralns::alns {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::NewBest:
      return "new_best";
    case Outcome::ImprovedCurrent:
      return "improved_current";
    case Outcome::Accepted:
      return "accepted";
    case Outcome::Rejected:
      return "rejected";
  }
  return "rejected";
}

SearchStatus SearchStatus::start(const Objective& initial, long long budget) {
  SearchStatus s;
  s.current_obj = initial;
  s.best_obj = initial;
  s.budget = budget;
  return s;
}

Outcome SearchStatus::record(const Objective& candidate, bool accepted) {
  Outcome outcome = Outcome::Rejected;
  if (is_better(candidate, best_obj)) {
    outcome = Outcome::NewBest;
    accepted = true;
  } else if (accepted) {
    outcome = is_better(candidate, current_obj) ? Outcome::ImprovedCurrent : Outcome::Accepted;
  }

  if (accepted) {
    current_obj = candidate;
  }
  if (outcome == Outcome::NewBest) {
    best_obj = candidate;
    stagnation_count = 0;
  } else {
    ++stagnation_count;
  }

  last_outcome = outcome;
  best_improved = outcome == Outcome::NewBest;
  current_accepted = accepted;
  current_improved = outcome == Outcome::NewBest || outcome == Outcome::ImprovedCurrent;
  is_current_best = current_obj.value == best_obj.value;
  ++iteration;
  return outcome;
}

}  // namespace dralns::alns
