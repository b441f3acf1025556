#pragma once

#include <ostream>
#include <vector>

namespace dralns::alns {

struct TraceRow {
  long long iteration = 0;
  double current_obj = 0.0;
  double best_obj = 0.0;
  int destroy_idx = -1;
  int repair_idx = -1;
  bool accepted = false;
  double temperature = 0.0;
  // Set only for controller-driven (DR-ALNS) runs.
  int severity = 0;
  int temp_level = 0;
  double reward = 0.0;
};

using Trace = std::vector<TraceRow>;

// iteration,current_obj,best_obj,destroy_idx,repair_idx,accepted,temperature
// plus severity,temp_level,reward when `with_actions` is set.
void write_trace_csv(std::ostream& out, const Trace& trace, bool with_actions = false);

}  // namespace dralns::alns
