#include "dralns/alns/trace.hpp"

#include "dralns/common/csv.hpp"

namespace dralns::alns {

void write_trace_csv(std::ostream& out, const Trace& trace, bool with_actions) {
  CsvWriter csv(out);
  std::vector<std::string> columns{"iteration", "current_obj", "best_obj", "destroy_idx",
                                   "repair_idx", "accepted", "temperature"};
  if (with_actions) {
    columns.insert(columns.end(), {"severity", "temp_level", "reward"});
  }
  csv.header(columns);
  for (const auto& row : trace) {
    csv.field(row.iteration)
        .field(row.current_obj)
        .field(row.best_obj)
        .field(row.destroy_idx)
        .field(row.repair_idx)
        .field(row.accepted)
        .field(row.temperature);
    if (with_actions) {
      csv.field(row.severity).field(row.temp_level).field(row.reward);
    }
    csv.end_row();
  }
}

}  // namespace dralns::alns
