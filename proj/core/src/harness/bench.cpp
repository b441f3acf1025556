#include "dralns/harness/bench.hpp"

#include <fstream>
#include <map>

#include "dralns/common/csv.hpp"

namespace dralns::harness {

std::vector<MethodSummary> aggregate(const std::vector<ResultRow>& rows, alns::Sense sense) {
  struct Acc {
    double sum = 0.0;
    int count = 0;
  };
  std::map<std::string, Acc> per_method;
  std::map<std::string, std::map<std::string, Acc>> per_instance;  // instance -> method -> acc
  for (const auto& row : rows) {
    auto& m = per_method[row.method];
    m.sum += row.best_objective;
    ++m.count;
    auto& im = per_instance[row.instance_id][row.method];
    im.sum += row.best_objective;
    ++im.count;
  }

  std::map<std::string, MethodSummary> summary;
  for (const auto& [name, acc] : per_method) {
    summary[name] = MethodSummary{name, acc.sum / acc.count, 0, 0, acc.count};
  }
  for (const auto& [instance, methods] : per_instance) {
    for (const auto& [name, acc] : methods) {
      ++summary[name].instances;
    }
    if (methods.size() != per_method.size()) {
      continue;
    }
    bool first = true;
    double best = 0.0;
    for (const auto& [name, acc] : methods) {
      const double mean = acc.sum / acc.count;
      if (first || alns::is_better(mean, best, sense)) {
        best = mean;
        first = false;
      }
    }
    for (const auto& [name, acc] : methods) {
      if (acc.sum / acc.count == best) {
        ++summary[name].nr_best;
      }
    }
  }

  std::vector<MethodSummary> out;
  for (auto& [name, s] : summary) {
    out.push_back(s);
  }
  return out;
}

void write_summary(const std::filesystem::path& path, const std::vector<MethodSummary>& summary) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  CsvWriter csv(out);
  csv.header({"method", "avg", "nr_best", "instances", "runs"});
  for (const auto& s : summary) {
    csv.field(s.method).field(s.avg).field(s.nr_best).field(s.instances).field(s.runs);
    csv.end_row();
  }
}

}  // namespace dralns::harness
