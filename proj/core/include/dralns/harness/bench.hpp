#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dralns/alns/objective.hpp"
#include "dralns/harness/runner.hpp"

namespace dralns::harness {

struct MethodSummary {
  std::string method;
  double avg = 0.0;     // mean best objective over all of the method's rows
  int nr_best = 0;      // instances where the method's per-instance mean is best (ties credit all)
  int instances = 0;
  int runs = 0;
};

// Methods sorted by name. Only instances on which every method has rows
// count towards Nr. Best.
std::vector<MethodSummary> aggregate(const std::vector<ResultRow>& rows, alns::Sense sense);

void write_summary(const std::filesystem::path& path, const std::vector<MethodSummary>& summary);

}  // namespace dralns::harness
