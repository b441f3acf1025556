#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dralns/opswtw/instance.hpp"
#include "dralns/routing/instance.hpp"

namespace dralns::harness {

enum class ProblemKind { Opswtw, Tsp, Cvrp, Mtsp };

std::string_view to_string(ProblemKind problem);
// Accepts "opswtw", "tsp", "cvrp", "mtsp" (case-insensitive).
ProblemKind parse_problem(std::string_view name);
routing::Variant to_variant(ProblemKind problem);

struct GenerationSpec {
  int count = 0;
  std::size_t size = 20;
  std::uint64_t seed = 0;
  int salesmen = routing::kDefaultSalesmen;  // mTSP only
};

// A named, ordered collection of instances of one problem kind. Exactly one of
// the two instance vectors is populated.
struct InstanceSet {
  ProblemKind problem = ProblemKind::Opswtw;
  std::vector<std::string> ids;
  std::vector<opswtw::OpswtwInstance> opswtw;
  std::vector<routing::RoutingInstance> routing;

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
};

std::string instance_id(ProblemKind problem, std::size_t size, std::uint64_t seed, std::size_t index);

// Instance i uses seed derive_seed(spec.seed, "instance-set", i).
InstanceSet generate_set(ProblemKind problem, const GenerationSpec& spec);

void save_instance(const std::filesystem::path& path, const opswtw::OpswtwInstance& instance);
void save_instance(const std::filesystem::path& path, const routing::RoutingInstance& instance);
opswtw::OpswtwInstance load_opswtw(const std::filesystem::path& path);
routing::RoutingInstance load_routing(const std::filesystem::path& path);

// Writes <dir>/<id>.json for every instance; returns the paths written.
std::vector<std::filesystem::path> write_set(const InstanceSet& set, const std::filesystem::path& dir);
// Loads every *.json in `dir` in filename order; ids are the file stems.
InstanceSet load_set(ProblemKind problem, const std::filesystem::path& dir);

// Number of instances of `a` that also occur in `b`.
std::size_t count_shared(const InstanceSet& a, const InstanceSet& b);

}  // namespace dralns::harness
