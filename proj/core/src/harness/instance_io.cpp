#include "dralns/harness/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dralns/common/random.hpp"

namespace dralns::harness {
namespace {

constexpr const char* kFormat = "dralns-instance";
constexpr int kVersion = 1;

nlohmann::json coords_json(const std::vector<Point>& coords) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : coords) {
    out.push_back({p.x, p.y});
  }
  return out;
}

std::vector<Point> coords_from(const nlohmann::json& j) {
  std::vector<Point> coords;
  for (const auto& p : j) {
    if (p.size() != 2) {
      throw std::runtime_error("instance: coordinates must be [x, y] pairs");
    }
    coords.push_back(Point{p[0].get<double>(), p[1].get<double>()});
  }
  return coords;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << j.dump(1) << '\n';
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.value("format", std::string{}) != kFormat || j.value("version", 0) != kVersion) {
    throw std::runtime_error(path.string() + ": not a version " + std::to_string(kVersion) + " instance file");
  }
  return j;
}

}  // namespace

std::string_view to_string(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::Opswtw:
      return "opswtw";
    case ProblemKind::Tsp:
      return "tsp";
    case ProblemKind::Cvrp:
      return "cvrp";
    case ProblemKind::Mtsp:
      return "mtsp";
  }
  return "unknown";
}

ProblemKind parse_problem(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto kind : {ProblemKind::Opswtw, ProblemKind::Tsp, ProblemKind::Cvrp, ProblemKind::Mtsp}) {
    if (lower == to_string(kind)) {
      return kind;
    }
  }
  throw std::invalid_argument("unknown problem: " + std::string(name));
}

routing::Variant to_variant(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::Tsp:
      return routing::Variant::TSP;
    case ProblemKind::Cvrp:
      return routing::Variant::CVRP;
    case ProblemKind::Mtsp:
      return routing::Variant::MTSP;
    case ProblemKind::Opswtw:
      break;
  }
  throw std::invalid_argument("opswtw is not a routing variant");
}

std::string instance_id(ProblemKind problem, std::size_t size, std::uint64_t seed, std::size_t index) {
  std::string idx = std::to_string(index);
  if (idx.size() < 4) {
    idx.insert(0, 4 - idx.size(), '0');
  }
  return std::string(to_string(problem)) + "-" + std::to_string(size) + "-s" + std::to_string(seed) + "-" + idx;
}

InstanceSet generate_set(ProblemKind problem, const GenerationSpec& spec) {
  if (spec.count < 0) {
    throw std::invalid_argument("generate_set: count must be >= 0");
  }
  InstanceSet set;
  set.problem = problem;
  for (int i = 0; i < spec.count; ++i) {
    const auto index = static_cast<std::size_t>(i);
    const std::uint64_t seed = derive_seed(spec.seed, "instance-set", index);
    set.ids.push_back(instance_id(problem, spec.size, spec.seed, index));
    if (problem == ProblemKind::Opswtw) {
      set.opswtw.push_back(opswtw::generate_instance(spec.size, seed));
    } else {
      set.routing.push_back(routing::generate_routing(to_variant(problem), spec.size, seed, spec.salesmen));
    }
  }
  return set;
}

void save_instance(const std::filesystem::path& path, const opswtw::OpswtwInstance& instance) {
  nlohmann::json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["problem"] = "opswtw";
  j["coords"] = coords_json(instance.coords());
  j["prizes"] = instance.prizes();
  j["tw_open"] = instance.tw_open();
  j["tw_close"] = instance.tw_close();
  j["max_tour"] = instance.max_tour();
  j["beta"] = instance.beta();
  write_json(path, j);
}

void save_instance(const std::filesystem::path& path, const routing::RoutingInstance& instance) {
  nlohmann::json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["problem"] = std::string(routing::to_string(instance.variant()));
  j["coords"] = coords_json(instance.coords());
  j["demands"] = instance.demands();
  j["capacity"] = instance.capacity();
  j["salesmen"] = instance.salesmen();
  write_json(path, j);
}

opswtw::OpswtwInstance load_opswtw(const std::filesystem::path& path) {
  const nlohmann::json j = read_json(path);
  try {
    if (j.at("problem").get<std::string>() != "opswtw") {
      throw std::runtime_error(path.string() + ": not an opswtw instance");
    }
    return opswtw::OpswtwInstance(coords_from(j.at("coords")), j.at("prizes").get<std::vector<double>>(),
                                  j.at("tw_open").get<std::vector<double>>(),
                                  j.at("tw_close").get<std::vector<double>>(), j.at("max_tour").get<double>(),
                                  j.value("beta", 100));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

routing::RoutingInstance load_routing(const std::filesystem::path& path) {
  const nlohmann::json j = read_json(path);
  try {
    return routing::RoutingInstance(routing::parse_variant(j.at("problem").get<std::string>()),
                                    coords_from(j.at("coords")), j.value("demands", std::vector<int>{}),
                                    j.value("capacity", 0), j.value("salesmen", 0));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::vector<std::filesystem::path> write_set(const InstanceSet& set, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto path = dir / (set.ids[i] + ".json");
    if (set.problem == ProblemKind::Opswtw) {
      save_instance(path, set.opswtw[i]);
    } else {
      save_instance(path, set.routing[i]);
    }
    written.push_back(path);
  }
  return written;
}

InstanceSet load_set(ProblemKind problem, const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("instance directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  InstanceSet set;
  set.problem = problem;
  for (const auto& path : files) {
    set.ids.push_back(path.stem().string());
    if (problem == ProblemKind::Opswtw) {
      set.opswtw.push_back(load_opswtw(path));
    } else {
      set.routing.push_back(load_routing(path));
      if (set.routing.back().variant() != to_variant(problem)) {
        throw std::runtime_error(path.string() + ": expected a " + std::string(to_string(problem)) + " instance");
      }
    }
  }
  return set;
}

std::size_t count_shared(const InstanceSet& a, const InstanceSet& b) {
  if (a.problem != b.problem) {
    return 0;
  }
  std::size_t shared = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool found = a.problem == ProblemKind::Opswtw
                           ? std::find(b.opswtw.begin(), b.opswtw.end(), a.opswtw[i]) != b.opswtw.end()
                           : std::find(b.routing.begin(), b.routing.end(), a.routing[i]) != b.routing.end();
    shared += found ? 1 : 0;
  }
  return shared;
}

}  // namespace dralns::harness
