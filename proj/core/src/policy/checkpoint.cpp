#include "dralns/policy/checkpoint.hpp"

#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace dralns::policy {
namespace {

constexpr const char* kFormat = "dralns-policy";

nlohmann::json to_json_array(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::VectorXd from_json_array(const nlohmann::json& j, Eigen::Index expected, const char* what) {
  const auto values = j.get<std::vector<double>>();
  if (static_cast<Eigen::Index>(values.size()) != expected) {
    throw std::runtime_error(std::string("checkpoint: wrong length for ") + what);
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(), expected);
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  nlohmann::json j;
  j["format"] = kFormat;
  j["version"] = kCheckpointVersion;
  j["fingerprint"] = {{"problem", ckpt.fingerprint.problem},
                      {"destroy_ops", ckpt.fingerprint.destroy_ops},
                      {"repair_ops", ckpt.fingerprint.repair_ops}};
  j["network"] = {{"input", ckpt.network.input()},
                  {"hidden", ckpt.network.hidden()},
                  {"heads", ckpt.network.head_sizes()},
                  {"parameters", to_json_array(ckpt.network.parameters())}};
  j["optimizer"] = {{"learning_rate", ckpt.optimizer.learning_rate()},
                    {"steps", ckpt.optimizer.steps()},
                    {"m", to_json_array(ckpt.optimizer.first_moment())},
                    {"v", to_json_array(ckpt.optimizer.second_moment())}};
  j["steps_done"] = ckpt.steps_done;
  j["episodes_done"] = ckpt.episodes_done;
  j["seed"] = ckpt.seed;

  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("checkpoint: cannot write " + path.string());
  }
  // Shortest round-trip doubles keep save/load lossless.
  out << j.dump(1) << '\n';
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("checkpoint: cannot read " + path.string());
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    if (j.at("format").get<std::string>() != kFormat) {
      throw std::runtime_error("checkpoint: unknown format");
    }
    if (j.at("version").get<int>() != kCheckpointVersion) {
      throw std::runtime_error("checkpoint: unsupported version " + j.at("version").dump());
    }
    const auto& fp = j.at("fingerprint");
    const auto& nj = j.at("network");
    const auto& oj = j.at("optimizer");
    PolicyNetwork net(nj.at("heads").get<HeadSizes>(), nj.at("hidden").get<int>(), nj.at("input").get<int>());
    net.parameters() = from_json_array(nj.at("parameters"), net.parameter_count(), "parameters");
    if (!net.parameters().allFinite()) {
      throw std::runtime_error("checkpoint: non-finite parameters");
    }
    Adam adam(net.parameter_count(), oj.at("learning_rate").get<double>());
    adam.restore(from_json_array(oj.at("m"), net.parameter_count(), "optimizer m"),
                 from_json_array(oj.at("v"), net.parameter_count(), "optimizer v"), oj.at("steps").get<long long>());
    return Checkpoint{Fingerprint{fp.at("problem").get<std::string>(), fp.at("destroy_ops").get<int>(),
                                  fp.at("repair_ops").get<int>()},
                      std::move(net),
                      std::move(adam),
                      j.at("steps_done").get<long long>(),
                      j.value("episodes_done", 0LL),
                      j.value("seed", std::uint64_t{0})};
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("checkpoint: malformed ") + path.string() + ": " + e.what());
  }
}

void check_fingerprint(const Checkpoint& ckpt, const Fingerprint& expected, bool allow_transfer) {
  const HeadSizes& heads = ckpt.network.head_sizes();
  if (heads[0] != expected.destroy_ops || heads[1] != expected.repair_ops || heads[2] != env::kSeverityLevels ||
      heads[3] != env::kTemperatureLevels) {
    throw FingerprintError("checkpoint head sizes (" + std::to_string(heads[0]) + " destroy, " +
                           std::to_string(heads[1]) + " repair) do not match the problem (" +
                           std::to_string(expected.destroy_ops) + ", " + std::to_string(expected.repair_ops) + ")");
  }
  if (!(ckpt.fingerprint == expected) && !allow_transfer) {
    throw FingerprintError("checkpoint was trained for " + ckpt.fingerprint.problem + ", not " + expected.problem +
                           "; pass --allow-transfer to reuse it");
  }
}

}  // namespace dralns::policy
