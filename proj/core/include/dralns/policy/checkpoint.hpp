#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "dralns/policy/adam.hpp"
#include "dralns/policy/network.hpp"

namespace dralns::policy {

inline constexpr int kCheckpointVersion = 1;

// Identifies the action space a policy was trained for.
struct Fingerprint {
  std::string problem;
  int destroy_ops = 0;
  int repair_ops = 0;
  bool operator==(const Fingerprint&) const = default;
};

struct Checkpoint {
  Fingerprint fingerprint;
  PolicyNetwork network;
  Adam optimizer;
  long long steps_done = 0;
  long long episodes_done = 0;
  std::uint64_t seed = 0;
};

// Raised when a checkpoint does not fit the requested action space.
class FingerprintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);

Checkpoint load_checkpoint(const std::filesystem::path& path);

// Mismatched head sizes are always an error. A different problem with the same
// head sizes is accepted only when `allow_transfer` is set.
void check_fingerprint(const Checkpoint& ckpt, const Fingerprint& expected, bool allow_transfer);

}  // namespace dralns::policy
