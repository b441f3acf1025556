#pragma once

#include <vector>

namespace dralns::opswtw {

// Ordered customer visits; the depot is implicit at both ends.
struct Tour {
  std::vector<int> sequence;

  std::size_t size() const { return sequence.size(); }
  bool empty() const { return sequence.empty(); }

  friend bool operator==(const Tour&, const Tour&) = default;
};

}  // namespace dralns::opswtw
