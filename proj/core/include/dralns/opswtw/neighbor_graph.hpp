#pragma once

#include <optional>
#include <vector>

#include "dralns/opswtw/tour.hpp"

namespace dralns::opswtw {

// Complete directed graph over all nodes (depot included). Each edge stores
// the best total objective among evaluated tours that traverse it.
class NeighborGraph {
 public:
  explicit NeighborGraph(std::size_t n = 0);

  std::size_t size() const { return n_; }
  bool known(std::size_t from, std::size_t to) const;
  std::optional<double> weight(std::size_t from, std::size_t to) const;

  // Mean over known edges, 0 when nothing is known yet.
  double mean_known() const;

  // Raises every traversed edge (depot legs included) to `total` when that is
  // an improvement or the edge is still unknown.
  void update(const Tour& tour, double total);
  void set(std::size_t from, std::size_t to, double value);
  void clear();

 private:
  void offer(std::size_t from, std::size_t to, double value);

  std::size_t n_;
  std::vector<double> weights_;
  std::vector<bool> known_;
  double known_sum_ = 0.0;
  std::size_t known_count_ = 0;
};

}  // namespace dralns::opswtw
