#include "dralns/opswtw/neighbor_graph.hpp"

#include "dralns/opswtw/instance.hpp"

namespace dralns::opswtw {

NeighborGraph::NeighborGraph(std::size_t n) : n_(n), weights_(n * n, 0.0), known_(n * n, false) {}

bool NeighborGraph::known(std::size_t from, std::size_t to) const {
  return known_[from * n_ + to];
}

std::optional<double> NeighborGraph::weight(std::size_t from, std::size_t to) const {
  if (!known(from, to)) {
    return std::nullopt;
  }
  return weights_[from * n_ + to];
}

double NeighborGraph::mean_known() const {
  return known_count_ == 0 ? 0.0 : known_sum_ / static_cast<double>(known_count_);
}

void NeighborGraph::offer(std::size_t from, std::size_t to, double value) {
  const std::size_t e = from * n_ + to;
  if (!known_[e]) {
    known_[e] = true;
    weights_[e] = value;
    known_sum_ += value;
    ++known_count_;
  } else if (value > weights_[e]) {
    known_sum_ += value - weights_[e];
    weights_[e] = value;
  }
}

void NeighborGraph::set(std::size_t from, std::size_t to, double value) {
  const std::size_t e = from * n_ + to;
  if (known_[e]) {
    known_sum_ -= weights_[e];
    --known_count_;
    known_[e] = false;
  }
  offer(from, to, value);
}

void NeighborGraph::update(const Tour& tour, double total) {
  if (tour.empty()) {
    return;
  }
  std::size_t at = kDepot;
  for (const int c : tour.sequence) {
    offer(at, static_cast<std::size_t>(c), total);
    at = static_cast<std::size_t>(c);
  }
  offer(at, kDepot, total);
}

void NeighborGraph::clear() {
  std::fill(weights_.begin(), weights_.end(), 0.0);
  std::fill(known_.begin(), known_.end(), false);
  known_sum_ = 0.0;
  known_count_ = 0;
}

}  // namespace dralns::opswtw
