#pragma once

#include <cstdint>
#include <random>

#include "alphaidx/graph.hpp"

namespace alphaidx {

/// Platform-independent draws on top of std::mt19937_64 (whose output
/// sequence is fixed by the standard, unlike the std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Random recursive spanning tree plus each remaining pair with probability
/// `edge_probability`; always connected.
Graph random_connected_graph(Rng& rng, int n, double edge_probability);

}  // namespace alphaidx
