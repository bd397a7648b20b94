#include "alphaidx/random.hpp"

#include <stdexcept>

namespace alphaidx {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Graph random_connected_graph(Rng& rng, int n, double edge_probability) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("random_connected_graph: order out of range");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
  Graph g = Graph::from_edges(n, edges);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j) && rng.unit() < edge_probability) g = g.with_edge(i, j);
    }
  }
  return g;
}

}  // namespace alphaidx
