#include "alphaidx/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "alphaidx/metrics.hpp"

namespace alphaidx {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 32]");
  }
}

int Graph::check(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  }
  return v;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check(u);
    g.check(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u] |= Row{1} << v;
    g.adj_[v] |= Row{1} << u;
  }
  return g;
}

int Graph::edge_count() const noexcept {
  int total = 0;
  for (int i = 0; i < n_; ++i) total += std::popcount(adj_[i]);
  return total / 2;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int i = 0; i < n_; ++i) best = std::max(best, std::popcount(adj_[i]));
  return best;
}

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = kMaxOrder;
  for (int i = 0; i < n_; ++i) best = std::min(best, std::popcount(adj_[i]));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((adj_[i] >> j) & 1u) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[i] = std::popcount(adj_[i]);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= Row{1} << v;
  g.adj_[v] |= Row{1} << u;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check(u);
  check(v);
  Graph g = *this;
  g.adj_[u] &= ~(Row{1} << v);
  g.adj_[v] &= ~(Row{1} << u);
  return g;
}

Graph Graph::with_vertices(int extra) const {
  if (extra < 0) throw std::invalid_argument("negative vertex count");
  Graph g(n_ + extra);
  g.adj_ = adj_;
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < n_; ++i) {
    check(perm[i]);
    if (inverse[perm[i]] != -1) throw std::invalid_argument("not a permutation");
    inverse[perm[i]] = i;
  }
  Graph g(n_);
  for (int i = 0; i < n_; ++i) {
    Row row = adj_[perm[i]];
    Row mapped = 0;
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      mapped |= Row{1} << inverse[w];
    }
    g.adj_[i] = mapped;
  }
  return g;
}

void validate_pendent_path(const Graph& g, const PendentPathSpec& path) {
  const auto& vs = path.vertices;
  if (vs.empty()) throw std::invalid_argument("pendent path has no vertices");
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("pendent path vertex " + std::to_string(v) + " out of range");
  }
  Row seen = 0;
  for (int v : vs) {
    if ((seen >> v) & 1u) throw std::invalid_argument("pendent path repeats vertex " + std::to_string(v));
    seen |= Row{1} << v;
  }
  if (vs.size() == 1) return;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) {
      throw std::invalid_argument("pendent path vertices " + std::to_string(vs[i]) + " and " +
                                  std::to_string(vs[i + 1]) + " are not adjacent");
    }
  }
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    if (g.degree(vs[i]) != 2) throw std::invalid_argument("inner path vertex " + std::to_string(vs[i]) + " has degree != 2");
  }
  if (g.degree(vs.back()) != 1) throw std::invalid_argument("path end " + std::to_string(vs.back()) + " is not a leaf");
  if (!is_cut_vertex(g, vs.front())) throw std::invalid_argument("path root " + std::to_string(vs.front()) + " is not a cut vertex");
}

}  // namespace alphaidx
