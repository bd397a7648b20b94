#include "alphaidx/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace alphaidx {
namespace {

// Vertices reachable from `source` within the vertex set `allowed`.
Row reach(const Graph& g, int source, Row allowed) {
  Row seen = Row{1} << source;
  Row frontier = seen;
  while (frontier) {
    Row next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Row all_vertices(int n) { return n == 32 ? ~Row{0} : (Row{1} << n) - 1; }

void max_clique(const Graph& g, Row candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    max_clique(g, candidates & g.neighbors(v), size + 1, best);
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g, 0, all_vertices(g.order())) == all_vertices(g.order());
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g); }

bool is_cut_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
  if (g.degree(v) < 2) return false;
  Row rest = reach(g, v, all_vertices(n)) & ~(Row{1} << v);
  int w = std::countr_zero(g.neighbors(v));
  return reach(g, w, rest) != rest;
}

std::vector<int> distances_from(const Graph& g, int source) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist.at(source) = 0;
  Row seen = Row{1} << source;
  Row frontier = seen;
  int level = 0;
  while (frontier) {
    ++level;
    Row next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
    for (Row t = next; t; t &= t - 1) dist[std::countr_zero(t)] = level;
  }
  return dist;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("diameter of a disconnected graph");
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto d = distances_from(g, v);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = 0;
  max_clique(g, all_vertices(g.order()), 0, best);
  return best;
}

}  // namespace alphaidx
