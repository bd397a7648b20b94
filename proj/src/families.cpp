#include "alphaidx/families.hpp"

#include <stdexcept>
#include <string>

#include "alphaidx/metrics.hpp"

namespace alphaidx {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_order(int n, int lo, const char* name) {
  require(n >= lo && n <= kMaxOrder,
          std::string(name) + ": order " + std::to_string(n) + " outside [" + std::to_string(lo) + ", 32]");
}

// Appends a path of t-1 new vertices hanging from `root`.
Graph extend_path(const Graph& g, int root, int t) {
  require(t >= 1, "path length must be >= 1");
  require(g.order() + t - 1 <= kMaxOrder, "resulting graph exceeds 32 vertices");
  Graph out = g.with_vertices(t - 1);
  int prev = root;
  for (int i = 0; i < t - 1; ++i) {
    int next = g.order() + i;
    out = out.with_edge(prev, next);
    prev = next;
  }
  return out;
}

}  // namespace

Graph make_complete(int n) {
  require_order(n, 1, "make_complete");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
  require_order(n, 1, "make_path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  require_order(n, 3, "make_cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_star(int n) {
  require_order(n, 1, "make_star");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph make_complete_minus_edge(int n) {
  require_order(n, 2, "make_complete_minus_edge");
  return make_complete(n).without_edge(0, 1);
}

BugGraph make_bug(int p, int q, int r) {
  require(p >= 2 && q >= 1 && r >= 1, "make_bug: need p >= 2, q >= 1, r >= 1");
  require(p + q + r - 2 <= kMaxOrder, "make_bug: order exceeds 32");
  Graph core = make_complete_minus_edge(p);
  Graph g = extend_path(extend_path(core, 0, q), 1, r);
  return BugGraph{g, attached_path_spec(0, p, q), attached_path_spec(1, p + q - 1, r)};
}

Graph make_path_kite(int p, int q) {
  require(p >= 1 && q >= 1, "make_path_kite: need p >= 1, q >= 1");
  require(p + q <= kMaxOrder, "make_path_kite: order exceeds 32");
  Graph g = make_complete(q).with_vertices(p);
  g = g.with_edge(0, q);
  for (int i = q; i + 1 < q + p; ++i) g = g.with_edge(i, i + 1);
  return g;
}

Graph attach_paths_same_root(const Graph& g, int u, int p, int q) {
  require(u >= 0 && u < g.order(), "attach_paths_same_root: invalid vertex " + std::to_string(u));
  require(p >= 1 && q >= 1, "attach_paths_same_root: path lengths must be >= 1");
  return extend_path(extend_path(g, u, p), u, q);
}

Graph attach_paths_two_roots(const Graph& g, int u, int v, int p, int q) {
  require(u >= 0 && u < g.order() && v >= 0 && v < g.order(), "attach_paths_two_roots: invalid vertex");
  require(u != v, "attach_paths_two_roots: roots must differ");
  require(p >= 1 && q >= 1, "attach_paths_two_roots: path lengths must be >= 1");
  return extend_path(extend_path(g, u, p), v, q);
}

PendentPathSpec attached_path_spec(int root, int first_new, int t) {
  PendentPathSpec spec{{root}};
  for (int i = 0; i < t - 1; ++i) spec.vertices.push_back(first_new + i);
  return spec;
}

Graph attach_tree(const Graph& g, int u, const std::vector<int>& parent) {
  require(u >= 0 && u < g.order(), "attach_tree: invalid vertex " + std::to_string(u));
  const int m = static_cast<int>(parent.size());
  require(m >= 1, "attach_tree: empty tree");
  int root = -1;
  for (int i = 0; i < m; ++i) {
    if (parent[i] == -1) {
      require(root == -1, "attach_tree: more than one root");
      root = i;
    } else {
      require(parent[i] >= 0 && parent[i] < m && parent[i] != i, "attach_tree: bad parent entry at " + std::to_string(i));
    }
  }
  require(root != -1, "attach_tree: no root");
  // Every vertex must reach the root without revisiting (no cycles).
  for (int i = 0; i < m; ++i) {
    int steps = 0;
    for (int w = i; w != root; w = parent[w]) {
      require(++steps <= m, "attach_tree: parent array contains a cycle");
    }
  }
  require(g.order() + m - 1 <= kMaxOrder, "attach_tree: order exceeds 32");
  std::vector<int> image(static_cast<std::size_t>(m));
  int next = g.order();
  for (int i = 0; i < m; ++i) image[i] = (i == root) ? u : next++;
  Graph out = g.with_vertices(m - 1);
  for (int i = 0; i < m; ++i) {
    if (i != root) out = out.with_edge(image[i], image[parent[i]]);
  }
  return out;
}

Graph rotate_edges(const Graph& g, const RotationMove& move) {
  const int n = g.order();
  require(move.u >= 0 && move.u < n && move.v >= 0 && move.v < n, "rotate_edges: invalid u or v");
  require(move.u != move.v, "rotate_edges: u and v must differ");
  require(!move.moved.empty(), "rotate_edges: moved set is empty");
  Graph h = g;
  Row seen = 0;
  for (int w : move.moved) {
    require(w >= 0 && w < n, "rotate_edges: invalid vertex " + std::to_string(w));
    require(w != move.u && w != move.v, "rotate_edges: moved vertex " + std::to_string(w) + " equals u or v");
    require(!((seen >> w) & 1u), "rotate_edges: moved vertex " + std::to_string(w) + " repeated");
    seen |= Row{1} << w;
    require(g.adjacent(move.u, w), "rotate_edges: vertex " + std::to_string(w) + " is not adjacent to u");
    require(!g.adjacent(move.v, w), "rotate_edges: vertex " + std::to_string(w) + " is already adjacent to v");
    h = h.without_edge(move.u, w).with_edge(move.v, w);
  }
  return h;
}

}  // namespace alphaidx
