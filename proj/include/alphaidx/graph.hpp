#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace alphaidx {

inline constexpr int kMaxOrder = 32;

using Row = std::uint32_t;
using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 32 vertices. Row i holds the
/// neighbourhood of vertex i as a bitset.
class Graph {
 public:
  /// Empty graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops and std::out_of_range on
  /// endpoints outside [0, n); repeated edges are merged.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return n_; }
  Row neighbors(int v) const { return adj_[check(v)]; }
  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1u; }
  int degree(int v) const { return std::popcount(adj_[check(v)]); }
  int edge_count() const noexcept;
  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool is_regular() const noexcept { return max_degree() == min_degree(); }

  /// Edges (i, j) with i < j, ordered by i then j.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  // Non-mutating edits.
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  Graph with_vertices(int extra) const;

  /// Relabels vertex `perm[i]` of this graph to vertex i of the result.
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int check(int v) const;

  int n_;
  std::array<Row, kMaxOrder> adj_{};
};

/// A pendent path (u_1, ..., u_{r+1}) with root u_1 a cut vertex, inner vertices
/// of degree 2 and u_{r+1} a leaf. A single-vertex spec (just the root) stands
/// for an empty attachment.
struct PendentPathSpec {
  std::vector<int> vertices;

  int root() const { return vertices.front(); }
  /// Number of edges r.
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Throws std::invalid_argument naming the first violated condition.
void validate_pendent_path(const Graph& g, const PendentPathSpec& path);

/// Edge rotation: replace {u,w} by {v,w} for every w in `moved`.
struct RotationMove {
  int u;
  int v;
  std::vector<int> moved;
};

}  // namespace alphaidx
