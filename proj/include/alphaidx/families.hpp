#pragma once

#include <vector>

#include "alphaidx/graph.hpp"

namespace alphaidx {

// Path conventions. "Attaching P_t to u" adds t-1 new vertices and counts u
// as the first vertex of the path; new vertices are numbered consecutively
// from the root outwards. make_path_kite is the exception: it joins a
// disjoint P_p by one new edge, adding p vertices.

Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int n);

/// K_n with edge {0,1} removed; 0 and 1 are the nonadjacent pair.
Graph make_complete_minus_edge(int n);

struct BugGraph {
  Graph graph;
  PendentPathSpec first;   // q vertices, rooted at clique vertex 0
  PendentPathSpec second;  // r vertices, rooted at clique vertex 1
};

/// B_{p,q,r}: K_p - e with P_q and P_r attached to the two ends of the
/// deleted edge. Order p + q + r - 2.
BugGraph make_bug(int p, int q, int r);

/// PK_{p,q}: clique on vertices 0..q-1, path on q..q+p-1, joined by {0,q}.
Graph make_path_kite(int p, int q);

/// G_{p,q}(u).
Graph attach_paths_same_root(const Graph& g, int u, int p, int q);

/// G_{p,q}(u,v).
Graph attach_paths_two_roots(const Graph& g, int u, int v, int p, int q);

/// Path spec of the t-vertex path attached at `root` whose first new vertex
/// is `first_new` (consecutive numbering).
PendentPathSpec attached_path_spec(int root, int first_new, int t);

/// Identifies the root of the tree (parent[root] == -1) with u. Tree vertex i
/// (i != root) becomes vertex order(g) + (rank of i among non-root vertices).
Graph attach_tree(const Graph& g, int u, const std::vector<int>& parent);

/// Throws std::invalid_argument naming the offending vertex when the move's
/// preconditions fail in g.
Graph rotate_edges(const Graph& g, const RotationMove& move);

}  // namespace alphaidx
