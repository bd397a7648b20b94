#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "alphaidx/graph.hpp"

namespace alphaidx {

inline constexpr int kDefaultEnumerationLimit = 7;
inline constexpr int kOverrideEnumerationLimit = 8;
inline constexpr int kMaxTreeOrder = 9;

struct EnumerationOptions {
  bool dedup = false;
  bool allow_order8 = false;
  /// Number of mask-range shards processed concurrently (>= 1).
  int workers = 1;
};

/// Number of vertex pairs, i.e. mask width, for order n.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose edge set is the upper-triangle mask (bit j(j-1)/2+i is {i,j}).
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

/// Calls `visit` on every connected labeled graph of order n in ascending mask
/// order, restricted to masks in [begin, end).
void for_each_connected(int n, std::uint64_t begin, std::uint64_t end,
                        const std::function<void(const Graph&, std::uint64_t)>& visit);

/// Every connected labeled graph of order n (ascending mask), or with
/// `dedup` one representative per isomorphism class: the class member with
/// the smallest mask. Representatives are returned in ascending mask order,
/// independent of `workers`.
std::vector<Graph> enumerate_connected(int n, const EnumerationOptions& options = {});

/// Labeled trees decoded from Prüfer sequences in lexicographic order; with
/// `dedup`, the first tree seen in each class. 2 <= n <= 9.
std::vector<Graph> enumerate_trees(int n, bool dedup = true);

/// Labeled tree from a Prüfer sequence of length n-2 over [0, n).
Graph tree_from_pruefer(int n, const std::vector<int>& sequence);

struct RootedTree {
  std::vector<int> parent;  // parent[root] == -1
  int root = 0;
};

/// One representative per isomorphism class of rooted trees of order m.
std::vector<RootedTree> enumerate_rooted_trees(int m);

}  // namespace alphaidx
