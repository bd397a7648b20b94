#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphaidx/graph.hpp"

namespace alphaidx {

inline constexpr int kMaxIsomorphismOrder = 10;
inline constexpr int kMaxCanonicalOrder = 11;

/// Exact test by backtracking over vertex maps restricted to equal
/// colour-refinement classes. Both orders must be <= 10.
bool is_isomorphic(const Graph& g, const Graph& h);

/// Stable colour refinement (1-WL) started from the degrees. Colours are
/// canonical: isomorphic graphs get the same colour multiset, and colour ids
/// are ordered by their refinement signature, independent of labels.
std::vector<int> refine_colors(const Graph& g, std::vector<int> initial);

/// Canonical upper-triangle code (graph6 bit order, bit j(j-1)/2+i for
/// i<j): the minimum over all colour-respecting relabelings. Equal codes
/// with equal order iff isomorphic. Order must be <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Canonical string of a tree (AHU encoding rooted at its center(s)).
std::string tree_canonical_form(const Graph& tree);

/// Canonical string of a tree rooted at `root`.
std::string rooted_tree_canonical_form(const Graph& tree, int root);

}  // namespace alphaidx
