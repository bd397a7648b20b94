#pragma once

#include <vector>

#include "alphaidx/graph.hpp"

namespace alphaidx {

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_cut_vertex(const Graph& g, int v);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Throws std::domain_error on a disconnected graph.
int diameter(const Graph& g);

int clique_number(const Graph& g);

}  // namespace alphaidx
