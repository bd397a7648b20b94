#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alphaidx/graph.hpp"
#include "alphaidx/report.hpp"

namespace alphaidx {

enum class Direction { consistent, reversed, indeterminate };
const char* to_string(Direction d);

inline constexpr double kPartialResultThreshold = 9.0 / 4.0;

struct ScanRecord {
  std::string conjecture;  // "same-root" | "adjacent-roots" | "tree-roots"
  std::string base_graph;  // graph6
  int u = 0;
  int v = -1;  // -1 for single-root scans
  int p = 0;
  int q = 0;
  double alpha = 0.0;
  double lhs = 0.0;  // rho of G_{p,q}
  double rhs = 0.0;  // rho of G_{p-1,q+1}
  Direction direction = Direction::consistent;
  bool resolved_by_oracle = false;
  bool oracle_confirmed = false;  // reversed records: reproduced by Jacobi
  /// same-root scans only: lhs >= 9/4, where the comparison is known to hold.
  bool in_partial_result_zone = false;
  /// Reversal of an open conjecture at an alpha where it is not proved.
  bool conjecture_counterexample = false;
};

nlohmann::ordered_json to_json(const ScanRecord& r);
std::string scan_csv_header();
std::string to_csv_row(const ScanRecord& r);

struct ScanOptions {
  double eps = kEpsilonStrict;
};

/// G_{p,q}(u) vs G_{p-1,q+1}(u) for p >= q + 2 >= 3, p + q <= max_budget.
std::vector<ScanRecord> scan_conjecture1(const Graph& g, int u, int max_budget,
                                         const std::vector<double>& alphas, const ScanOptions& options = {});

/// G_{p,q}(u,v) vs G_{p-1,q+1}(u,v) for adjacent u, v of degree >= 2.
std::vector<ScanRecord> scan_conjecture2(const Graph& g, int u, int v, int max_budget,
                                         const std::vector<double>& alphas, const ScanOptions& options = {});

/// Trees of order <= max_tree_order, ordered non-adjacent pairs (u,v) of
/// degree >= 2, splits p >= q + 2, q >= 1, p + q <= max_budget.
std::vector<ScanRecord> search_question1_reversal(int max_tree_order, const std::vector<double>& alphas,
                                                  int max_budget = 8, const ScanOptions& options = {});

struct RootedBase {
  Graph graph;
  int u;
  int v;  // -1 for single-root entries
};

/// K_3, K_4, C_5 and K_4 - e with every root (same-root scans) or every adjacent pair
/// of degree >= 2 vertices (adjacent-root scans).
std::vector<RootedBase> standard_conjecture1_corpus();
std::vector<RootedBase> standard_conjecture2_corpus();

}  // namespace alphaidx
