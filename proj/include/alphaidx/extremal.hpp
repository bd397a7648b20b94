#pragma once

#include <vector>

#include "alphaidx/graph.hpp"
#include "alphaidx/report.hpp"

namespace alphaidx {

struct VerifyOptions {
  double eps = kEpsilonStrict;
  bool allow_order8 = false;
  int workers = 1;
  /// Precomputed isomorphism-class representatives of the connected graphs
  /// of the requested order; enumerated on demand when null.
  const std::vector<Graph>* classes = nullptr;
};

/// rho(H) > rho(G) for H = rotate_edges(G, move), provided the Perron entry at
/// v is at least the one at u (else verdict inapplicable).
InequalityReport verify_rotation(const Graph& g, const RotationMove& move, double alpha,
                                 double eps = kEpsilonStrict);

struct BalanceScan {
  /// rho(B_{k,p,q}) < rho(B_{k,p-1,q+1}) for each q with p = s - q >= q + 2.
  std::vector<InequalityReport> steps;
  /// rho(B_{k,s-q,q}) <= rho(B_{k,ceil(s/2),floor(s/2)}) for every split.
  std::vector<InequalityReport> balanced_max;
};

BalanceScan scan_bug_balance(int k, int s, double alpha, double eps = kEpsilonStrict);

/// Max alpha-index over connected graphs of order n and diameter >= k is
/// attained exactly by B_{n-k+2, floor(k/2), ceil(k/2)} (K_n when k = 1).
VerificationReport verify_diameter_theorem(int n, int k, double alpha, const VerifyOptions& options = {});

/// Min alpha-index over connected graphs of order n and clique number exactly
/// omega is attained exactly by PK_{n-omega, omega} (K_n when omega = n).
VerificationReport verify_clique_theorem(int n, int omega, double alpha, const VerifyOptions& options = {});

/// rho(G_{p,q}(u)) >= rho(G_{p+q-1,1}(u)), strict for q >= 2. Requires
/// rho(G) >= 2.
InequalityReport verify_flatten_same_root(const Graph& g, int u, int p, int q, double alpha,
                                          double eps = kEpsilonStrict);

/// Over all rooted trees T of order m: rho(G_T(u)) >= rho(G_{m,1}(u)), with
/// equality only for the path rooted at an end.
VerificationReport verify_tree_flatten(const Graph& g, int u, int m, double alpha,
                                       double eps = kEpsilonStrict);

/// P_n is the unique minimiser of rho_alpha among connected graphs of order n.
VerificationReport verify_path_minimum(int n, double alpha, const VerifyOptions& options = {});

}  // namespace alphaidx
