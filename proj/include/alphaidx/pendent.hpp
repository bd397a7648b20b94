#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphaidx/graph.hpp"
#include "alphaidx/report.hpp"
#include "alphaidx/spectral.hpp"

namespace alphaidx {

/// Closed form x_i = A gamma^{r+2-i} + B gamma^{i-r-2} of the Perron entries
/// along a pendent path (u_1, ..., u_{r+1}), seeded by x_{r+1}.
struct PathEntryModel {
  Gamma gamma;
  double coeff_a;
  double coeff_b;
  double tail_entry;  // x_{r+1}
  int length;         // r + 1 vertices

  /// Model value at 1-based index i.
  double entry(int i) const;
  /// max of |A + B + a/(1-a) x_{r+1}| and |A gamma + B/gamma - x_{r+1}|.
  double system_residual() const;
};

PathEntryModel make_path_entry_model(const Gamma& gamma, double tail_entry, int length);

struct ClosedFormFit {
  PathEntryModel model;
  std::vector<double> relative_residuals;  // index i-1 for i = 1..r+1
  double max_relative_residual = 0.0;
};

// The checkers below compute the Perron vector of g themselves. Inequalities
// are reported in scale-free form (both sides divided by the same positive
// quantity), so margins compare against eps_strict meaningfully even where
// entries are tiny.

/// x_i / x_{i+1} > gamma for i = 1..r, then x_i / x_{i+1} > 1 (strict
/// monotone decrease). Throws HypothesisError if rho < 2 - 1e-12.
std::vector<InequalityReport> check_decay(const Graph& g, const PendentPathSpec& path, double alpha,
                                          double eps = kEpsilonStrict);
std::vector<InequalityReport> check_decay(const SpectralResult& s, const PendentPathSpec& path,
                                          double alpha, double eps = kEpsilonStrict);

/// Throws HypothesisError if rho <= 2 + 1e-9.
ClosedFormFit closed_form_entries(const Graph& g, const PendentPathSpec& path, double alpha);
ClosedFormFit closed_form_entries(const SpectralResult& s, const PendentPathSpec& path, double alpha);

/// (x_i / x_1) gamma^{i-1} > 1 - gamma^{-2} for i = 1..r and
/// (x_{r+1} / x_1) gamma^r > (gamma^2-1)(1-a) / (gamma((1-a)gamma + a)).
std::vector<InequalityReport> check_lower_bounds(const Graph& g, const PendentPathSpec& path,
                                                 double alpha, double eps = kEpsilonStrict);
std::vector<InequalityReport> check_lower_bounds(const SpectralResult& s, const PendentPathSpec& path,
                                                 double alpha, double eps = kEpsilonStrict);

/// (y_q x_1) / (x_{p-1} y_1) >= 3/2 for paths P (p vertices) and Q (q
/// vertices, possibly the bare root). Throws HypothesisError unless
/// rho >= 5/2 and p >= q + 2.
InequalityReport check_ratio_lemma(const Graph& g, const PendentPathSpec& path_p,
                                   const PendentPathSpec& path_q, double alpha,
                                   double eps = kEpsilonStrict);
InequalityReport check_ratio_lemma(const SpectralResult& s, const PendentPathSpec& path_p,
                                   const PendentPathSpec& path_q, double alpha,
                                   double eps = kEpsilonStrict);

/// gamma >= (2 rho - 1 - 3a) / (2 - 2a). Throws HypothesisError if rho < 5/2.
InequalityReport gamma_lower_bound(double rho, double alpha, double eps = kEpsilonStrict);

struct PendentInstance {
  std::string label;
  Graph graph;
  std::vector<PendentPathSpec> paths;  // each with at least one edge
  /// (P, Q) index pairs for the ratio lemma; Q may be a bare root.
  std::vector<std::pair<PendentPathSpec, PendentPathSpec>> ratio_pairs;
};

/// Every B_{p,q,r} with 3 <= p <= 7, 1 <= q,r <= 5, followed by
/// `random_count` seeded random connected graphs (order 3..7) with one
/// attached path of 1..8 new vertices.
std::vector<PendentInstance> default_pendent_corpus(std::uint64_t seed = 20170601, int random_count = 200);

struct PendentSuiteResult {
  VerificationReport decay;
  VerificationReport closed_form;
  VerificationReport lower_bounds;
  VerificationReport ratio_lemma;
  std::int64_t decay_instances = 0;        // (instance, path, alpha) with rho >= 2
  std::int64_t closed_form_instances = 0;  // with rho > 2.01
  std::int64_t ratio_instances = 0;
  double max_closed_form_residual = 0.0;
  double max_system_residual = 0.0;
  bool model_invariants_hold = true;
};

PendentSuiteResult run_pendent_suite(const std::vector<PendentInstance>& corpus,
                                     const std::vector<double>& alphas, double eps = kEpsilonStrict);

/// gamma_lower_bound over rho in {2.5, 2.6, ..., 6.0} and alpha in
/// {0, 0.1, ..., 0.9}.
std::vector<InequalityReport> gamma_bound_grid(double eps = kEpsilonStrict);

}  // namespace alphaidx
