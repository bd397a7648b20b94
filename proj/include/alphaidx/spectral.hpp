#pragma once

#include <span>
#include <vector>

#include "alphaidx/graph.hpp"

namespace alphaidx {

/// Dense A_alpha(G) = alpha D(G) + (1 - alpha) A(G), row-major.
class AlphaMatrix {
 public:
  AlphaMatrix(int n, double alpha, std::vector<double> entries);

  int dimension() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }
  double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  int n_;
  double alpha_;
  std::vector<double> entries_;
};

/// Throws std::invalid_argument unless 0 <= alpha <= 1.
AlphaMatrix assemble_alpha(const Graph& g, double alpha);

/// <Mx, x> = sum_ij m_ij x_i x_j.
double quadratic_form(const AlphaMatrix& m, std::span<const double> x);

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron;  // positive, unit 2-norm
  double residual = 0.0;       // ||A x - rho x||_inf
  long iterations = 0;
  bool used_fallback = false;  // power iteration gave up, Jacobi result returned
};

struct PerronOptions {
  double tolerance = 1e-12;
  /// Also require max_i |(A x)_i - rho x_i| / x_i below this (or below the
  /// rounding floor of about (Delta + 2) rho eps_machine, if larger), so
  /// entries deep in pendent paths carry relative accuracy. Non-positive
  /// disables it.
  double relative_tolerance = 1e-14;
  long max_iterations = 1'000'000;
  bool allow_fallback = true;
};

/// Shifted power iteration on A_alpha + (Delta + 1) I. Requires a connected
/// graph and 0 <= alpha < 1.
SpectralResult perron(const Graph& g, double alpha, const PerronOptions& options = {});

/// Largest eigenpair from a full cyclic Jacobi decomposition; eigenvector
/// sign-normalised to be positive.
SpectralResult perron_oracle(const Graph& g, double alpha);

/// All eigenvalues (ascending) and eigenvectors (columns of a row-major n*n
/// array) of a symmetric matrix, by cyclic Jacobi rotations.
struct Eigensystem {
  std::vector<double> values;
  std::vector<double> vectors;
};
Eigensystem jacobi_eigensystem(const AlphaMatrix& m, double tolerance = 1e-15, int max_sweeps = 100);

/// Convenience: perron(g, alpha).rho.
double alpha_index(const Graph& g, double alpha);

/// gamma >= 1, the larger root of X^2 - t X + 1 = 0 with t = (rho-2a)/(1-a).
struct Gamma {
  double value;
  double rho;
  double alpha;

  double inverse() const { return 1.0 / value; }
  double trace() const { return (rho - 2.0 * alpha) / (1.0 - alpha); }
};

/// Throws HypothesisError when rho < 2, std::invalid_argument for alpha
/// outside [0,1).
Gamma gamma_of(double rho, double alpha);

/// Closed form of rho_alpha(K_k - e), the larger root of
/// X^2 - (k-3+k a) X + (k-2)((k+1) a - 2) = 0. Requires k >= 4.
double rho_complete_minus_edge(int k, double alpha);

}  // namespace alphaidx
