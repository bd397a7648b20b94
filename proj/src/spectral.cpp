#include "alphaidx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "alphaidx/errors.hpp"
#include "alphaidx/metrics.hpp"

namespace alphaidx {
namespace {

void require_alpha(double alpha, bool allow_one) {
  if (!(alpha >= 0.0) || alpha > 1.0 || (!allow_one && alpha == 1.0)) {
    throw std::invalid_argument("alpha = " + std::to_string(alpha) + " outside " + (allow_one ? "[0, 1]" : "[0, 1)"));
  }
}

void require_perron_input(const Graph& g, double alpha) {
  require_alpha(alpha, false);
  if (g.order() < 1) throw std::invalid_argument("perron: empty graph");
  if (!is_connected(g)) throw std::domain_error("perron: graph is disconnected");
}

// y = A_alpha x, using the bitset rows (no cancellation: all terms >= 0).
void apply(const Graph& g, double alpha, const std::vector<double>& x, std::vector<double>& y) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Row r = g.neighbors(i); r; r &= r - 1) sum += x[std::countr_zero(r)];
    y[i] = alpha * g.degree(i) * x[i] + (1.0 - alpha) * sum;
  }
}

double residual_inf(const Graph& g, double alpha, double rho, const std::vector<double>& x) {
  std::vector<double> y(x.size());
  apply(g, alpha, x, y);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(y[i] - rho * x[i]));
  return worst;
}

}  // namespace

AlphaMatrix::AlphaMatrix(int n, double alpha, std::vector<double> entries)
    : n_(n), alpha_(alpha), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("AlphaMatrix: entry count mismatch");
}

AlphaMatrix assemble_alpha(const Graph& g, double alpha) {
  require_alpha(alpha, true);
  const int n = g.order();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i) * n + i] = alpha * g.degree(i);
    for (Row r = g.neighbors(i); r; r &= r - 1) m[static_cast<std::size_t>(i) * n + std::countr_zero(r)] = 1.0 - alpha;
  }
  return AlphaMatrix(n, alpha, std::move(m));
}

double quadratic_form(const AlphaMatrix& m, std::span<const double> x) {
  const int n = m.dimension();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("quadratic_form: dimension mismatch");
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) total += m(i, j) * x[i] * x[j];
  return total;
}

Eigensystem jacobi_eigensystem(const AlphaMatrix& m, double tolerance, int max_sweeps) {
  const int n = m.dimension();
  std::vector<double> a(m.entries().begin(), m.entries().end());
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto at = [n](std::vector<double>& mat, int i, int j) -> double& { return mat[static_cast<std::size_t>(i) * n + j]; };

  double scale = 0.0;
  for (double e : a) scale += e * e;
  scale = std::sqrt(scale);
  bool converged = n <= 1 || scale == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(a, i, j) * at(a, i, j);
    if (std::sqrt(2.0 * off) <= tolerance * scale) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(a, p, q);
        if (apq == 0.0) continue;
        double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(a, k, p), akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(a, p, k), aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = at(v, k, p), vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) throw ConvergenceError("Jacobi eigensolver did not converge");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return at(a, x, x) < at(a, y, y); });
  Eigensystem out{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n) * n)};
  for (int k = 0; k < n; ++k) {
    out.values[k] = at(a, order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vectors[static_cast<std::size_t>(i) * n + k] = at(v, i, order[k]);
  }
  return out;
}

SpectralResult perron_oracle(const Graph& g, double alpha) {
  require_perron_input(g, alpha);
  const int n = g.order();
  auto system = jacobi_eigensystem(assemble_alpha(g, alpha));
  SpectralResult out;
  out.rho = system.values.back();
  out.perron.resize(static_cast<std::size_t>(n));
  double sum = 0.0, norm = 0.0;
  for (int i = 0; i < n; ++i) {
    out.perron[i] = system.vectors[static_cast<std::size_t>(i) * n + (n - 1)];
    sum += out.perron[i];
    norm += out.perron[i] * out.perron[i];
  }
  norm = std::copysign(std::sqrt(norm), sum);
  for (auto& e : out.perron) e /= norm;
  out.residual = residual_inf(g, alpha, out.rho, out.perron);
  return out;
}

SpectralResult perron(const Graph& g, double alpha, const PerronOptions& options) {
  require_perron_input(g, alpha);
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("perron: tolerance must be positive");
  const int n = g.order();
  const double shift = g.max_degree() + 1.0;
  // Each (A x)_i sums at most Delta + 1 nonnegative terms, so the
  // componentwise residual cannot be resolved much below this.
  const double rounding_floor = 2.0 * (g.max_degree() + 2.0) * std::numeric_limits<double>::epsilon();
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(x.size());
  for (long it = 1; it <= options.max_iterations; ++it) {
    apply(g, alpha, x, y);
    double rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double abs_res = 0.0, rel_res = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = std::abs(y[i] - rho * x[i]);
      abs_res = std::max(abs_res, r);
      rel_res = std::max(rel_res, r / x[i]);
    }
    const double rel_target = std::max(options.relative_tolerance, rounding_floor * std::max(1.0, rho));
    if (abs_res <= options.tolerance && (options.relative_tolerance <= 0.0 || rel_res <= rel_target)) {
      return SpectralResult{rho, x, abs_res, it, false};
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] += shift * x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  if (!options.allow_fallback) throw ConvergenceError("perron: power iteration did not converge");
  auto out = perron_oracle(g, alpha);
  out.iterations = options.max_iterations;
  out.used_fallback = true;
  return out;
}

double alpha_index(const Graph& g, double alpha) { return perron(g, alpha).rho; }

Gamma gamma_of(double rho, double alpha) {
  require_alpha(alpha, false);
  if (rho < 2.0 - 1e-12) throw HypothesisError("gamma requires rho >= 2, got " + std::to_string(rho));
  double t = (rho - 2.0 * alpha) / (1.0 - alpha);
  double disc = std::max(0.0, t * t - 4.0);
  return Gamma{std::max(1.0, 0.5 * (t + std::sqrt(disc))), rho, alpha};
}

double rho_complete_minus_edge(int k, double alpha) {
  if (k < 4) throw std::invalid_argument("rho_complete_minus_edge requires k >= 4");
  require_alpha(alpha, false);
  const double b = 1.0 - alpha;
  return 0.5 * (k - 3 + k * alpha + std::sqrt(double(k) * k * b * b + 2.0 * (k - 4) * b + 1.0));
}

}  // namespace alphaidx
