#include "alphaidx/pendent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "alphaidx/errors.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/io.hpp"
#include "alphaidx/random.hpp"

namespace alphaidx {
namespace {

constexpr double kDecayFloor = 2.0 - 1e-12;
constexpr double kClosedFormFloor = 2.0 + 1e-9;
constexpr double kRatioFloor = 2.5 - 1e-12;
constexpr double kSuiteClosedFormFloor = 2.01;
constexpr double kClosedFormResidualBound = 1e-8;
constexpr double kSystemResidualBound = 1e-12;

double entry(const SpectralResult& s, const PendentPathSpec& path, int i) {
  int v = path.vertices.at(static_cast<std::size_t>(i - 1));
  if (v < 0 || v >= static_cast<int>(s.perron.size())) throw std::invalid_argument("path vertex outside Perron vector");
  return s.perron[v];
}

void require_edge(const PendentPathSpec& path) {
  if (path.length() < 1) throw std::invalid_argument("pendent path has no edges");
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

double PathEntryModel::entry(int i) const {
  const int r = length - 1;
  return coeff_a * std::pow(gamma.value, r + 2 - i) + coeff_b * std::pow(gamma.value, i - r - 2);
}

double PathEntryModel::system_residual() const {
  const double a = gamma.alpha;
  double first = coeff_a + coeff_b + a / (1.0 - a) * tail_entry;
  double second = coeff_a * gamma.value + coeff_b / gamma.value - tail_entry;
  return std::max(std::abs(first), std::abs(second));
}

PathEntryModel make_path_entry_model(const Gamma& gamma, double tail_entry, int length) {
  const double g = gamma.value, a = gamma.alpha;
  const double denom = (g * g - 1.0) * (1.0 - a);
  if (!(denom > 0.0)) throw HypothesisError("closed form needs gamma > 1");
  return PathEntryModel{gamma, (g - a * (g - 1.0)) / denom * tail_entry,
                        -g * (a * (g - 1.0) + 1.0) / denom * tail_entry, tail_entry, length};
}

std::vector<InequalityReport> check_decay(const SpectralResult& s, const PendentPathSpec& path, double alpha,
                                          double eps) {
  require_edge(path);
  if (s.rho < kDecayFloor) throw HypothesisError("decay needs rho >= 2, got " + fmt(s.rho));
  const Gamma gamma = gamma_of(s.rho, alpha);
  const int r = path.length();
  std::vector<InequalityReport> out;
  for (int i = 1; i <= r; ++i) {
    double ratio = entry(s, path, i) / entry(s, path, i + 1);
    out.push_back(compare("decay x_i/x_{i+1} > gamma", ratio, Relation::greater, gamma.value, eps,
                          {{"i", i}, {"rho", s.rho}, {"gamma", gamma.value}, {"alpha", alpha}}));
  }
  for (int i = 1; i <= r; ++i) {
    double ratio = entry(s, path, i) / entry(s, path, i + 1);
    out.push_back(compare("monotone x_i/x_{i+1} > 1", ratio, Relation::greater, 1.0, eps,
                          {{"i", i}, {"rho", s.rho}, {"alpha", alpha}}));
  }
  return out;
}

std::vector<InequalityReport> check_decay(const Graph& g, const PendentPathSpec& path, double alpha, double eps) {
  validate_pendent_path(g, path);
  require_edge(path);
  return check_decay(perron(g, alpha), path, alpha, eps);
}

ClosedFormFit closed_form_entries(const SpectralResult& s, const PendentPathSpec& path, double alpha) {
  require_edge(path);
  if (s.rho <= kClosedFormFloor) throw HypothesisError("closed form needs rho > 2 + 1e-9, got " + fmt(s.rho));
  const int len = static_cast<int>(path.vertices.size());
  ClosedFormFit fit{make_path_entry_model(gamma_of(s.rho, alpha), entry(s, path, len), len), {}, 0.0};
  for (int i = 1; i <= len; ++i) {
    double x = entry(s, path, i);
    double res = std::abs(x - fit.model.entry(i)) / x;
    fit.relative_residuals.push_back(res);
    fit.max_relative_residual = std::max(fit.max_relative_residual, res);
  }
  return fit;
}

ClosedFormFit closed_form_entries(const Graph& g, const PendentPathSpec& path, double alpha) {
  validate_pendent_path(g, path);
  return closed_form_entries(perron(g, alpha), path, alpha);
}

std::vector<InequalityReport> check_lower_bounds(const SpectralResult& s, const PendentPathSpec& path, double alpha,
                                                 double eps) {
  require_edge(path);
  if (s.rho <= kClosedFormFloor) throw HypothesisError("lower bounds need rho > 2 + 1e-9, got " + fmt(s.rho));
  const Gamma gamma = gamma_of(s.rho, alpha);
  const double g = gamma.value;
  const int r = path.length();
  const double x1 = entry(s, path, 1);
  std::vector<InequalityReport> out;
  for (int i = 1; i <= r; ++i) {
    double lhs = entry(s, path, i) / x1 * std::pow(g, i - 1);
    out.push_back(compare("(x_i/x_1) gamma^{i-1} > 1 - gamma^{-2}", lhs, Relation::greater, 1.0 - 1.0 / (g * g), eps,
                          {{"i", i}, {"rho", s.rho}, {"gamma", g}, {"alpha", alpha}}));
  }
  double lhs = entry(s, path, r + 1) / x1 * std::pow(g, r);
  double rhs = (g * g - 1.0) * (1.0 - alpha) / (g * ((1.0 - alpha) * g + alpha));
  out.push_back(compare("(x_{r+1}/x_1) gamma^r > (gamma^2-1)(1-a)/(gamma((1-a)gamma+a))", lhs, Relation::greater, rhs,
                        eps, {{"r", r}, {"rho", s.rho}, {"gamma", g}, {"alpha", alpha}}));
  return out;
}

std::vector<InequalityReport> check_lower_bounds(const Graph& g, const PendentPathSpec& path, double alpha,
                                                 double eps) {
  validate_pendent_path(g, path);
  return check_lower_bounds(perron(g, alpha), path, alpha, eps);
}

InequalityReport check_ratio_lemma(const SpectralResult& s, const PendentPathSpec& path_p,
                                   const PendentPathSpec& path_q, double alpha, double eps) {
  const int p = static_cast<int>(path_p.vertices.size());
  const int q = static_cast<int>(path_q.vertices.size());
  if (p < q + 2) throw HypothesisError("ratio lemma needs p >= q + 2, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  if (s.rho < kRatioFloor) throw HypothesisError("ratio lemma needs rho >= 5/2, got " + fmt(s.rho));
  const double x1 = entry(s, path_p, 1), xp1 = entry(s, path_p, p - 1);
  const double y1 = entry(s, path_q, 1), yq = entry(s, path_q, q);
  auto r = compare("(y_q x_1)/(x_{p-1} y_1) >= 3/2", (yq * x1) / (xp1 * y1), Relation::greater_equal, 1.5, eps,
                   {{"p", p}, {"q", q}, {"rho", s.rho}, {"alpha", alpha}});
  return r;
}

InequalityReport check_ratio_lemma(const Graph& g, const PendentPathSpec& path_p, const PendentPathSpec& path_q,
                                   double alpha, double eps) {
  validate_pendent_path(g, path_p);
  if (path_q.vertices.size() > 1) validate_pendent_path(g, path_q);
  if (path_q.vertices.empty()) throw std::invalid_argument("path Q has no vertices");
  const int p = static_cast<int>(path_p.vertices.size());
  const int q = static_cast<int>(path_q.vertices.size());
  if (p < q + 2) throw HypothesisError("ratio lemma needs p >= q + 2, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  return check_ratio_lemma(perron(g, alpha), path_p, path_q, alpha, eps);
}

InequalityReport gamma_lower_bound(double rho, double alpha, double eps) {
  if (rho < 2.5) throw HypothesisError("gamma lower bound needs rho >= 5/2, got " + fmt(rho));
  const Gamma gamma = gamma_of(rho, alpha);
  return compare("gamma >= (2 rho - 1 - 3a)/(2 - 2a)", gamma.value, Relation::greater_equal,
                 (2.0 * rho - 1.0 - 3.0 * alpha) / (2.0 - 2.0 * alpha), eps, {{"rho", rho}, {"alpha", alpha}});
}

std::vector<InequalityReport> gamma_bound_grid(double eps) {
  std::vector<InequalityReport> out;
  for (int rho10 = 25; rho10 <= 60; ++rho10) {
    for (int a10 = 0; a10 <= 9; ++a10) out.push_back(gamma_lower_bound(rho10 / 10.0, a10 / 10.0, eps));
  }
  return out;
}

std::vector<PendentInstance> default_pendent_corpus(std::uint64_t seed, int random_count) {
  std::vector<PendentInstance> out;
  for (int p = 3; p <= 7; ++p) {
    for (int q = 1; q <= 5; ++q) {
      for (int r = 1; r <= 5; ++r) {
        auto bug = make_bug(p, q, r);
        PendentInstance inst{"B_{" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "}",
                             bug.graph, {}, {}};
        if (bug.first.length() > 0) inst.paths.push_back(bug.first);
        if (bug.second.length() > 0) inst.paths.push_back(bug.second);
        if (q >= r + 2) inst.ratio_pairs.emplace_back(bug.first, bug.second);
        if (r >= q + 2) inst.ratio_pairs.emplace_back(bug.second, bug.first);
        out.push_back(std::move(inst));
      }
    }
  }
  Rng rng(seed);
  for (int k = 0; k < random_count; ++k) {
    const int n = rng.between(3, 7);
    const double density = 0.2 + 0.6 * rng.unit();
    Graph base = random_connected_graph(rng, n, density);
    const int root = rng.between(0, n - 1);
    const int t = rng.between(2, 9);
    PendentInstance inst{"random#" + std::to_string(k), attach_paths_same_root(base, root, t, 1),
                         {attached_path_spec(root, n, t)}, {}};
    if (t >= 3) {
      for (int v = 0; v < n; ++v) {
        if (v != root) inst.ratio_pairs.emplace_back(inst.paths.front(), PendentPathSpec{{v}});
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

PendentSuiteResult run_pendent_suite(const std::vector<PendentInstance>& corpus, const std::vector<double>& alphas,
                                     double eps) {
  PendentSuiteResult out;
  std::vector<InequalityReport> decay, closed, bounds, ratio;
  auto tag = [](InequalityReport r, const std::string& subject, const std::string& where) {
    r.subject = subject;
    r.name = where + ": " + r.name;
    return r;
  };
  for (const auto& inst : corpus) {
    const std::string g6 = graph6_encode(inst.graph);
    for (const auto& path : inst.paths) validate_pendent_path(inst.graph, path);
    for (double alpha : alphas) {
      const SpectralResult s = perron(inst.graph, alpha);
      for (std::size_t k = 0; k < inst.paths.size(); ++k) {
        const auto& path = inst.paths[k];
        const std::string where = inst.label + " path " + std::to_string(k) + " alpha=" + fmt(alpha);
        if (s.rho >= kDecayFloor) {
          ++out.decay_instances;
          for (auto& r : check_decay(s, path, alpha, eps)) decay.push_back(tag(r, g6, where));
        }
        if (s.rho > kClosedFormFloor) {
          for (auto& r : check_lower_bounds(s, path, alpha, eps)) bounds.push_back(tag(r, g6, where));
        }
        if (s.rho > kSuiteClosedFormFloor) {
          ++out.closed_form_instances;
          auto fit = closed_form_entries(s, path, alpha);
          out.max_closed_form_residual = std::max(out.max_closed_form_residual, fit.max_relative_residual);
          const auto& m = fit.model;
          const double sys = m.system_residual();
          out.max_system_residual = std::max(out.max_system_residual, sys);
          const double g = m.gamma.value;
          if (!(m.coeff_a > 0.0 && m.coeff_b < 0.0 && m.coeff_b / m.coeff_a > -g * g && sys <= kSystemResidualBound)) {
            out.model_invariants_hold = false;
          }
          auto r = compare("closed-form relative residual <= 1e-8", fit.max_relative_residual, Relation::less_equal,
                           kClosedFormResidualBound, 0.0, {{"rho", s.rho}, {"alpha", alpha}});
          closed.push_back(tag(r, g6, where));
        }
      }
      if (s.rho >= kRatioFloor) {
        for (const auto& [pp, qq] : inst.ratio_pairs) {
          ++out.ratio_instances;
          const std::string where = inst.label + " alpha=" + fmt(alpha);
          ratio.push_back(tag(check_ratio_lemma(s, pp, qq, alpha, eps), g6, where));
        }
      }
    }
  }
  out.decay = summarize("pendent-decay", decay);
  out.closed_form = summarize("pendent-closed-form", closed);
  out.lower_bounds = summarize("pendent-lower-bounds", bounds);
  out.ratio_lemma = summarize("pendent-ratio-lemma", ratio);
  return out;
}

}  // namespace alphaidx
