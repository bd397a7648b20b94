#include "alphaidx/extremal.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "alphaidx/enumerate.hpp"
#include "alphaidx/errors.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/io.hpp"
#include "alphaidx/isomorphism.hpp"
#include "alphaidx/metrics.hpp"
#include "alphaidx/spectral.hpp"

namespace alphaidx {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_order(int n, const VerifyOptions& options) {
  const int limit = options.allow_order8 ? kOverrideEnumerationLimit : kDefaultEnumerationLimit;
  require(n >= 1 && n <= limit, "order " + std::to_string(n) + " outside [1, " + std::to_string(limit) + "]");
}

// Either the caller's class list or a freshly enumerated one.
class ClassSource {
 public:
  ClassSource(int n, const VerifyOptions& options) {
    if (options.classes) {
      view_ = options.classes;
      for (const auto& g : *view_) require(g.order() == n, "supplied class list has the wrong order");
    } else {
      owned_ = enumerate_connected(n, EnumerationOptions{true, options.allow_order8, options.workers});
      view_ = &owned_;
    }
  }
  const std::vector<Graph>& get() const { return *view_; }

 private:
  std::vector<Graph> owned_;
  const std::vector<Graph>* view_ = nullptr;
};

enum class Extremum { maximum, minimum };

// Shared core of the "unique extremal graph over a filtered class list"
// claims. Signed margin is how far a graph is from beating the extremal one.
template <class Filter>
VerificationReport extremal_claim(std::string claim, const std::vector<Graph>& classes, const Graph& extremal,
                                  double alpha, double eps, Extremum kind, Filter&& qualifies) {
  VerificationReport report;
  report.claim = std::move(claim);
  report.instances_checked = static_cast<std::int64_t>(classes.size());
  const double bound = perron(extremal, alpha).rho;
  bool found_extremal = false;
  std::optional<double> best_rho;
  const Graph* best = nullptr;
  for (const Graph& g : classes) {
    if (!qualifies(g)) continue;
    ++report.instances_qualifying;
    const double rho = perron(g, alpha).rho;
    if (!best_rho || (kind == Extremum::maximum ? rho > *best_rho : rho < *best_rho)) {
      best_rho = rho;
      best = &g;
    }
    const double margin = kind == Extremum::maximum ? bound - rho : rho - bound;
    if (is_isomorphic(g, extremal)) {
      found_extremal = true;
      if (std::abs(margin) > eps) {
        report.violations.push_back({"indeterminate", graph6_encode(g), rho, bound, margin, "solver disagreement on the extremal graph"});
      }
      continue;
    }
    if (!report.min_margin || margin < *report.min_margin) report.min_margin = margin;
    if (margin < -eps) {
      report.violations.push_back({"violation", graph6_encode(g), rho, bound, margin, ""});
    } else if (margin <= eps) {
      report.violations.push_back({"indeterminate", graph6_encode(g), rho, bound, margin, "non-isomorphic near-tie"});
    }
  }
  if (!found_extremal) {
    report.violations.push_back({"missing-extremal", graph6_encode(extremal), bound, bound, 0.0,
                                 "extremal graph not among the qualifying classes"});
  }
  if (best) report.extremal_witness = graph6_encode(*best);
  return report;
}

}  // namespace

InequalityReport verify_rotation(const Graph& g, const RotationMove& move, double alpha, double eps) {
  Context ctx{{"u", move.u}, {"v", move.v}, {"moved", static_cast<double>(move.moved.size())}, {"alpha", alpha}};
  Graph h = rotate_edges(g, move);
  if (!is_connected(g)) throw std::domain_error("verify_rotation: G is disconnected");
  const SpectralResult sg = perron(g, alpha);
  if (sg.perron[move.v] < sg.perron[move.u] - 1e-12) {
    auto r = inapplicable("rho(H) > rho(G)", "hypothesis x_v >= x_u fails", ctx);
    r.subject = graph6_encode(g);
    return r;
  }
  if (!is_connected(h)) throw std::domain_error("verify_rotation: rotated graph is disconnected");
  auto r = compare("rho(H) > rho(G)", perron(h, alpha).rho, Relation::greater, sg.rho, eps, ctx);
  r.subject = graph6_encode(g);
  return r;
}

BalanceScan scan_bug_balance(int k, int s, double alpha, double eps) {
  require(k >= 4, "scan_bug_balance: k must be >= 4");
  require(s >= 2, "scan_bug_balance: s must be >= 2");
  auto rho_bug = [&](int p, int q) { return perron(make_bug(k, p, q).graph, alpha).rho; };
  auto ctx = [&](int p, int q) { return Context{{"k", k}, {"p", p}, {"q", q}, {"alpha", alpha}}; };
  BalanceScan out;
  for (int q = 1; s - q >= q + 2; ++q) {
    const int p = s - q;
    auto r = compare("rho(B_{k,p,q}) < rho(B_{k,p-1,q+1})", rho_bug(p, q), Relation::less, rho_bug(p - 1, q + 1), eps,
                     ctx(p, q));
    r.subject = graph6_encode(make_bug(k, p, q).graph);
    out.steps.push_back(std::move(r));
  }
  const double balanced = rho_bug((s + 1) / 2, s / 2);
  for (int q = 1; q <= s - 1; ++q) {
    auto r = compare("rho(B_{k,s-q,q}) <= rho(balanced)", rho_bug(s - q, q), Relation::less_equal, balanced, eps,
                     ctx(s - q, q));
    r.subject = graph6_encode(make_bug(k, s - q, q).graph);
    out.balanced_max.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_diameter_theorem(int n, int k, double alpha, const VerifyOptions& options) {
  const auto start = Clock::now();
  check_order(n, options);
  require(n >= 2 && k >= 1 && k <= n - 1, "verify_diameter_theorem: need 1 <= k <= n-1");
  ClassSource classes(n, options);
  const Graph extremal = k == 1 ? make_complete(n) : make_bug(n - k + 2, k / 2, (k + 1) / 2).graph;
  auto report = extremal_claim("diameter", classes.get(), extremal, alpha, options.eps, Extremum::maximum,
                               [k](const Graph& g) { return diameter(g) >= k; });
  report.parameters = {{"n", n}, {"k", k}, {"alpha", alpha}, {"eps_strict", options.eps},
                       {"extremal", graph6_encode(extremal)}};
  report.runtime_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_clique_theorem(int n, int omega, double alpha, const VerifyOptions& options) {
  const auto start = Clock::now();
  check_order(n, options);
  require(omega >= 2 && omega <= n, "verify_clique_theorem: need 2 <= omega <= n");
  ClassSource classes(n, options);
  const Graph extremal = omega == n ? make_complete(n) : make_path_kite(n - omega, omega);
  auto report = extremal_claim("clique", classes.get(), extremal, alpha, options.eps, Extremum::minimum,
                               [omega](const Graph& g) { return clique_number(g) == omega; });
  report.parameters = {{"n", n}, {"omega", omega}, {"alpha", alpha}, {"eps_strict", options.eps},
                       {"extremal", graph6_encode(extremal)}};
  report.runtime_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_path_minimum(int n, double alpha, const VerifyOptions& options) {
  const auto start = Clock::now();
  check_order(n, options);
  ClassSource classes(n, options);
  auto report = extremal_claim("path-minimum", classes.get(), make_path(n), alpha, options.eps, Extremum::minimum,
                               [](const Graph&) { return true; });
  report.parameters = {{"n", n}, {"alpha", alpha}, {"eps_strict", options.eps}};
  report.runtime_ms = elapsed_ms(start);
  return report;
}

InequalityReport verify_flatten_same_root(const Graph& g, int u, int p, int q, double alpha, double eps) {
  require(q >= 1 && p >= q, "verify_flatten_same_root: need p >= q >= 1");
  require(u >= 0 && u < g.order(), "verify_flatten_same_root: invalid vertex");
  const double base = perron(g, alpha).rho;
  if (base < 2.0 - 1e-12) throw HypothesisError("flattening needs rho(G) >= 2");
  const double lhs = perron(attach_paths_same_root(g, u, p, q), alpha).rho;
  const double rhs = perron(attach_paths_same_root(g, u, p + q - 1, 1), alpha).rho;
  auto r = compare(q == 1 ? "rho(G_{p,1}(u)) >= rho(G_{p,1}(u))" : "rho(G_{p,q}(u)) > rho(G_{p+q-1,1}(u))", lhs,
                   q == 1 ? Relation::greater_equal : Relation::greater, rhs, eps,
                   {{"u", u}, {"p", p}, {"q", q}, {"alpha", alpha}});
  r.subject = graph6_encode(g);
  return r;
}

VerificationReport verify_tree_flatten(const Graph& g, int u, int m, double alpha, double eps) {
  const auto start = Clock::now();
  require(m >= 1 && m <= 8, "verify_tree_flatten: tree order outside [1, 8]");
  require(u >= 0 && u < g.order(), "verify_tree_flatten: invalid vertex");
  if (perron(g, alpha).rho < 2.0 - 1e-12) throw HypothesisError("tree flattening needs rho(G) >= 2");
  const Graph flat = attach_paths_same_root(g, u, m, 1);
  const double bound = perron(flat, alpha).rho;
  VerificationReport report;
  report.claim = "tree-flatten";
  double best = bound;
  std::string witness = graph6_encode(flat);
  for (const auto& tree : enumerate_rooted_trees(m)) {
    ++report.instances_checked;
    ++report.instances_qualifying;
    const Graph h = attach_tree(g, u, tree.parent);
    const double rho = perron(h, alpha).rho;
    const double margin = rho - bound;
    bool path_from_end = true;
    {
      std::vector<int> child_count(static_cast<std::size_t>(m), 0);
      for (int i = 0; i < m; ++i)
        if (tree.parent[i] >= 0) ++child_count[tree.parent[i]];
      for (int c : child_count) path_from_end = path_from_end && c <= 1;
    }
    if (path_from_end) {
      if (std::abs(margin) > eps) report.violations.push_back({"violation", graph6_encode(h), rho, bound, margin, "path attachment differs"});
      continue;
    }
    if (!report.min_margin || margin < *report.min_margin) report.min_margin = margin;
    if (rho < best) {
      best = rho;
      witness = graph6_encode(h);
    }
    if (margin < -eps) {
      report.violations.push_back({"violation", graph6_encode(h), rho, bound, margin, ""});
    } else if (margin <= eps) {
      report.violations.push_back({"indeterminate", graph6_encode(h), rho, bound, margin, "near-tie with the path"});
    }
  }
  report.extremal_witness = witness;
  report.parameters = {{"base", graph6_encode(g)}, {"u", u}, {"m", m}, {"alpha", alpha}, {"eps_strict", eps}};
  report.runtime_ms = elapsed_ms(start);
  return report;
}

}  // namespace alphaidx
