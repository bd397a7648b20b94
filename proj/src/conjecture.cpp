#include "alphaidx/conjecture.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "alphaidx/enumerate.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/io.hpp"
#include "alphaidx/metrics.hpp"
#include "alphaidx/spectral.hpp"

namespace alphaidx {
namespace {

Direction classify(double lhs, double rhs, double eps) {
  const double margin = rhs - lhs;
  if (margin > eps) return Direction::consistent;
  if (margin < -eps) return Direction::reversed;
  return Direction::indeterminate;
}

using Builder = Graph (*)(const Graph&, int, int, int, int);

Graph build_same_root(const Graph& g, int u, int, int p, int q) { return attach_paths_same_root(g, u, p, q); }
Graph build_two_roots(const Graph& g, int u, int v, int p, int q) { return attach_paths_two_roots(g, u, v, p, q); }

// Splits (p, q) with q >= 1, p >= q + 2 and p + q <= budget, by total then q.
std::vector<std::pair<int, int>> splits(int budget) {
  std::vector<std::pair<int, int>> out;
  for (int total = 4; total <= budget; ++total) {
    for (int q = 1; total - q >= q + 2; ++q) out.emplace_back(total - q, q);
  }
  return out;
}

void require_alphas(const std::vector<double>& alphas) {
  for (double a : alphas) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("alpha outside [0, 1)");
  }
}

// One (base, roots) scan over all splits and alphas.
void scan(const std::string& conjecture, const Graph& g, int u, int v, int budget, const std::vector<double>& alphas,
          const ScanOptions& options, Builder build, bool (*proved)(double), std::vector<ScanRecord>& out) {
  const std::string g6 = graph6_encode(g);
  for (double alpha : alphas) {
    std::map<std::pair<int, int>, double> cache;
    auto rho = [&](int p, int q) {
      auto [it, fresh] = cache.try_emplace({p, q}, 0.0);
      if (fresh) it->second = perron(build(g, u, v, p, q), alpha).rho;
      return it->second;
    };
    for (auto [p, q] : splits(budget)) {
      ScanRecord r;
      r.conjecture = conjecture;
      r.base_graph = g6;
      r.u = u;
      r.v = v;
      r.p = p;
      r.q = q;
      r.alpha = alpha;
      r.lhs = rho(p, q);
      r.rhs = rho(p - 1, q + 1);
      r.direction = classify(r.lhs, r.rhs, options.eps);
      if (r.direction == Direction::indeterminate) {
        r.resolved_by_oracle = true;
        r.lhs = perron_oracle(build(g, u, v, p, q), alpha).rho;
        r.rhs = perron_oracle(build(g, u, v, p - 1, q + 1), alpha).rho;
        r.direction = classify(r.lhs, r.rhs, options.eps);
      }
      if (r.direction == Direction::reversed) {
        const double lo = perron_oracle(build(g, u, v, p, q), alpha).rho;
        const double hi = perron_oracle(build(g, u, v, p - 1, q + 1), alpha).rho;
        r.oracle_confirmed = classify(lo, hi, options.eps) == Direction::reversed;
        r.conjecture_counterexample = proved != nullptr && !proved(alpha);
      }
      if (conjecture == "same-root") r.in_partial_result_zone = r.lhs >= kPartialResultThreshold;
      out.push_back(r);
    }
  }
}

bool same_root_proved(double alpha) { return alpha == 0.0 || alpha == 0.5; }
bool adjacent_roots_proved(double alpha) { return alpha == 0.0; }

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::consistent: return "consistent";
    case Direction::reversed: return "reversed";
    case Direction::indeterminate: return "indeterminate";
  }
  return "?";
}

nlohmann::ordered_json to_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["conjecture"] = r.conjecture;
  j["base_graph"] = r.base_graph;
  j["u"] = r.u;
  if (r.v >= 0) j["v"] = r.v;
  j["p"] = r.p;
  j["q"] = r.q;
  j["alpha"] = r.alpha;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["direction"] = to_string(r.direction);
  j["resolved_by_oracle"] = r.resolved_by_oracle;
  if (r.direction == Direction::reversed) j["oracle_confirmed"] = r.oracle_confirmed;
  if (r.conjecture == "same-root") j["partial_result_zone"] = r.in_partial_result_zone;
  if (r.conjecture_counterexample) j["flag"] = "CONJECTURE COUNTEREXAMPLE";
  return j;
}

std::string scan_csv_header() { return "conjecture,base_graph,u,v,p,q,alpha,lhs,rhs,direction,oracle_confirmed,counterexample"; }

std::string to_csv_row(const ScanRecord& r) {
  std::ostringstream os;
  os << r.conjecture << ',' << r.base_graph << ',' << r.u << ',' << r.v << ',' << r.p << ',' << r.q << ','
     << nlohmann::json(r.alpha).dump() << ',' << nlohmann::json(r.lhs).dump() << ',' << nlohmann::json(r.rhs).dump()
     << ',' << to_string(r.direction) << ',' << (r.oracle_confirmed ? 1 : 0) << ','
     << (r.conjecture_counterexample ? 1 : 0);
  return os.str();
}

std::vector<ScanRecord> scan_conjecture1(const Graph& g, int u, int max_budget, const std::vector<double>& alphas,
                                         const ScanOptions& options) {
  if (!is_connected(g)) throw std::domain_error("scan_conjecture1: base graph is disconnected");
  if (u < 0 || u >= g.order()) throw std::invalid_argument("scan_conjecture1: invalid root");
  require_alphas(alphas);
  std::vector<ScanRecord> out;
  scan("same-root", g, u, -1, max_budget, alphas, options, build_same_root, same_root_proved, out);
  return out;
}

std::vector<ScanRecord> scan_conjecture2(const Graph& g, int u, int v, int max_budget,
                                         const std::vector<double>& alphas, const ScanOptions& options) {
  if (!is_connected(g)) throw std::domain_error("scan_conjecture2: base graph is disconnected");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v) {
    throw std::invalid_argument("scan_conjecture2: invalid roots");
  }
  if (!g.adjacent(u, v)) throw std::invalid_argument("scan_conjecture2: roots must be adjacent");
  if (g.degree(u) < 2 || g.degree(v) < 2) {
    throw std::invalid_argument(
        "scan_conjecture2: roots need degree >= 2 (for G = K_2, G_{3,1}(u,v) = G_{2,2}(u,v) = P_4)");
  }
  require_alphas(alphas);
  std::vector<ScanRecord> out;
  scan("adjacent-roots", g, u, v, max_budget, alphas, options, build_two_roots, adjacent_roots_proved, out);
  return out;
}

std::vector<ScanRecord> search_question1_reversal(int max_tree_order, const std::vector<double>& alphas,
                                                  int max_budget, const ScanOptions& options) {
  if (max_tree_order < 1 || max_tree_order > kMaxTreeOrder) {
    throw std::invalid_argument("search_question1_reversal: tree order outside [1, 9]");
  }
  require_alphas(alphas);
  std::vector<ScanRecord> out;
  for (int m = 4; m <= max_tree_order; ++m) {
    for (const Graph& tree : enumerate_trees(m, true)) {
      for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
          if (u == v || tree.adjacent(u, v) || tree.degree(u) < 2 || tree.degree(v) < 2) continue;
          scan("tree-roots", tree, u, v, max_budget, alphas, options, build_two_roots, nullptr, out);
        }
      }
    }
  }
  return out;
}

std::vector<RootedBase> standard_conjecture1_corpus() {
  std::vector<RootedBase> out;
  for (const Graph& g : {make_complete(3), make_complete(4), make_cycle(5), make_complete_minus_edge(4)}) {
    for (int u = 0; u < g.order(); ++u) out.push_back({g, u, -1});
  }
  return out;
}

std::vector<RootedBase> standard_conjecture2_corpus() {
  std::vector<RootedBase> out;
  for (const Graph& g : {make_complete(3), make_complete(4), make_cycle(5), make_complete_minus_edge(4)}) {
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        if (u != v && g.adjacent(u, v) && g.degree(u) >= 2 && g.degree(v) >= 2) out.push_back({g, u, v});
      }
    }
  }
  return out;
}

}  // namespace alphaidx
