#include "alphaidx/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alphaidx/conjecture.hpp"
#include "alphaidx/enumerate.hpp"
#include "alphaidx/errors.hpp"
#include "alphaidx/extremal.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/io.hpp"
#include "alphaidx/metrics.hpp"
#include "alphaidx/pendent.hpp"
#include "alphaidx/spectral.hpp"

namespace alphaidx::cli {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t stop = text.find(sep, start);
    out.emplace_back(text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Writes to `path`, or to `fallback` when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << std::fixed << x;
  return os.str();
}

}  // namespace

std::vector<double> parse_alpha_grid(std::string_view text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("alpha grid: invalid number '" + part + "'");
    }
    if (!(value >= 0.0 && value < 1.0)) {
      throw std::invalid_argument("alpha grid: " + part + " outside [0, 1); the alpha-index results hold for alpha in [0, 1)");
    }
    out.push_back(value);
  }
  return out;
}

Graph parse_family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec needs name:args, got '" + std::string(spec) + "'");
  const std::string name(spec.substr(0, colon));
  const auto args = parse_int_list(spec.substr(colon + 1));
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("family " + name + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (name == "complete") return want(1), make_complete(args[0]);
  if (name == "path") return want(1), make_path(args[0]);
  if (name == "cycle") return want(1), make_cycle(args[0]);
  if (name == "star") return want(1), make_star(args[0]);
  if (name == "kme") return want(1), make_complete_minus_edge(args[0]);
  if (name == "bug") return want(3), make_bug(args[0], args[1], args[2]).graph;
  if (name == "kite") return want(2), make_path_kite(args[0], args[1]);
  throw std::invalid_argument("unknown family '" + name + "'");
}

Graph parse_graph_source(std::string_view source) {
  if (source.starts_with("family:")) return parse_family(source.substr(7));
  if (source.starts_with("graph6:")) return graph6_decode(source.substr(7));
  if (source.starts_with("edgelist:")) return edgelist_decode(read_file(std::string(source.substr(9))));
  return parse_family(source);
}

int default_worker_count() {
  if (const char* env = std::getenv("ALPHAIDX_WORKERS")) {
    try {
      int w = parse_int(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"alpha-index toolkit: spectra of A_alpha(G) = alpha D + (1 - alpha) A"};
  app.require_subcommand(1);

  RunConfig config;
  config.worker_count = default_worker_count();
  std::string alpha_text = "0";
  double& tolerance = config.tolerance;
  double& eps = config.epsilon_strict;
  int& workers = config.worker_count;
  std::uint64_t& seed = config.seed;
  std::string& output_path = config.output;
  bool allow_order8 = false;

  // rho
  auto* rho_cmd = app.add_subcommand("rho", "alpha-index of one graph over an alpha grid");
  std::string family_spec, graph6_text, edgelist_path, graph_source;
  bool show_vector = false, rho_json = false;
  rho_cmd->add_option("--family", family_spec, "family spec, e.g. bug:6,3,5");
  rho_cmd->add_option("--graph6", graph6_text, "graph6 string");
  rho_cmd->add_option("--edgelist", edgelist_path, "edge-list file");
  rho_cmd->add_option("--graph", graph_source, "family:/graph6:/edgelist: source");
  rho_cmd->add_option("--alpha", alpha_text, "comma-separated alpha grid");
  rho_cmd->add_option("--tol", tolerance, "residual tolerance");
  rho_cmd->add_flag("--vector", show_vector, "print the Perron vector");
  rho_cmd->add_flag("--json", rho_json, "JSON output");

  // family
  auto* family_cmd = app.add_subcommand("family", "construct a family member and print it");
  std::string family_arg;
  bool family_edgelist = false;
  family_cmd->add_option("spec", family_arg, "family spec")->required();
  family_cmd->add_flag("--edgelist", family_edgelist, "print the edge list instead of metrics");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify a proved claim; exit 1 on violation");
  std::string claim;
  std::vector<int> n_values, k_values, omega_values, s_values;
  std::string base_source, suite = "all", corpus = "default", moved_text;
  int root = 0, other = -1, p_len = 0, q_len = 0, m_order = 0, random_count = 200;
  std::string csv_path;
  verify_cmd->add_option("claim", claim, "diameter | clique | path-min | balance | pro3 | flatten | tree-flatten | rotation | lemmas")
      ->required();
  verify_cmd->add_option("--n", n_values, "order(s)")->delimiter(',');
  verify_cmd->add_option("--k", k_values, "diameter bound(s) / clique size(s)")->delimiter(',');
  verify_cmd->add_option("--omega", omega_values, "clique number(s)")->delimiter(',');
  verify_cmd->add_option("--s", s_values, "path budget(s) for balance")->delimiter(',');
  auto* verify_alpha = verify_cmd->add_option("--alpha", alpha_text, "comma-separated alpha grid (lemmas: 0,0.25,0.5,0.75)");
  verify_cmd->add_option("--eps", eps, "strict-inequality margin");
  verify_cmd->add_option("--workers", workers, "enumeration shards");
  verify_cmd->add_flag("--allow-order8", allow_order8, "permit exhaustive runs at order 8");
  verify_cmd->add_option("--base", base_source, "base graph source");
  verify_cmd->add_option("--root,--u", root, "root vertex u");
  verify_cmd->add_option("--v", other, "second vertex v (rotation)");
  verify_cmd->add_option("--moved", moved_text, "comma-separated moved set (rotation)");
  verify_cmd->add_option("--p", p_len, "first path length");
  verify_cmd->add_option("--q", q_len, "second path length");
  verify_cmd->add_option("--m", m_order, "tree order (tree-flatten)");
  verify_cmd->add_option("--suite", suite, "lemmas: pendent | ratio | all");
  verify_cmd->add_option("--corpus", corpus, "lemmas corpus (default)");
  verify_cmd->add_option("--seed", seed, "seed of the random corpus part");
  verify_cmd->add_option("--random-count", random_count, "random corpus size");
  verify_cmd->add_option("--output,-o", output_path, "JSON report path (stdout if omitted)");
  verify_cmd->add_option("--csv", csv_path, "CSV summary path");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "scan an open conjecture; reversals are findings");
  std::string problem, scan_base, roots_text, summary_path;
  int scan_root = 0, budget = 8, max_order = 9;
  scan_cmd->add_option("problem", problem, "conjecture1 | conjecture2 | question1")->required();
  scan_cmd->add_option("--base", scan_base, "base graph source");
  scan_cmd->add_option("--root", scan_root, "root u (conjecture1)");
  scan_cmd->add_option("--roots", roots_text, "u,v (conjecture2)");
  scan_cmd->add_option("--budget", budget, "maximum p + q");
  scan_cmd->add_option("--max-order", max_order, "largest tree order (question1)");
  scan_cmd->add_option("--alpha", alpha_text, "comma-separated alpha grid");
  scan_cmd->add_option("--eps", eps, "classification margin");
  scan_cmd->add_option("--output,-o", output_path, "JSON-lines path (stdout if omitted)");
  scan_cmd->add_option("--summary", summary_path, "CSV path");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "print graph6 codes of small graphs");
  int enum_n = 0;
  bool connected = false, trees = false, dedup = false;
  enum_cmd->add_option("--n", enum_n, "order")->required();
  enum_cmd->add_flag("--connected", connected, "connected graphs (default)");
  enum_cmd->add_flag("--trees", trees, "trees via Pruefer sequences");
  enum_cmd->add_flag("--dedup", dedup, "one representative per isomorphism class");
  enum_cmd->add_flag("--allow-order8", allow_order8, "permit order 8");
  enum_cmd->add_option("--workers", workers, "enumeration shards");
  enum_cmd->add_option("--output,-o", output_path, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    config.alpha_grid = parse_alpha_grid(alpha_text);
    if (!(config.tolerance > 0.0)) throw std::invalid_argument("--tol must be positive");
    if (config.worker_count < 1) throw std::invalid_argument("--workers must be at least 1");
    const auto& alphas = config.alpha_grid;
    if (rho_cmd->parsed()) {
      int given = !family_spec.empty() + !graph6_text.empty() + !edgelist_path.empty() + !graph_source.empty();
      if (given != 1) throw std::invalid_argument("rho: give exactly one of --family, --graph6, --edgelist, --graph");
      Graph g = !family_spec.empty()   ? parse_family(family_spec)
                : !graph6_text.empty() ? graph6_decode(graph6_text)
                : !edgelist_path.empty() ? edgelist_decode(read_file(edgelist_path))
                                         : parse_graph_source(graph_source);
      PerronOptions options;
      options.tolerance = tolerance;
      json rows = json::array();
      for (double a : alphas) {
        auto s = perron(g, a, options);
        if (rho_json) {
          json row{{"alpha", a}, {"rho", s.rho}, {"residual", s.residual}, {"iterations", s.iterations},
                   {"fallback", s.used_fallback}};
          if (show_vector) row["perron"] = s.perron;
          rows.push_back(row);
        } else {
          out << "alpha=" << a << " rho=" << format_double(s.rho) << '\n';
          if (show_vector) {
            for (double x : s.perron) out << "  " << format_double(x) << '\n';
          }
        }
      }
      if (rho_json) out << json{{"graph6", graph6_encode(g)}, {"results", rows}}.dump(2) << '\n';
      return 0;
    }

    if (family_cmd->parsed()) {
      Graph g = parse_family(family_arg);
      if (family_edgelist) {
        out << edgelist_encode(g);
        return 0;
      }
      json j{{"spec", family_arg}, {"graph6", graph6_encode(g)}, {"order", g.order()}, {"edges", g.edge_count()},
             {"connected", is_connected(g)}, {"clique_number", clique_number(g)}};
      j["diameter"] = is_connected(g) ? json(diameter(g)) : json(nullptr);
      out << j.dump(2) << '\n';
      return 0;
    }

    if (enum_cmd->parsed()) {
      Sink sink(output_path, out);
      if (trees) {
        if (dedup || enum_n <= 8) {
          for (const auto& t : enumerate_trees(enum_n, dedup)) sink.get() << graph6_encode(t) << '\n';
        } else {
          throw std::invalid_argument("enumerate --trees without --dedup is limited to order 8");
        }
      } else {
        EnumerationOptions options{dedup, allow_order8, workers};
        if (dedup) {
          for (const auto& g : enumerate_connected(enum_n, options)) sink.get() << graph6_encode(g) << '\n';
        } else {
          enumerate_connected(enum_n, EnumerationOptions{false, allow_order8, 1}).size();  // range check
          for_each_connected(enum_n, 0, std::uint64_t{1} << pair_count(enum_n),
                             [&](const Graph& g, std::uint64_t) { sink.get() << graph6_encode(g) << '\n'; });
        }
      }
      return 0;
    }

    if (scan_cmd->parsed()) {
      ScanOptions options{eps};
      std::vector<ScanRecord> records;
      if (problem == "conjecture1") {
        if (scan_base.empty()) throw std::invalid_argument("conjecture1 needs --base");
        records = scan_conjecture1(parse_graph_source(scan_base), scan_root, budget, alphas, options);
      } else if (problem == "conjecture2") {
        if (scan_base.empty()) throw std::invalid_argument("conjecture2 needs --base");
        auto roots = parse_int_list(roots_text);
        if (roots.size() != 2) throw std::invalid_argument("conjecture2 needs --roots u,v");
        records = scan_conjecture2(parse_graph_source(scan_base), roots[0], roots[1], budget, alphas, options);
      } else if (problem == "question1") {
        records = search_question1_reversal(max_order, alphas, budget, options);
      } else {
        throw std::invalid_argument("unknown scan '" + problem + "'");
      }
      Sink sink(output_path, out);
      std::size_t reversed = 0, confirmed = 0, indeterminate = 0, counterexamples = 0;
      for (const auto& r : records) {
        sink.get() << to_json(r).dump() << '\n';
        reversed += r.direction == Direction::reversed;
        confirmed += r.direction == Direction::reversed && r.oracle_confirmed;
        indeterminate += r.direction == Direction::indeterminate;
        counterexamples += r.conjecture_counterexample;
      }
      if (!summary_path.empty()) {
        Sink csv(summary_path, out);
        csv.get() << scan_csv_header() << '\n';
        for (const auto& r : records) csv.get() << to_csv_row(r) << '\n';
      }
      err << problem << ": " << records.size() << " records, " << reversed << " reversed (" << confirmed
          << " oracle-confirmed), " << indeterminate << " indeterminate";
      if (counterexamples) err << ", " << counterexamples << " CONJECTURE COUNTEREXAMPLE(S)";
      err << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<VerificationReport> reports;
      auto need = [](const std::vector<int>& v, const char* flag) {
        if (v.empty()) throw std::invalid_argument(std::string("missing ") + flag);
        return v;
      };
      if (claim == "diameter" || claim == "clique" || claim == "path-min") {
        for (int n : need(n_values, "--n")) {
          VerifyOptions options{eps, allow_order8, workers, nullptr};
          const int limit = allow_order8 ? kOverrideEnumerationLimit : kDefaultEnumerationLimit;
          if (n < 2 || n > limit) throw std::invalid_argument("--n outside [2, " + std::to_string(limit) + "]");
          auto classes = enumerate_connected(n, EnumerationOptions{true, allow_order8, workers});
          options.classes = &classes;
          std::vector<int> params = claim == "diameter" ? k_values : omega_values;
          if (params.empty() && claim != "path-min") {
            for (int k = claim == "diameter" ? 1 : 2; k <= (claim == "diameter" ? n - 1 : n); ++k) params.push_back(k);
          }
          for (double a : alphas) {
            if (claim == "path-min") {
              reports.push_back(verify_path_minimum(n, a, options));
            } else {
              for (int k : params) {
                reports.push_back(claim == "diameter" ? verify_diameter_theorem(n, k, a, options)
                                                      : verify_clique_theorem(n, k, a, options));
              }
            }
          }
        }
      } else if (claim == "balance") {
        for (int k : need(k_values, "--k")) {
          for (int s : need(s_values, "--s")) {
            for (double a : alphas) {
              auto scan = scan_bug_balance(k, s, a, eps);
              auto steps = summarize("balance-steps", scan.steps);
              steps.parameters = {{"k", k}, {"s", s}, {"alpha", a}, {"eps_strict", eps}};
              auto best = summarize("balance-max", scan.balanced_max);
              best.parameters = steps.parameters;
              reports.push_back(steps);
              reports.push_back(best);
            }
          }
        }
      } else if (claim == "pro3") {
        std::vector<int> ks = k_values;
        if (ks.empty()) {
          for (int k = 4; k <= 12; ++k) ks.push_back(k);
        }
        std::vector<InequalityReport> agreement, bound;
        for (int k : ks) {
          for (double a : alphas) {
            const double closed = rho_complete_minus_edge(k, a);
            const double numeric = perron(make_complete_minus_edge(k), a).rho;
            Context ctx{{"k", k}, {"alpha", a}};
            agreement.push_back(compare("|closed form - perron| <= 1e-9", std::abs(closed - numeric),
                                        Relation::less_equal, 1e-9, 0.0, ctx));
            bound.push_back(compare("rho(K_k - e) >= k - 3 + 2a", closed, Relation::greater_equal, k - 3 + 2 * a, eps, ctx));
          }
        }
        reports.push_back(summarize("pro3-closed-form", agreement));
        reports.push_back(summarize("pro3-lower-bound", bound));
      } else if (claim == "flatten") {
        if (base_source.empty()) throw std::invalid_argument("flatten needs --base");
        Graph g = parse_graph_source(base_source);
        std::vector<InequalityReport> rs;
        for (double a : alphas) rs.push_back(verify_flatten_same_root(g, root, p_len, q_len, a, eps));
        auto rep = summarize("flatten", rs);
        rep.parameters = {{"base", graph6_encode(g)}, {"u", root}, {"p", p_len}, {"q", q_len}};
        reports.push_back(rep);
      } else if (claim == "tree-flatten") {
        if (base_source.empty()) throw std::invalid_argument("tree-flatten needs --base");
        Graph g = parse_graph_source(base_source);
        for (double a : alphas) reports.push_back(verify_tree_flatten(g, root, m_order, a, eps));
      } else if (claim == "rotation") {
        if (base_source.empty()) throw std::invalid_argument("rotation needs --base");
        Graph g = parse_graph_source(base_source);
        RotationMove move{root, other, parse_int_list(moved_text)};
        std::vector<InequalityReport> rs;
        for (double a : alphas) rs.push_back(verify_rotation(g, move, a, eps));
        auto rep = summarize("rotation", rs);
        rep.parameters = {{"base", graph6_encode(g)}, {"u", root}, {"v", other}};
        for (const auto& r : rs) {
          if (r.verdict == Verdict::inapplicable) err << "rotation: " << r.note << '\n';
        }
        reports.push_back(rep);
      } else if (claim == "lemmas") {
        if (corpus != "default") throw std::invalid_argument("unknown corpus '" + corpus + "'");
        if (suite != "pendent" && suite != "ratio" && suite != "all") throw std::invalid_argument("unknown suite '" + suite + "'");
        std::vector<double> grid = verify_alpha->count() == 0 ? std::vector<double>{0.0, 0.25, 0.5, 0.75} : alphas;
        auto result = run_pendent_suite(default_pendent_corpus(seed, random_count), grid, eps);
        json params{{"seed", seed}, {"random_count", random_count}, {"alpha", grid}, {"eps_strict", eps}};
        for (auto* rep : {&result.decay, &result.closed_form, &result.lower_bounds, &result.ratio_lemma}) {
          rep->parameters = params;
        }
        if (suite != "ratio") {
          reports.push_back(result.decay);
          reports.push_back(result.closed_form);
          reports.push_back(result.lower_bounds);
        }
        if (suite != "pendent") {
          reports.push_back(result.ratio_lemma);
          auto gamma = summarize("gamma-lower-bound", gamma_bound_grid(eps));
          gamma.parameters = {{"rho", "2.5..6.0 step 0.1"}, {"alpha", "0..0.9 step 0.1"}};
          reports.push_back(gamma);
        }
      } else {
        throw std::invalid_argument("unknown claim '" + claim + "'");
      }

      json all = json::array();
      bool ok = true;
      for (const auto& r : reports) {
        all.push_back(to_json(r));
        ok = ok && r.verified();
        err << r.claim << ' ' << r.parameters.dump() << ": " << (r.verified() ? "verified" : "VIOLATED") << " ("
            << r.instances_checked << " checked, " << r.violations.size() << " violations)\n";
      }
      {
        Sink sink(output_path, out);
        sink.get() << all.dump(2) << '\n';
      }
      if (!csv_path.empty()) {
        Sink csv(csv_path, out);
        csv.get() << csv_header() << '\n';
        for (const auto& r : reports) csv.get() << to_csv_row(r) << '\n';
      }
      return ok ? 0 : static_cast<int>(ExitCode::violation);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }
  return static_cast<int>(ExitCode::usage);
}

}  // namespace alphaidx::cli
