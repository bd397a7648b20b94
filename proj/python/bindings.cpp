#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alphaidx/conjecture.hpp"
#include "alphaidx/enumerate.hpp"
#include "alphaidx/errors.hpp"
#include "alphaidx/extremal.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/io.hpp"
#include "alphaidx/isomorphism.hpp"
#include "alphaidx/metrics.hpp"
#include "alphaidx/pendent.hpp"
#include "alphaidx/spectral.hpp"

namespace py = pybind11;
using namespace alphaidx;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
template <class T>
std::string dumped(const T& value) {
  return to_json(value).dump();
}

std::vector<std::string> dumped_all(const std::vector<ScanRecord>& records) {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(dumped(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "alpha-index toolkit core";

  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("degrees", &Graph::degrees)
      .def("adjacent", &Graph::adjacent)
      .def("edge_count", &Graph::edge_count)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", graph6='" + graph6_encode(g) + "')";
      });

  m.def("complete", &make_complete);
  m.def("path", &make_path);
  m.def("cycle", &make_cycle);
  m.def("star", &make_star);
  m.def("complete_minus_edge", &make_complete_minus_edge);
  m.def("bug", [](int p, int q, int r) { return make_bug(p, q, r).graph; });
  m.def("path_kite", &make_path_kite);
  m.def("attach_paths_same_root", &attach_paths_same_root);
  m.def("attach_paths_two_roots", &attach_paths_two_roots);

  m.def("is_connected", &is_connected);
  m.def("diameter", &diameter);
  m.def("clique_number", &clique_number);
  m.def("is_isomorphic", &is_isomorphic);

  m.def("enumerate_connected", [](int n, bool dedup, bool allow_order8) {
    std::vector<std::string> out;
    for (const auto& g : enumerate_connected(n, EnumerationOptions{dedup, allow_order8, 1})) out.push_back(graph6_encode(g));
    return out;
  }, py::arg("n"), py::arg("dedup") = true, py::arg("allow_order8") = false);
  m.def("enumerate_trees", [](int n) {
    std::vector<std::string> out;
    for (const auto& g : enumerate_trees(n, true)) out.push_back(graph6_encode(g));
    return out;
  });

  m.def("perron", [](const Graph& g, double alpha, double tolerance) {
    PerronOptions options;
    options.tolerance = tolerance;
    auto s = perron(g, alpha, options);
    return py::make_tuple(s.rho, s.perron);
  }, py::arg("graph"), py::arg("alpha"), py::arg("tolerance") = 1e-12);
  m.def("perron_oracle", [](const Graph& g, double alpha) {
    auto s = perron_oracle(g, alpha);
    return py::make_tuple(s.rho, s.perron);
  });
  m.def("alpha_index", &alpha_index);
  m.def("gamma", [](double rho, double alpha) { return gamma_of(rho, alpha).value; });
  m.def("rho_complete_minus_edge", &rho_complete_minus_edge);

  m.def("verify_diameter_theorem", [](int n, int k, double alpha, double eps) {
    return dumped(verify_diameter_theorem(n, k, alpha, VerifyOptions{eps}));
  }, py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("eps") = kEpsilonStrict);
  m.def("verify_clique_theorem", [](int n, int omega, double alpha, double eps) {
    return dumped(verify_clique_theorem(n, omega, alpha, VerifyOptions{eps}));
  }, py::arg("n"), py::arg("omega"), py::arg("alpha"), py::arg("eps") = kEpsilonStrict);
  m.def("verify_path_minimum", [](int n, double alpha) { return dumped(verify_path_minimum(n, alpha)); });
  m.def("scan_bug_balance", [](int k, int s, double alpha) {
    auto scan = scan_bug_balance(k, s, alpha);
    return py::make_tuple(dumped(summarize("balance-steps", scan.steps)),
                          dumped(summarize("balance-max", scan.balanced_max)));
  });
  m.def("check_decay", [](const Graph& g, const std::vector<int>& path, double alpha) {
    std::vector<std::string> out;
    for (const auto& r : check_decay(g, PendentPathSpec{path}, alpha)) out.push_back(dumped(r));
    return out;
  });

  m.def("scan_conjecture1", [](const Graph& g, int u, int budget, const std::vector<double>& alphas) {
    return dumped_all(scan_conjecture1(g, u, budget, alphas));
  });
  m.def("scan_conjecture2", [](const Graph& g, int u, int v, int budget, const std::vector<double>& alphas) {
    return dumped_all(scan_conjecture2(g, u, v, budget, alphas));
  });
  m.def("search_question1_reversal", [](int max_order, const std::vector<double>& alphas, int budget) {
    return dumped_all(search_question1_reversal(max_order, alphas, budget));
  }, py::arg("max_tree_order"), py::arg("alphas"), py::arg("max_budget") = 8);
}
