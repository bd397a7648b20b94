#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alphaidx/errors.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/metrics.hpp"
#include "alphaidx/random.hpp"
#include "alphaidx/spectral.hpp"

using namespace alphaidx;

namespace {

const double kGrid[] = {0.0, 0.25, 0.5, 0.75};

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("assemble_alpha") {
    auto m = assemble_alpha(make_complete(2), 0.5);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(m(i, j) == 0.5);
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
      auto g = random_connected_graph(rng, rng.between(1, 12), rng.unit());
      auto a0 = assemble_alpha(g, 0.0), a1 = assemble_alpha(g, 1.0);
      const double alpha = rng.unit();
      auto mix = assemble_alpha(g, alpha);
      for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
          CHECK(a0(i, j) == (g.adjacent(i, j) ? 1.0 : 0.0));
          CHECK(a1(i, j) == (i == j ? g.degree(i) : 0.0));
          CHECK(mix(i, j) == doctest::Approx(alpha * a1(i, j) + (1 - alpha) * a0(i, j)).epsilon(1e-15));
          CHECK(mix(i, j) == mix(j, i));
        }
      }
    }
    CHECK_THROWS_AS(assemble_alpha(make_path(3), -0.1), std::invalid_argument);
    CHECK_THROWS_AS(assemble_alpha(make_path(3), 1.5), std::invalid_argument);
  }

  TEST_CASE("quadratic form") {
    CHECK(quadratic_form(assemble_alpha(Graph(3), 0.0), std::vector<double>{1, 2, 3}) == 0.0);
    const double h = 1 / std::sqrt(2.0);
    CHECK(quadratic_form(assemble_alpha(make_complete(2), 0.0), std::vector<double>{h, h}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(quadratic_form(assemble_alpha(make_path(3), 0.0), std::vector<double>{1, 2}),
                    std::invalid_argument);
    auto b = make_bug(5, 3, 2).graph;
    auto s = perron(b, 0.3);
    CHECK(std::abs(quadratic_form(assemble_alpha(b, 0.3), s.perron) - s.rho) < 1e-12);
  }

  TEST_CASE("known values") {
    for (int n = 2; n <= 12; ++n) {
      for (double a : kGrid) CHECK(std::abs(perron(make_complete(n), a).rho - (n - 1)) < 1e-10);
      CHECK(std::abs(perron(make_path(n), 0.0).rho - 2 * std::cos(std::numbers::pi / (n + 1))) < 1e-10);
    }
    CHECK(std::abs(perron(make_path(4), 0.0).rho - (1 + std::sqrt(5.0)) / 2) < 1e-12);
    CHECK(std::abs(perron(make_complete_minus_edge(4), 0.0).rho - (1 + std::sqrt(17.0)) / 2) < 1e-12);
    CHECK(std::abs(perron_oracle(make_complete_minus_edge(4), 0.0).rho - (1 + std::sqrt(17.0)) / 2) < 1e-12);
    CHECK(std::abs(perron_oracle(make_path(2), 0.25).rho - 1.0) < 1e-14);
    CHECK(std::abs(perron(make_complete(5), 0.3).rho - 4.0) < 1e-12);
    CHECK(std::abs(perron(make_star(5), 0.0).rho - 2.0) < 1e-12);
  }

  TEST_CASE("input errors") {
    CHECK_THROWS_AS(perron(Graph(2), 0.0), std::domain_error);
    CHECK_THROWS_AS(perron(make_path(3), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(perron_oracle(Graph(3), 0.5), std::domain_error);
  }

  TEST_CASE("Perron result invariants") {
    Rng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
      auto g = random_connected_graph(rng, rng.between(1, 20), rng.unit());
      for (double a : kGrid) {
        auto s = perron(g, a);
        CHECK(std::abs(norm2(s.perron) - 1.0) < 1e-14);
        CHECK(s.residual <= 1e-12);
        for (double x : s.perron) CHECK(x > 0.0);
      }
    }
  }

  TEST_CASE("regular graphs: rho equals the degree, constant vector") {
    std::vector<std::pair<Graph, int>> cases = {{make_cycle(5), 2}, {make_cycle(8), 2}, {make_complete(6), 5},
                                                {petersen(), 3}};
    cases.emplace_back(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}),
                       3);
    for (const auto& [g, d] : cases) {
      REQUIRE(g.is_regular());
      for (double a : kGrid) {
        auto s = perron(g, a);
        CHECK(std::abs(s.rho - d) < 1e-10);
        const double c = 1 / std::sqrt(static_cast<double>(g.order()));
        for (double x : s.perron) CHECK(std::abs(x - c) < 1e-8);
      }
    }
  }

  TEST_CASE("degree bounds, strict below the maximum degree when not regular") {
    Rng rng(4);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto g = random_connected_graph(rng, rng.between(3, 14), rng.unit());
      if (g.is_regular()) continue;
      for (double a : kGrid) {
        double rho = perron(g, a).rho;
        CHECK(rho >= g.min_degree() - 1e-12);
        CHECK(rho < g.max_degree() - 1e-9);
      }
      ++checked;
    }
    CHECK(checked > 200);
  }

  TEST_CASE("power iteration agrees with the Jacobi oracle on 1000 random graphs") {
    Rng rng(20170601);
    for (int trial = 0; trial < 1000; ++trial) {
      auto g = random_connected_graph(rng, rng.between(1, 12), rng.unit());
      const double a = kGrid[trial % 4];
      auto fast = perron(g, a), slow = perron_oracle(g, a);
      CHECK(std::abs(fast.rho - slow.rho) < 1e-9);
      double diff = 0.0;
      for (int i = 0; i < g.order(); ++i) diff = std::max(diff, std::abs(fast.perron[i] - slow.perron[i]));
      CHECK(diff < 1e-7);
      CHECK_FALSE(fast.used_fallback);
    }
  }

  TEST_CASE("power iteration converges without fallback up to order 32") {
    Rng rng(32);
    for (int trial = 0; trial < 60; ++trial) {
      auto g = random_connected_graph(rng, rng.between(20, 32), rng.unit());
      for (double a : {0.0, 0.5, 0.9}) {
        auto s = perron(g, a);
        CHECK_FALSE(s.used_fallback);
        CHECK(std::abs(s.rho - perron_oracle(g, a).rho) < 1e-9);
      }
    }
    for (const auto& g : {make_complete_minus_edge(32), make_star(32), make_path_kite(16, 16)}) {
      for (double a : {0.0, 0.5, 0.9}) CHECK_FALSE(perron(g, a).used_fallback);
    }
  }

  TEST_CASE("Jacobi eigensystem reconstructs the matrix") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      auto g = random_connected_graph(rng, rng.between(2, 12), rng.unit());
      auto m = assemble_alpha(g, rng.unit());
      auto e = jacobi_eigensystem(m);
      const int n = m.dimension();
      for (int k = 1; k < n; ++k) CHECK(e.values[k - 1] <= e.values[k]);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int k = 0; k < n; ++k) s += e.vectors[i * n + k] * e.values[k] * e.vectors[j * n + k];
          CHECK(std::abs(s - m(i, j)) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("gamma") {
    for (double a : kGrid) CHECK(gamma_of(2.0, a).value == doctest::Approx(1.0));
    CHECK(gamma_of(2.5, 0.0).value == 2.0);
    CHECK(std::abs(gamma_of(3.0, 0.0).value - (3 + std::sqrt(5.0)) / 2) < 1e-14);
    CHECK(std::abs(gamma_of(3.0, 0.5).value - (2 + std::sqrt(3.0))) < 1e-14);
    CHECK_THROWS_AS(gamma_of(1.9, 0.0), HypothesisError);
    CHECK_THROWS_AS(gamma_of(3.0, 1.0), std::invalid_argument);
    for (int r = 20; r <= 100; ++r) {
      for (double a : kGrid) {
        auto g = gamma_of(r / 10.0, a);
        const double t = g.trace();
        CHECK(std::abs(g.value * g.value - t * g.value + 1) <= 1e-12 * std::max(1.0, g.value * g.value));
        CHECK(std::abs(g.value * g.inverse() - 1.0) < 1e-12);
        CHECK(g.value >= 1.0);
        if (r > 20) CHECK(g.value > 1.0);
      }
    }
  }

  TEST_CASE("complete graph minus an edge, closed form") {
    CHECK(std::abs(rho_complete_minus_edge(4, 0.0) - (1 + std::sqrt(17.0)) / 2) < 1e-14);
    CHECK(rho_complete_minus_edge(4, 0.0) >= 1.0);
    CHECK_THROWS_AS(rho_complete_minus_edge(3, 0.0), std::invalid_argument);
    for (int k = 4; k <= 12; ++k) {
      for (int a10 = 0; a10 <= 9; ++a10) {
        const double a = a10 / 10.0;
        const double closed = rho_complete_minus_edge(k, a);
        CHECK(std::abs(closed - perron(make_complete_minus_edge(k), a).rho) <= 1e-9);
        CHECK(closed >= k - 3 + 2 * a);
        const double x = closed;
        CHECK(std::abs(x * x - (k - 3 + k * a) * x + (k - 2) * ((k + 1) * a - 2)) < 1e-9 * x * x);
      }
    }
  }
}
