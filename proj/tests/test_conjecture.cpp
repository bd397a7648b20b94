#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "alphaidx/conjecture.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/io.hpp"
#include "alphaidx/spectral.hpp"

using namespace alphaidx;

TEST_SUITE("conjecture") {
  TEST_CASE("conjecture 1 on K_3 at the proved alphas") {
    for (double a : {0.0, 0.5}) {
      auto records = scan_conjecture1(make_complete(3), 0, 8, {a});
      CHECK_FALSE(records.empty());
      for (const auto& r : records) {
        CHECK(r.direction == Direction::consistent);
        CHECK(r.p >= r.q + 2);
        CHECK(r.q >= 1);
        CHECK(r.p + r.q <= 8);
      }
    }
  }

  TEST_CASE("conjecture 1 smallest scan shape") {
    auto records = scan_conjecture1(make_complete(2), 0, 4, {0.0});
    REQUIRE(records.size() == 1);
    CHECK(records[0].p == 3);
    CHECK(records[0].q == 1);
  }

  TEST_CASE("records reproduce under the oracle") {
    auto g = make_complete_minus_edge(4);
    for (const auto& r : scan_conjecture1(g, 0, 7, {0.25, 0.75})) {
      CHECK(std::abs(perron_oracle(attach_paths_same_root(g, 0, r.p, r.q), r.alpha).rho - r.lhs) < 1e-9);
      CHECK(std::abs(perron_oracle(attach_paths_same_root(g, 0, r.p - 1, r.q + 1), r.alpha).rho - r.rhs) < 1e-9);
      CHECK(r.in_partial_result_zone == (r.lhs >= kPartialResultThreshold));
    }
  }

  TEST_CASE("conjecture 2 preconditions") {
    CHECK_THROWS_AS(scan_conjecture2(make_complete(2), 0, 1, 8, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(scan_conjecture2(make_cycle(5), 0, 2, 8, {0.0}), std::invalid_argument);
    for (const auto& r : scan_conjecture2(make_cycle(4), 0, 1, 8, {0.0})) CHECK(r.direction == Direction::consistent);
    auto records = scan_conjecture2(make_cycle(4), 0, 1, 8, {0.25, 0.5, 0.75});
    CHECK(records.size() % 3 == 0);
    CHECK_FALSE(records.empty());
  }

  TEST_CASE("question 1 on small trees") {
    CHECK(search_question1_reversal(3, {0.0}).empty());
    auto a = search_question1_reversal(7, {0.0});
    auto b = search_question1_reversal(7, {0.0});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
  }

  TEST_CASE("a known order-6 reversal") {
    // Edges 1-0, 1-2, 1-3, 0-4, 4-5; roots 1 and 4, split (3,1).
    auto t = Graph::from_edges(6, {{1, 0}, {1, 2}, {1, 3}, {0, 4}, {4, 5}});
    const double lhs = perron_oracle(attach_paths_two_roots(t, 1, 4, 3, 1), 0.0).rho;
    const double rhs = perron_oracle(attach_paths_two_roots(t, 1, 4, 2, 2), 0.0).rho;
    CHECK(lhs > rhs + 1e-9);
    bool found = false;
    for (const auto& r : search_question1_reversal(6, {0.0})) {
      if (r.direction == Direction::reversed) {
        CHECK(r.oracle_confirmed);
        found = true;
      }
    }
    CHECK(found);
  }

  TEST_CASE("JSON flags counterexamples") {
    ScanRecord r;
    r.conjecture = "same-root";
    r.direction = Direction::reversed;
    r.conjecture_counterexample = true;
    CHECK(to_json(r)["flag"] == "CONJECTURE COUNTEREXAMPLE");
    r.conjecture_counterexample = false;
    CHECK_FALSE(to_json(r).contains("flag"));
  }

  TEST_CASE("standard corpora") {
    CHECK(standard_conjecture1_corpus().size() == 3 + 4 + 5 + 4);
    for (const auto& base : standard_conjecture2_corpus()) {
      CHECK(base.graph.adjacent(base.u, base.v));
      CHECK(base.graph.degree(base.u) >= 2);
      CHECK(base.graph.degree(base.v) >= 2);
    }
  }
}
