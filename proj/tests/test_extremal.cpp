#include <doctest.h>

#include <cmath>

#include "alphaidx/enumerate.hpp"
#include "alphaidx/errors.hpp"
#include "alphaidx/extremal.hpp"
#include "alphaidx/families.hpp"
#include "alphaidx/io.hpp"
#include "alphaidx/isomorphism.hpp"
#include "alphaidx/spectral.hpp"

using namespace alphaidx;

TEST_SUITE("extremal") {
  TEST_CASE("rotation on P_4 gives the star") {
    for (double a : {0.0, 0.5}) {
      auto r = verify_rotation(make_path(4), RotationMove{1, 2, {0}}, a);
      CHECK(r.passed());
      if (a == 0.0) {
        CHECK(std::abs(r.lhs - std::sqrt(3.0)) < 1e-10);
        CHECK(std::abs(r.rhs - (1 + std::sqrt(5.0)) / 2) < 1e-10);
      }
    }
  }

  TEST_CASE("rotation hypothesis failure is inapplicable, not a failure") {
    auto r = verify_rotation(make_star(4), RotationMove{0, 1, {2}}, 0.0);
    CHECK(r.verdict == Verdict::inapplicable);
  }

  TEST_CASE("rotation reproduces the flattening step") {
    // G_{p,q}(u) with paths u=v_1..v_p and u, w_2..w_q: moving {w_2, u} to
    // {w_2, v_p} turns it into G_{p+q-1,1}(u), so the reverse move increases rho.
    auto base = make_complete(3);
    const int p = 4, q = 3;
    auto g = attach_paths_same_root(base, 0, p, q);
    auto flat = attach_paths_same_root(base, 0, p + q - 1, 1);
    // New vertices: 3,4,5 on the first path (v_2..v_4), 6,7 on the second.
    auto long_path = rotate_edges(g, RotationMove{0, 5, {6}});
    CHECK(is_isomorphic(long_path, flat));
    for (double a : {0.0, 0.25, 0.5, 0.75}) {
      auto r = verify_rotation(long_path, RotationMove{5, 0, {6}}, a);
      if (r.verdict == Verdict::inapplicable) continue;
      CHECK(r.passed());
      CHECK(std::abs(r.lhs - verify_flatten_same_root(base, 0, p, q, a).lhs) < 1e-12);
    }
  }

  TEST_CASE("bug balancing") {
    for (double a : {0.0, 0.3, 0.5, 0.8}) {
      auto scan = scan_bug_balance(4, 4, a);
      REQUIRE(scan.steps.size() == 1);
      CHECK(scan.steps[0].passed());
    }
    auto scan = scan_bug_balance(6, 8, 0.0);
    CHECK(scan.steps.size() == 3);
    for (const auto& r : scan.steps) CHECK(r.passed());
    for (const auto& r : scan.balanced_max) CHECK(r.passed());
    CHECK(scan_bug_balance(5, 2, 0.0).steps.empty());
    CHECK_THROWS_AS(scan_bug_balance(3, 5, 0.0), std::invalid_argument);
  }

  TEST_CASE("diameter theorem examples") {
    auto r = verify_diameter_theorem(6, 4, 0.0);
    CHECK(r.verified());
    CHECK(r.instances_checked == 112);
    REQUIRE(r.extremal_witness);
    CHECK(is_isomorphic(graph6_decode(*r.extremal_witness), make_bug(4, 2, 2).graph));
    auto s = verify_diameter_theorem(5, 4, 0.5);
    CHECK(s.verified());
    CHECK(is_isomorphic(graph6_decode(*s.extremal_witness), make_bug(3, 2, 2).graph));
    auto t = verify_diameter_theorem(4, 1, 0.25);
    CHECK(t.verified());
    CHECK(graph6_decode(*t.extremal_witness) == make_complete(4));
    CHECK_THROWS_AS(verify_diameter_theorem(8, 3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(verify_diameter_theorem(6, 6, 0.0), std::invalid_argument);
  }

  TEST_CASE("clique theorem examples") {
    auto r = verify_clique_theorem(6, 3, 0.0);
    CHECK(r.verified());
    CHECK(is_isomorphic(graph6_decode(*r.extremal_witness), make_path_kite(3, 3)));
    for (double a : {0.0, 0.25, 0.5, 0.75}) {
      auto s = verify_clique_theorem(5, 2, a);
      CHECK(s.verified());
      CHECK(is_isomorphic(graph6_decode(*s.extremal_witness), make_path(5)));
    }
    auto t = verify_clique_theorem(5, 5, 0.5);
    CHECK(t.verified());
    CHECK(t.instances_qualifying == 1);
  }

  TEST_CASE("shared class lists give the same reports") {
    auto classes = enumerate_connected(6, EnumerationOptions{true});
    VerifyOptions shared{kEpsilonStrict, false, 1, &classes};
    auto a = verify_diameter_theorem(6, 3, 0.25, shared);
    auto b = verify_diameter_theorem(6, 3, 0.25);
    CHECK(a.instances_qualifying == b.instances_qualifying);
    CHECK(a.extremal_witness == b.extremal_witness);
    CHECK(*a.min_margin == doctest::Approx(*b.min_margin).epsilon(1e-14));
  }

  TEST_CASE("path is the unique minimiser") {
    auto r = verify_path_minimum(5, 0.0);
    CHECK(r.verified());
    CHECK(std::abs(perron(graph6_decode(*r.extremal_witness), 0.0).rho - std::sqrt(3.0)) < 1e-10);
    CHECK(verify_path_minimum(3, 0.5).instances_checked == 2);
    auto s = verify_path_minimum(6, 0.75);
    CHECK(s.verified());
    CHECK(is_isomorphic(graph6_decode(*s.extremal_witness), make_path(6)));
  }

  TEST_CASE("flattening same-root paths") {
    CHECK(verify_flatten_same_root(make_complete(3), 0, 3, 2, 0.0).passed());
    auto eq = verify_flatten_same_root(make_complete(3), 1, 4, 1, 0.0);
    CHECK(eq.passed());
    CHECK(eq.margin == 0.0);
    CHECK(verify_flatten_same_root(make_complete_minus_edge(4), 2, 2, 2, 0.5).passed());
    CHECK_THROWS_AS(verify_flatten_same_root(make_path(3), 0, 2, 2, 0.0), HypothesisError);
  }

  TEST_CASE("tree flattening") {
    auto r = verify_tree_flatten(make_complete(3), 0, 4, 0.0);
    CHECK(r.verified());
    CHECK(r.instances_checked == 4);
    CHECK(*r.min_margin > 0.0);
    auto star = attach_tree(make_complete(3), 0, {-1, 0, 0, 0});
    auto path = attach_paths_same_root(make_complete(3), 0, 4, 1);
    CHECK(perron(star, 0.0).rho > perron(path, 0.0).rho + 1e-9);
    auto two = verify_tree_flatten(make_complete(3), 0, 2, 0.0);
    CHECK(two.verified());
    CHECK(two.instances_checked == 1);
    CHECK(verify_tree_flatten(make_complete(4), 1, 4, 0.5).verified());
  }
}
