#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "alphaidx/families.hpp"
#include "alphaidx/graph.hpp"
#include "alphaidx/isomorphism.hpp"
#include "alphaidx/metrics.hpp"
#include "alphaidx/random.hpp"

using namespace alphaidx;

namespace {

bool symmetric_irreflexive(const Graph& g) {
  for (int i = 0; i < g.order(); ++i) {
    if (g.adjacent(i, i)) return false;
    for (int j = 0; j < g.order(); ++j) {
      if (g.adjacent(i, j) != g.adjacent(j, i)) return false;
    }
  }
  return true;
}

// Same labeled graph, or isomorphic when small enough to check.
bool canonical_code_or_equal(const Graph& g, const Graph& h) {
  if (g == h) return true;
  return g.order() <= kMaxCanonicalOrder && canonical_code(g) == canonical_code(h);
}

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("from_edges rejects loops and out-of-range endpoints, merges repeats") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(33), std::invalid_argument);
    auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g == make_path(3));
  }

  TEST_CASE("complete graphs") {
    CHECK(make_complete(1).order() == 1);
    CHECK(make_complete(1).edge_count() == 0);
    auto k4 = make_complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.degrees() == std::vector<int>{3, 3, 3, 3});
    CHECK(make_complete(2) == Graph::from_edges(2, {{0, 1}}));
  }

  TEST_CASE("paths") {
    CHECK(make_path(1).edge_count() == 0);
    auto p4 = make_path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});
    CHECK(make_path(2) == make_complete(2));
  }

  TEST_CASE("complete minus an edge") {
    auto g = make_complete_minus_edge(4);
    CHECK(g.edge_count() == 5);
    CHECK(sorted_degrees(g) == std::vector<int>{2, 2, 3, 3});
    CHECK(make_complete_minus_edge(2).edge_count() == 0);
    CHECK(make_complete_minus_edge(5).edge_count() == 9);
    CHECK_FALSE(g.adjacent(0, 1));
  }

  TEST_CASE("bugs") {
    CHECK(make_bug(6, 3, 5).graph.order() == 12);
    CHECK(make_bug(4, 1, 1).graph == make_complete_minus_edge(4));
    auto b = make_bug(4, 2, 2);
    CHECK(b.graph.order() == 6);
    CHECK(diameter(b.graph) == 4);
    CHECK(b.first.vertices.size() == 2);
    CHECK(b.first.root() == 0);
    CHECK(b.second.root() == 1);
    validate_pendent_path(b.graph, b.first);
    validate_pendent_path(b.graph, b.second);
    for (int p = 3; p <= 7; ++p) {
      for (int q = 1; q <= 5; ++q) {
        for (int r = 1; r <= 5; ++r) {
          auto g = make_bug(p, q, r).graph;
          CHECK(g.order() == p + q + r - 2);
          CHECK(diameter(g) == q + r);
          CHECK(symmetric_irreflexive(g));
        }
      }
    }
  }

  TEST_CASE("path-kites") {
    CHECK(make_path_kite(1, 1) == make_complete(2));
    auto g = make_path_kite(2, 3);
    CHECK(g.order() == 5);
    CHECK(clique_number(g) == 3);
    validate_pendent_path(g, PendentPathSpec{{0, 3, 4}});
    for (int p = 1; p <= 5; ++p) {
      for (int q = 1; q <= 5; ++q) CHECK(make_path_kite(p, q).order() == p + q);
    }
    CHECK(is_isomorphic(make_path_kite(3, 2), make_path(5)));
  }

  TEST_CASE("attach_paths_same_root") {
    CHECK(attach_paths_same_root(make_complete(3), 0, 1, 1) == make_complete(3));
    CHECK(is_isomorphic(attach_paths_same_root(make_complete(2), 0, 3, 1), make_path(4)));
    auto g = attach_paths_same_root(make_complete(3), 1, 2, 2);
    CHECK(g.order() == 5);
    CHECK(g.degree(1) == 4);
  }

  TEST_CASE("attach_paths_two_roots") {
    auto k2 = make_complete(2);
    CHECK(is_isomorphic(attach_paths_two_roots(k2, 0, 1, 3, 1), make_path(4)));
    CHECK(is_isomorphic(attach_paths_two_roots(k2, 0, 1, 2, 2), make_path(4)));
    CHECK(attach_paths_two_roots(make_cycle(5), 0, 2, 1, 1) == make_cycle(5));
    for (int p = 4; p <= 6; ++p) {
      for (int q = 1; q <= 4; ++q) {
        for (int r = 1; r <= 4; ++r) {
          auto g = attach_paths_two_roots(make_complete_minus_edge(p), 0, 1, q, r);
          if (g.order() <= kMaxIsomorphismOrder) CHECK(is_isomorphic(g, make_bug(p, q, r).graph));
          CHECK(canonical_code_or_equal(g, make_bug(p, q, r).graph));
        }
      }
    }
    CHECK_THROWS_AS(attach_paths_two_roots(k2, 0, 0, 2, 2), std::invalid_argument);
  }

  TEST_CASE("attach_tree") {
    CHECK(attach_tree(make_complete(3), 0, {-1}) == make_complete(3));
    CHECK(attach_tree(make_cycle(4), 2, {-1, 0, 1, 2}) == attach_paths_same_root(make_cycle(4), 2, 4, 1));
    auto g = attach_tree(make_complete(3), 0, {-1, 0, 0, 0});
    CHECK(g.order() == 6);
    CHECK(g.degree(0) == 5);
    CHECK_THROWS_AS(attach_tree(make_complete(3), 0, {-1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(attach_tree(make_complete(3), 0, {0, -1}), std::invalid_argument);
  }

  TEST_CASE("rotate_edges") {
    // a-b-c-d as 0-1-2-3
    auto h = rotate_edges(make_path(4), RotationMove{1, 2, {0}});
    CHECK(h.degree(2) == 3);
    CHECK(is_isomorphic(h, make_star(4)));
    auto p = rotate_edges(make_star(4), RotationMove{0, 1, {2}});
    CHECK(is_isomorphic(p, make_path(4)));
    CHECK_THROWS_AS(rotate_edges(make_path(4), RotationMove{1, 2, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(rotate_edges(make_path(4), RotationMove{1, 1, {0}}), std::invalid_argument);
  }

  TEST_CASE("rotation followed by its inverse restores the graph") {
    Rng rng(7);
    int tried = 0;
    for (int trial = 0; trial < 400; ++trial) {
      auto g = random_connected_graph(rng, rng.between(4, 9), 0.4);
      int u = rng.between(0, g.order() - 1), v = rng.between(0, g.order() - 1);
      if (u == v) continue;
      std::vector<int> moved;
      for (int w = 0; w < g.order(); ++w) {
        if (w != u && w != v && g.adjacent(u, w) && !g.adjacent(v, w) && rng.unit() < 0.6) moved.push_back(w);
      }
      if (moved.empty()) continue;
      auto h = rotate_edges(g, RotationMove{u, v, moved});
      CHECK(rotate_edges(h, RotationMove{v, u, moved}) == g);
      ++tried;
    }
    CHECK(tried > 50);
  }

  TEST_CASE("pendent path validation") {
    auto b = make_bug(5, 3, 1);
    CHECK_NOTHROW(validate_pendent_path(b.graph, b.first));
    CHECK_NOTHROW(validate_pendent_path(b.graph, PendentPathSpec{{1}}));
    CHECK_THROWS_AS(validate_pendent_path(make_path(4), PendentPathSpec{{0, 1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_pendent_path(make_cycle(5), PendentPathSpec{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_pendent_path(b.graph, PendentPathSpec{{0, 2}}), std::invalid_argument);
  }
}

TEST_SUITE("metrics") {
  TEST_CASE("complete and path metrics") {
    for (int n = 2; n <= 10; ++n) {
      CHECK(diameter(make_complete(n)) == 1);
      CHECK(clique_number(make_complete(n)) == n);
      CHECK(diameter(make_path(n)) == n - 1);
      CHECK(clique_number(make_path(n)) == 2);
    }
    CHECK(clique_number(Graph(3)) == 1);
    CHECK(diameter(make_cycle(7)) == 3);
  }

  TEST_CASE("connectivity and cut vertices") {
    CHECK(is_connected(make_cycle(6)));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK_THROWS_AS(diameter(Graph(2)), std::domain_error);
    CHECK(is_tree(make_star(5)));
    CHECK_FALSE(is_tree(make_cycle(5)));
    auto p = make_path(5);
    CHECK_FALSE(is_cut_vertex(p, 0));
    CHECK(is_cut_vertex(p, 2));
    CHECK_FALSE(is_cut_vertex(make_cycle(5), 3));
    auto b = make_bug(5, 2, 2).graph;
    CHECK(is_cut_vertex(b, 0));
    CHECK(is_cut_vertex(b, 1));
    CHECK_FALSE(is_cut_vertex(b, 2));
  }

  TEST_CASE("clique number against brute force") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = rng.between(1, 10);
      auto g = random_connected_graph(rng, n, rng.unit());
      int best = 0;
      for (unsigned s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i) {
          for (int j = i + 1; j < n && clique; ++j) {
            if ((s >> i & 1) && (s >> j & 1) && !g.adjacent(i, j)) clique = false;
          }
        }
        if (clique) best = std::max(best, std::popcount(s));
      }
      CHECK(clique_number(g) == best);
    }
  }
}
