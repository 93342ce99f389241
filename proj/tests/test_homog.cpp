#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/families.hpp"
#include "tourney/homog.hpp"
#include "tourney/isomorphism.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

TEST_CASE("is_homogeneous matches the definition") {
  for (int n = 1; n <= 5; ++n)
    for (const Tournament& t : labeled_tournaments(n))
      for (VertexSet x = 0; x <= t.vertices(); ++x)
        CHECK(is_homogeneous(t, x) == oracle::homogeneous(t, x));
}

TEST_CASE("is_prime matches the definition") {
  for (int n = 1; n <= 5; ++n)
    for (const Tournament& t : labeled_tournaments(n)) CHECK(is_prime(t) == oracle::prime(t));
  CHECK(is_prime(Tournament(1)));
  CHECK(is_prime(Tournament(2)));
  CHECK_FALSE(is_prime(Tournament(3)));
  CHECK(is_prime(make_family(Family::C3, 3)));
}

TEST_CASE("module_closure is the least homogeneous superset") {
  for (const Tournament& t : canonical_tournaments(5))
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) {
        VertexSet seed = bit(a) | bit(b);
        VertexSet got = module_closure(t, seed);
        CHECK((got & seed) == seed);
        CHECK(is_homogeneous(t, got));
        // no homogeneous superset of the seed is smaller
        for (VertexSet x = 0; x <= t.vertices(); ++x)
          if ((x & seed) == seed && oracle::homogeneous(t, x)) CHECK((got & x) == got);
      }
}

TEST_CASE("find_nontrivial_module picks the smallest, then lexicographic") {
  for (int n = 2; n <= 5; ++n)
    for (const Tournament& t : canonical_tournaments(n)) {
      auto got = find_nontrivial_module(t);
      CHECK(got.has_value() == !oracle::prime(t));
      if (!got) continue;
      CHECK(popcount(*got) >= 2);
      CHECK(popcount(*got) < n);
      CHECK(oracle::homogeneous(t, *got));
      for (VertexSet x = 0; x <= t.vertices(); ++x) {
        int k = popcount(x);
        if (k < 2 || k >= n || !oracle::homogeneous(t, x)) continue;
        CHECK(k >= popcount(*got));
        if (k == popcount(*got))
          CHECK(set_elements(*got) <= set_elements(x));
      }
    }
}

TEST_CASE("proper_homogeneous_sets is the full list") {
  for (const Tournament& t : canonical_tournaments(5)) {
    auto got = proper_homogeneous_sets(t);
    std::vector<VertexSet> want;
    for (VertexSet x = 1; x < t.vertices(); ++x)
      if (oracle::homogeneous(t, x)) want.push_back(x);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("decompose and recompose round trip") {
  for (int n = 1; n <= 6; ++n)
    for (const Tournament& t : canonical_tournaments(n)) {
      DecompositionTree tree = decompose(t);
      CHECK(tree.span == t.vertices());
      CHECK(recompose(tree) == t);

      std::function<void(const DecompositionTree&)> walk = [&](const DecompositionTree& node) {
        if (node.leaf()) {
          CHECK(popcount(node.span) == 1);
          return;
        }
        CHECK(node.quotient.size() == (int)node.children.size());
        CHECK(node.quotient.size() >= 2);
        CHECK(is_prime(node.quotient));
        VertexSet seen = 0;
        for (const auto& c : node.children) {
          CHECK((seen & c.span) == 0u);
          seen |= c.span;
        }
        CHECK(seen == node.span);
        // children are substituted blocks: each child's span is homogeneous
        // within the subtournament on node.span
        Tournament sub = induce(t, node.span);
        auto verts = set_elements(node.span);
        for (const auto& c : node.children) {
          VertexSet local = 0;
          for (std::size_t i = 0; i < verts.size(); ++i)
            if (has_bit(c.span, verts[i])) local |= bit((int)i);
          CHECK(oracle::homogeneous(sub, local));
        }
        for (const auto& c : node.children) walk(c);
      };
      walk(tree);
    }
}

TEST_CASE("decompose splits non-strongly-connected inputs at the top") {
  Tournament t = Tournament(4);  // transitive: first strong component is {0}
  DecompositionTree tree = decompose(t);
  REQUIRE(tree.children.size() == 2);
  CHECK(tree.quotient.size() == 2);
  CHECK(tree.children[0].span == bit(0));
  CHECK(tree.children[1].span == (bit(1) | bit(2) | bit(3)));

  std::string text = tree_to_string(tree);
  CHECK(text.find("v1") != std::string::npos);
  CHECK(text.find("v4") != std::string::npos);
}

TEST_CASE("decompose splits strongly connected decomposable inputs by maximal modules") {
  // C_3 blown up at one vertex: maximal proper homogeneous sets are
  // {0,1}, {2}, {3} (blocks of the prime quotient C_3)
  Tournament g = substitute(make_family(Family::C3, 3),
                            {Tournament(2), Tournament(1), Tournament(1)});
  DecompositionTree tree = decompose(g);
  REQUIRE(tree.children.size() == 3);
  CHECK(are_isomorphic(tree.quotient, make_family(Family::C3, 3)));
  CHECK(tree.children[0].span == (bit(0) | bit(1)));
  CHECK(tree.children[1].span == bit(2));
  CHECK(tree.children[2].span == bit(3));
}

TEST_CASE("classify_vertex matches the case split") {
  for (int n = 6; n <= 6; ++n)
    for (const Tournament& t : canonical_tournaments(n))
      for (VertexSet h = 0; h <= t.vertices(); ++h) {
        int k = popcount(h);
        if (k < 3 || k >= n) continue;
        if (!is_prime(induce(t, h))) continue;
        for (int v = 0; v < n; ++v) {
          if (has_bit(h, v)) continue;
          Tournament hv = induce(t, h | bit(v));
          auto verts = set_elements(h | bit(v));
          auto local = [&](VertexSet global) {
            VertexSet s = 0;
            for (std::size_t i = 0; i < verts.size(); ++i)
              if (has_bit(global, verts[i])) s |= bit((int)i);
            return s;
          };
          bool ext = oracle::prime(hv);
          bool z = oracle::homogeneous(hv, local(h));
          VertexClass got = classify_vertex(t, h, v);
          if (ext) {
            CHECK(got.kind == VertexClassKind::Ext);
          } else if (z) {
            CHECK(got.kind == VertexClassKind::Z);
          } else {
            CHECK(got.kind == VertexClassKind::Vx);
            CHECK(has_bit(h, got.anchor));
            CHECK(oracle::homogeneous(hv, local(bit(got.anchor) | bit(v))));
          }
        }
      }

  Tournament w5 = make_family(Family::W, 5);
  CHECK_THROWS_AS(classify_vertex(w5, bit(0) | bit(1), 3), std::invalid_argument);
  CHECK_THROWS_AS(classify_vertex(w5, w5.vertices(), 2), std::invalid_argument);
}
