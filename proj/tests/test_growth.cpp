#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/families.hpp"
#include "tourney/growth.hpp"
#include "tourney/homog.hpp"
#include "tourney/isomorphism.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

namespace {

VertexOrdering identity_ordering(int n) {
  VertexOrdering o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

std::optional<VertexSet> first_cyclic_triple(const Tournament& t) {
  for (int a = 0; a < t.size(); ++a)
    for (int b = a + 1; b < t.size(); ++b)
      for (int c = b + 1; c < t.size(); ++c) {
        VertexSet s = bit(a) | bit(b) | bit(c);
        if (is_prime(induce(t, s))) return s;
      }
  return std::nullopt;
}

}  // namespace

TEST_CASE("make_weave edge rules") {
  Tournament w = make_weave(6, kWeaveFB);
  // odd 1-based positions {1,3,5} run forward
  CHECK(w.has_edge(0, 2));
  CHECK(w.has_edge(0, 4));
  CHECK(w.has_edge(2, 4));
  // even positions {2,4,6} run backward
  CHECK(w.has_edge(3, 1));
  CHECK(w.has_edge(5, 1));
  CHECK(w.has_edge(5, 3));
  // cross-parity pairs always point forward
  CHECK(w.has_edge(0, 1));
  CHECK(w.has_edge(1, 2));
  CHECK(w.has_edge(0, 3));
  CHECK(w.has_edge(2, 5));
}

TEST_CASE("classify_weave reports every realized type") {
  const WeaveType kinds[4] = {kWeaveFF, kWeaveFB, kWeaveBF, kWeaveBB};
  for (int n = 1; n <= 8; ++n)
    for (WeaveType ty : kinds) {
      Tournament w = make_weave(n, ty);
      auto types = classify_weave(w, identity_ordering(n));
      CHECK(std::find(types.begin(), types.end(), ty) != types.end());
      if (n >= 4) CHECK(types.size() == 1);  // both parity classes carry a pair
    }
  // a parity class with at most one pair leaves its direction free
  auto two = classify_weave(Tournament(2), identity_ordering(2));
  CHECK(two.size() == 4);

  Tournament c3 = make_family(Family::C3, 3);
  auto c3types = classify_weave(c3, {0, 1, 2});
  REQUIRE(c3types.size() == 2);
  CHECK(c3types[0] == kWeaveBF);
  CHECK(c3types[1] == kWeaveBB);
  CHECK(classify_weave(c3, {0, 2, 1}).empty());

  CHECK_THROWS_AS(classify_weave(c3, {0, 1}), std::invalid_argument);
}

TEST_CASE("weaves and apex extensions hit the named families") {
  CHECK(are_isomorphic(make_weave(5, kWeaveBB), make_family(Family::T, 5)));
  CHECK(are_isomorphic(make_weave(5, kWeaveBF), make_family(Family::U, 5)));
  CHECK(are_isomorphic(make_weave(7, kWeaveBB), make_family(Family::T, 7)));
  CHECK(are_isomorphic(make_weave(7, kWeaveBF), make_family(Family::U, 7)));

  CHECK(are_isomorphic(make_weave_with_apex(4, kWeaveBB), make_family(Family::T, 5)));
  CHECK(are_isomorphic(make_weave_with_apex(4, kWeaveFB), make_family(Family::U, 5)));
  CHECK(are_isomorphic(make_weave_with_apex(4, kWeaveBF), make_family(Family::U, 5)));
  CHECK(are_isomorphic(make_weave_with_apex(4, kWeaveFF), make_family(Family::W, 5)));
  CHECK(are_isomorphic(make_weave_with_apex(6, kWeaveFF), make_family(Family::W, 7)));

  Tournament a = make_weave_with_apex(4, kWeaveFF);
  CHECK(a.size() == 5);
  CHECK(a.has_edge(4, 0));
  CHECK(a.has_edge(1, 4));
  CHECK(a.has_edge(4, 2));
  CHECK(a.has_edge(3, 4));
}

TEST_CASE("recognize_TUW") {
  using P = std::pair<Family, int>;
  CHECK(recognize_TUW(make_family(Family::T, 5)) == P{Family::T, 5});
  CHECK(recognize_TUW(make_family(Family::U, 5)) == P{Family::U, 5});
  CHECK(recognize_TUW(make_family(Family::W, 5)) == P{Family::W, 5});
  CHECK(recognize_TUW(make_family(Family::T, 7)) == P{Family::T, 7});
  CHECK(recognize_TUW(make_family(Family::U, 7)) == P{Family::U, 7});
  CHECK(recognize_TUW(make_family(Family::W, 7)) == P{Family::W, 7});
  CHECK(recognize_TUW(make_family(Family::C3, 3)) == P{Family::T, 3});
  CHECK_FALSE(recognize_TUW(Tournament(4)).has_value());
  CHECK_FALSE(recognize_TUW(make_family(Family::P, 7)).has_value());

  // invariance under relabeling
  Tournament u7 = make_family(Family::U, 7);
  Tournament reversed_labels(7);
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v)
      if (u != v && u7.has_edge(u, v)) reversed_labels.set_edge(6 - u, 6 - v);
  CHECK(recognize_TUW(reversed_labels) == P{Family::U, 7});
}

TEST_CASE("recognize_TUW_weave cross-checks the direct recognizer") {
  CHECK(recognize_TUW_weave(make_family(Family::T, 7)) == std::vector<Family>{Family::T});
  CHECK(recognize_TUW_weave(make_family(Family::U, 7)) == std::vector<Family>{Family::U});
  CHECK(recognize_TUW_weave(make_family(Family::W, 7)) == std::vector<Family>{Family::W});
  CHECK(recognize_TUW_weave(make_family(Family::C3, 3)) ==
        std::vector<Family>{Family::T, Family::U, Family::W});
  CHECK(recognize_TUW_weave(make_family(Family::P, 7)).empty());
  CHECK(recognize_TUW_weave(Tournament(5)).empty());
}

TEST_CASE("grow_by_two returns the first working pair") {
  Tournament t5 = make_family(Family::T, 5);
  auto p = grow_by_two(t5, bit(0) | bit(2) | bit(3));
  CHECK(p == std::pair<int, int>{1, 4});

  int tested = 0;
  for (const Tournament& t : canonical_tournaments(7)) {
    if (!is_prime(t)) continue;
    auto h = first_cyclic_triple(t);
    if (!h) continue;
    auto got = grow_by_two(t, *h);
    bool found = false;
    for (int u = 0; u < 7 && !found; ++u) {
      if (has_bit(*h, u)) continue;
      for (int v = u + 1; v < 7; ++v) {
        if (has_bit(*h, v)) continue;
        if (is_prime(induce(t, *h | bit(u) | bit(v)))) {
          CHECK(got == std::pair<int, int>{u, v});
          found = true;
          break;
        }
      }
    }
    CHECK(found);
    if (++tested == 25) break;
  }
  CHECK(tested == 25);

  CHECK_THROWS_AS(grow_by_two(Tournament(6), bit(0) | bit(1) | bit(2)), std::invalid_argument);
  CHECK_THROWS_AS(grow_by_two(t5, bit(0) | bit(1) | bit(2)), std::invalid_argument);
  CHECK_THROWS_AS(grow_by_two(t5, bit(0) | bit(1) | bit(2) | bit(3)), std::invalid_argument);
}

TEST_CASE("find_prime5 returns the first prime 5-subset") {
  int tested = 0;
  for (const Tournament& t : canonical_tournaments(7)) {
    if (!is_prime(t)) continue;
    VertexSet got = find_prime5(t);
    CHECK(popcount(got) == 5);
    CHECK(is_prime(induce(t, got)));
    // nothing earlier in combination order works
    std::vector<VertexSet> earlier;
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        for (int c = b + 1; c < 7; ++c)
          for (int d = c + 1; d < 7; ++d)
            for (int e = d + 1; e < 7; ++e) {
              VertexSet s = bit(a) | bit(b) | bit(c) | bit(d) | bit(e);
              if (set_elements(s) < set_elements(got)) CHECK_FALSE(is_prime(induce(t, s)));
            }
    if (++tested == 15) break;
  }
  CHECK(tested == 15);
  CHECK_THROWS_AS(find_prime5(Tournament(7)), std::invalid_argument);
  CHECK_THROWS_AS(find_prime5(make_family(Family::C3, 3)), std::invalid_argument);
}

TEST_CASE("grow_by_one grows a prime subtournament by one vertex") {
  int tested = 0;
  for (const Tournament& t : canonical_tournaments(7)) {
    if (!is_prime(t) || recognize_TUW(t)) continue;
    VertexSet h = find_prime5(t);
    VertexSet s = grow_by_one(t, h);
    CHECK(popcount(s) == 6);
    CHECK(is_prime(induce(t, s)));
    CHECK(contains_induced(induce(t, s), induce(t, h)).has_value());
    if (++tested == 15) break;
  }
  CHECK(tested == 15);

  CHECK_THROWS_AS(grow_by_one(make_family(Family::T, 7), full_set(5)),
                  std::invalid_argument);  // T/U/W excluded
  CHECK_THROWS_AS(grow_by_one(Tournament(7), full_set(5)), std::invalid_argument);
}

TEST_CASE("shrink_prime") {
  for (Family f : {Family::T, Family::U, Family::W}) {
    Tournament t = make_family(f, 7);
    CHECK_FALSE(shrink_prime(t, 1).has_value());
    auto s = shrink_prime(t, 2);
    REQUIRE(s.has_value());
    CHECK(popcount(*s) == 5);
    CHECK(is_prime(induce(t, *s)));
  }
  for (const Tournament& t : canonical_tournaments(6)) {
    if (!is_prime(t) || t.size() < 3) continue;
    auto s = shrink_prime(t, 1);
    REQUIRE(s.has_value());
    CHECK(popcount(*s) == 5);
    CHECK(is_prime(induce(t, *s)));
  }
  CHECK_THROWS_AS(shrink_prime(make_family(Family::T, 7), 3), std::invalid_argument);
}

TEST_CASE("d4_classify structures") {
  auto flat = d4_classify(Tournament(5));
  REQUIRE(flat.structure.has_value());
  CHECK(flat.structure->r == 1);
  CHECK(flat.structure->blocks.size() == 1);
  CHECK(flat.structure->tail == 0u);
  CHECK(validate_d4_structure(Tournament(5), *flat.structure));

  Tournament t5 = make_family(Family::T, 5);
  auto circ = d4_classify(t5);
  REQUIRE(circ.structure.has_value());
  CHECK(circ.structure->r == 5);
  CHECK(circ.structure->tail == 0u);
  for (VertexSet b : circ.structure->blocks) CHECK(popcount(b) == 1);
  CHECK(validate_d4_structure(t5, *circ.structure));

  Tournament mixed = substitute(Tournament(2), {make_family(Family::C3, 3), Tournament(2)});
  auto mix = d4_classify(mixed);
  REQUIRE(mix.structure.has_value());
  CHECK(mix.structure->r == 3);
  CHECK(mix.structure->tail == (bit(3) | bit(4)));
  CHECK(validate_d4_structure(mixed, *mix.structure));

  auto dom = d4_classify(make_family(Family::D4, 4));
  CHECK_FALSE(dom.structure.has_value());
  CHECK(dom.d4_witness == full_set(4));

  for (const Tournament& t : canonical_tournaments(6)) {
    auto c = d4_classify(t);
    bool has_d4 = oracle::contains(t, make_family(Family::D4, 4));
    CHECK(c.structure.has_value() == !has_d4);
    if (c.structure) {
      CHECK(validate_d4_structure(t, *c.structure));
    } else {
      CHECK(popcount(c.d4_witness) == 4);
      CHECK(oracle::isomorphic(induce(t, c.d4_witness), make_family(Family::D4, 4)));
    }
  }
}

TEST_CASE("validate_d4_structure rejects tampered witnesses") {
  Tournament mixed = substitute(Tournament(2), {make_family(Family::C3, 3), Tournament(2)});
  auto good = *d4_classify(mixed).structure;

  D4Structure no_tail = good;
  no_tail.tail = 0;
  no_tail.blocks.push_back(bit(3));
  no_tail.blocks.push_back(bit(4));
  no_tail.r = 5;
  CHECK_FALSE(validate_d4_structure(mixed, no_tail));

  D4Structure flat;
  flat.r = 1;
  flat.blocks = {make_family(Family::C3, 3).vertices()};
  CHECK_FALSE(validate_d4_structure(make_family(Family::C3, 3), flat));

  D4Structure wrong = good;
  wrong.r = 1;
  CHECK_FALSE(validate_d4_structure(mixed, wrong));
}
