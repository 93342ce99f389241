#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/families.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

TEST_CASE("bit helpers and pair order") {
  CHECK(pair_index(4, 0, 1) == 0);
  CHECK(pair_index(4, 0, 3) == 2);
  CHECK(pair_index(4, 1, 2) == 3);
  CHECK(pair_index(4, 2, 3) == 5);
  CHECK(full_set(3) == 7u);
  CHECK(popcount(VertexSet{0b1011}) == 3);
  CHECK(lowest_bit(VertexSet{0b1000}) == 3);
  CHECK(set_elements(VertexSet{0b1010}) == std::vector<int>{1, 3});
}

TEST_CASE("constructor starts transitive") {
  Tournament t(5);
  CHECK(t.size() == 5);
  CHECK(is_transitive(t));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) CHECK(t.has_edge(i, j));
  CHECK(t.out_degree(0) == 4);
  CHECK(t.in_degree(0) == 0);
  CHECK(t.out_set(4) == 0u);
  CHECK(t.in_set(4) == full_set(4));
  CHECK_THROWS_AS(Tournament(0), std::invalid_argument);
  CHECK_THROWS_AS(Tournament(17), std::invalid_argument);
}

TEST_CASE("set_edge flips one pair") {
  Tournament t(4);
  t.set_edge(3, 0);
  CHECK(t.has_edge(3, 0));
  CHECK_FALSE(t.has_edge(0, 3));
  CHECK(t.to_line() == "4:110111");
  CHECK_THROWS_AS(t.set_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.set_edge(0, 4), std::invalid_argument);
}

TEST_CASE("line format round trip") {
  Tournament t(4);
  t.set_edge(3, 0);
  CHECK(Tournament::parse("4:110111") == t);
  CHECK(Tournament::parse("4:110111  # trailing comment") == t);
  CHECK(Tournament::parse("4:110111\r") == t);
  CHECK_THROWS_AS(Tournament::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::parse("# only a comment"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::parse("4:11011"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::parse("4:1101112"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::parse("4:11011x"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::parse("110111"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::parse("0:"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::parse("17:" + std::string(136, '1')), std::invalid_argument);

  for (const Tournament& g : canonical_tournaments(5)) CHECK(Tournament::parse(g.to_line()) == g);
}

TEST_CASE("edge_direction") {
  Tournament t = make_family(Family::C3, 3);
  CHECK(edge_direction(t, 0, 1) == Direction::Forward);
  CHECK(edge_direction(t, 1, 0) == Direction::Backward);
  CHECK(edge_direction(t, 2, 0) == Direction::Forward);
  CHECK_THROWS_AS(edge_direction(t, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(edge_direction(t, 0, 3), std::invalid_argument);
}

TEST_CASE("induce relabels in ascending order") {
  Tournament t = make_family(Family::T, 5);
  CHECK(t.to_line() == "5:1100110111");  // anchors the fixture used by CLI tests
  Tournament s = induce(t, bit(0) | bit(2) | bit(3));
  // 0->2 keeps direction, 2->3 keeps, 3->0 wraps around
  CHECK(s.size() == 3);
  CHECK(s.has_edge(0, 1));
  CHECK(s.has_edge(1, 2));
  CHECK(s.has_edge(2, 0));
  CHECK_THROWS_AS(induce(t, VertexSet{0}), std::invalid_argument);
  CHECK_THROWS_AS(induce(t, bit(5)), std::invalid_argument);
  CHECK(induce(t, t.vertices()) == t);
}

TEST_CASE("substitute blows up quotient vertices") {
  Tournament g = make_family(Family::C3, 3);
  std::vector<Tournament> parts = {Tournament(2), Tournament(1), Tournament(3)};
  Tournament r = substitute(g, parts);
  CHECK(r.size() == 6);
  // block {0,1} transitive, block {2}, block {3,4,5} transitive
  CHECK(r.has_edge(0, 1));
  CHECK(r.has_edge(3, 4));
  CHECK(r.has_edge(3, 5));
  CHECK(r.has_edge(4, 5));
  // cross edges follow g: block0 -> block1 -> block2 -> block0
  CHECK(r.has_edge(0, 2));
  CHECK(r.has_edge(1, 2));
  CHECK(r.has_edge(2, 3));
  CHECK(r.has_edge(2, 5));
  CHECK(r.has_edge(3, 0));
  CHECK(r.has_edge(5, 1));
  CHECK_THROWS_AS(substitute(g, {Tournament(1), Tournament(1)}), std::invalid_argument);
  std::vector<Tournament> huge = {Tournament(6), Tournament(6), Tournament(6)};
  CHECK_THROWS_AS(substitute(g, huge), std::invalid_argument);
}

TEST_CASE("strong components agree with reachability oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const Tournament& t : labeled_tournaments(n)) {
      auto got = strong_components(t);
      auto want = oracle::strong_components(t);
      CHECK(got == want);
      // components partition the vertices and dominate left to right
      VertexSet seen = 0;
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK((seen & got[i]) == 0u);
        seen |= got[i];
        for (std::size_t j = i + 1; j < got.size(); ++j)
          for (int u : set_elements(got[i]))
            for (int v : set_elements(got[j])) CHECK(t.has_edge(u, v));
      }
      CHECK(seen == t.vertices());
      CHECK(is_strongly_connected(t) == (got.size() == 1));
    }
}

TEST_CASE("is_transitive matches no-cyclic-triangle definition") {
  for (int n = 1; n <= 5; ++n)
    for (const Tournament& t : labeled_tournaments(n)) {
      bool cyclic = false;
      for (int a = 0; a < n && !cyclic; ++a)
        for (int b = a + 1; b < n && !cyclic; ++b)
          for (int c = b + 1; c < n; ++c)
            if (oracle::prime(induce(t, bit(a) | bit(b) | bit(c)))) {
              cyclic = true;
              break;
            }
      CHECK(is_transitive(t) == !cyclic);
    }
}

TEST_CASE("orderings and backedges") {
  Tournament t = make_family(Family::C3, 3);
  CHECK(is_valid_ordering(t, {0, 1, 2}));
  CHECK_FALSE(is_valid_ordering(t, {0, 1}));
  CHECK_FALSE(is_valid_ordering(t, {0, 1, 1}));
  CHECK_FALSE(is_valid_ordering(t, {0, 1, 3}));

  auto be = backedges(t, {0, 1, 2});
  REQUIRE(be.size() == 1);
  CHECK(be[0] == std::pair<int, int>{2, 0});  // 2->0 spans the whole ordering
  CHECK(max_backedge_length(t, {0, 1, 2}) == 2);
  CHECK(max_backedge_length(Tournament(4), {0, 1, 2, 3}) == 0);
  CHECK_THROWS_AS(backedges(t, {0, 1}), std::invalid_argument);

  Tournament p = make_family(Family::P, 5);
  auto pb = backedges(p, {0, 1, 2, 3, 4});
  REQUIRE(pb.size() == 4);
  CHECK(std::is_sorted(pb.begin(), pb.end()));
  for (auto [j, i] : pb) CHECK(j == i + 1);
}

TEST_CASE("score sequences") {
  CHECK(score_sequence(make_family(Family::T, 5)) == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(score_sequence(Tournament(4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(score_sequence(make_family(Family::D4, 4)) == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("family constructions") {
  CHECK(make_family(Family::I, 4) == Tournament(4));
  CHECK(make_family(Family::C3, 3).to_line() == "3:101");

  Tournament t7 = make_family(Family::T, 7);
  for (int i = 0; i < 7; ++i)
    for (int d = 1; d <= 3; ++d) CHECK(t7.has_edge(i, (i + d) % 7));

  Tournament u7 = make_family(Family::U, 7);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(u7.has_edge(b, a) == t7.has_edge(a, b));
  CHECK(u7.has_edge(3, 4) == t7.has_edge(3, 4));

  Tournament w5 = make_family(Family::W, 5);
  // vertices 0..3 transitive, apex 4 beaten by 1-based-even positions
  CHECK(is_transitive(induce(w5, full_set(4))));
  CHECK(w5.has_edge(4, 0));
  CHECK(w5.has_edge(1, 4));
  CHECK(w5.has_edge(4, 2));
  CHECK(w5.has_edge(3, 4));

  Tournament p4 = make_family(Family::P, 4);
  CHECK(p4.has_edge(1, 0));
  CHECK(p4.has_edge(0, 2));
  CHECK(p4.has_edge(0, 3));
  CHECK(p4.has_edge(2, 1));
  CHECK(p4.has_edge(1, 3));
  CHECK(p4.has_edge(3, 2));

  CHECK(oracle::isomorphic(make_family(Family::P, 2), Tournament(2)));
  CHECK(oracle::isomorphic(make_family(Family::P, 3), make_family(Family::C3, 3)));
  CHECK(oracle::isomorphic(make_family(Family::P, 5), make_family(Family::W, 5)));
  CHECK(oracle::isomorphic(make_family(Family::P, 4), make_family(Family::J, 4)));

  Tournament j5 = make_family(Family::J, 5);
  CHECK(j5.has_edge(4, 0));
  CHECK(j5.has_edge(0, 1));
  Tournament k5 = make_family(Family::K, 5);
  CHECK(k5.has_edge(4, 1));
  CHECK(k5.has_edge(0, 4));
  Tournament ks5 = make_family(Family::Kstar, 5);
  CHECK(ks5.has_edge(3, 0));
  CHECK(ks5.has_edge(0, 4));

  Tournament d4 = make_family(Family::D4, 4);
  Tournament d4s = make_family(Family::D4star, 4);
  CHECK(oracle::isomorphic(d4, d4s) == false);
  // reversing every edge of D4 gives D4star
  Tournament rev(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && d4.has_edge(i, j)) rev.set_edge(j, i);
  CHECK(oracle::isomorphic(rev, d4s));

  CHECK_THROWS_AS(make_family(Family::T, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_family(Family::U, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_family(Family::W, 2), std::invalid_argument);
  CHECK(make_family(Family::T, 1).size() == 1);
  CHECK_THROWS_AS(make_family(Family::Q, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_family(Family::J, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_family(Family::D4, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_family(Family::C3, 4), std::invalid_argument);

  CHECK(family_name(Family::Kstar) == "Kstar");
  CHECK(family_name(Family::T) == "T");
}
