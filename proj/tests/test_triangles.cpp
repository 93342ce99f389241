#include <algorithm>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/families.hpp"
#include "tourney/homog.hpp"
#include "tourney/triangles.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

TEST_CASE("cyclic_triangles lists cyclic triples in lexicographic order") {
  CHECK(cyclic_triangles(Tournament(6)).empty());

  auto one = cyclic_triangles(make_family(Family::C3, 3));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Triangle{0, 1, 2});

  Tournament t5 = make_family(Family::T, 5);
  auto list = cyclic_triangles(t5);
  CHECK(list.size() == 5);  // 10 triples minus 5 transitive ones in the rotation
  for (std::size_t i = 1; i < list.size(); ++i) {
    auto key = [](const Triangle& x) { return std::tuple(x.a, x.b, x.c); };
    CHECK(key(list[i - 1]) < key(list[i]));
  }
  for (const Triangle& x : list) {
    VertexSet s = bit(x.a) | bit(x.b) | bit(x.c);
    CHECK(oracle::prime(induce(t5, s)));
  }

  for (const Tournament& t : canonical_tournaments(5)) {
    std::size_t cyclic = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        for (int c = b + 1; c < 5; ++c)
          if (oracle::prime(induce(t, bit(a) | bit(b) | bit(c)))) ++cyclic;
    CHECK(cyclic_triangles(t).size() == cyclic);
  }
}

TEST_CASE("triangle_components groups triangles that chain on shared pairs") {
  // blowing up one vertex of a 3-cycle isolates the inner triangle
  Tournament g = substitute(make_family(Family::C3, 3),
                            {make_family(Family::C3, 3), Tournament(1), Tournament(1)});
  CHECK(is_strongly_connected(g));
  auto comps = triangle_components(g);
  CHECK(comps.size() >= 2);
  CHECK_FALSE(is_triangle_connected(g));

  std::size_t total = 0;
  for (const auto& comp : comps) total += comp.size();
  CHECK(total == cyclic_triangles(g).size());

  // within a component, consecutive discovery keeps the two-vertex overlap
  // property reachable; across components no pair of triangles overlaps in
  // two vertices
  auto mask = [](const Triangle& x) { return bit(x.a) | bit(x.b) | bit(x.c); };
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      for (const Triangle& x : comps[i])
        for (const Triangle& y : comps[j]) CHECK(popcount(mask(x) & mask(y)) < 2);
}

TEST_CASE("is_triangle_connected matches the reachability oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const Tournament& t : labeled_tournaments(n))
      CHECK(is_triangle_connected(t) == oracle::triangle_connected(t));

  CHECK(is_triangle_connected(Tournament(1)));
  CHECK_FALSE(is_triangle_connected(Tournament(2)));  // not strongly connected
  CHECK(is_triangle_connected(make_family(Family::C3, 3)));
  CHECK(is_triangle_connected(make_family(Family::T, 7)));
  CHECK(is_triangle_connected(make_family(Family::U, 7)));
  CHECK(is_triangle_connected(make_family(Family::W, 7)));
}

TEST_CASE("every vertex of a strongly connected tournament lies in a cyclic triangle") {
  for (int n = 3; n <= 6; ++n)
    for (const Tournament& t : canonical_tournaments(n)) {
      if (!is_strongly_connected(t)) continue;
      VertexSet covered = 0;
      for (const Triangle& x : cyclic_triangles(t)) covered |= bit(x.a) | bit(x.b) | bit(x.c);
      CHECK(covered == t.vertices());
    }
}
