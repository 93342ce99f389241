#pragma once

#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

struct Triangle {
  int a, b, c;  // a < b < c
  bool operator==(const Triangle&) const = default;
};

/// Cyclically oriented 3-subsets, in lexicographic order.
std::vector<Triangle> cyclic_triangles(const Tournament& t);

/// Connected components of the graph whose nodes are the cyclic triangles,
/// adjacent when they share exactly two vertices. Components are ordered by
/// their first triangle; triangles inside a component stay in lexicographic
/// order.
std::vector<std::vector<Triangle>> triangle_components(const Tournament& t);

/// Strongly connected and all cyclic triangles in one component (a
/// triangle-free strongly connected tournament has at most 2 vertices, so
/// zero triangles reduce this to strong connectivity).
bool is_triangle_connected(const Tournament& t);

}  // namespace tourney
