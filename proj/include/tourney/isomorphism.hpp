#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Vertex bijection phi (a-vertex -> b-vertex) with u->v iff phi(u)->phi(v),
/// or nullopt. Deterministic: the lexicographically least witness as the
/// sequence phi(0), phi(1), ...
std::optional<std::vector<int>> isomorphic(const Tournament& a, const Tournament& b);
bool are_isomorphic(const Tournament& a, const Tournament& b);

/// Canonical relabeling of t: among all relabelings, the one whose pair
/// orientation bits, read in the layered order (0,1); (0,2),(1,2);
/// (0,3),(1,3),(2,3); ..., form the lexicographically greatest sequence.
/// Two tournaments have equal canonical forms iff they are isomorphic; a
/// transitive tournament canonicalizes to the standard order (all pair
/// bits 1).
Tournament canonical_form(const Tournament& t);

/// The canonical form's pair-bit string. Its length C(n,2) determines n.
std::string canonical_code(const Tournament& t);

/// First vertex set (in size-|pattern| combination order) inducing a
/// subtournament isomorphic to pattern; nullopt when t has none (always the
/// case when |pattern| > |t|).
std::optional<VertexSet> contains_induced(const Tournament& t, const Tournament& pattern);

}  // namespace tourney
