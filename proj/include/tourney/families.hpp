#pragma once

#include <string>

#include "tourney/tournament.hpp"

namespace tourney {

// Named construction families. T/U/W take odd n; the circle family T_n on
// n = 2k+1 vertices has v_i -> v_j iff j is one of the k successors of i
// mod n, U_n reverses the edges inside the first k vertices of T_n, and W_n
// is a transitive (n-1)-set plus one vertex beaten by the even positions and
// beating the odd ones. P_n reverses every consecutive pair of a transitive
// order; Q_n additionally reverses (1, n-1) and (n-2, n) instead of the last
// two consecutive pairs. J_n / K_n / Kstar_n are transitive orders with a
// single reversed pair: (1,n), (2,n), (1,n-1) respectively. D4 is one vertex
// dominating a 3-cycle, D4star its reverse.
enum class Family { I, T, U, W, P, Q, J, K, Kstar, D4, D4star, C3 };

struct FamilyTag {
  Family kind;
  int n;
};

/// Throws std::invalid_argument when n is out of range for the family
/// (parity for T/U/W, n >= 3 for Q/J/K/Kstar, fixed sizes for D4/C3).
Tournament make_family(Family kind, int n);
inline Tournament make_family(FamilyTag tag) { return make_family(tag.kind, tag.n); }

std::string family_name(Family kind);

}  // namespace tourney
