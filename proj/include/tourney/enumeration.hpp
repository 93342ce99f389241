#pragma once

#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// One representative (its canonical form) per isomorphism class, sorted by
/// canonical code. Built by extending the (n-1)-vertex representatives one
/// vertex at a time and keeping unseen codes. n <= 8.
std::vector<Tournament> enumerate_canonical(int n);

/// Cached view of enumerate_canonical. Thread-safe.
const std::vector<Tournament>& canonical_tournaments(int n);

/// All 2^C(n,2) labeled tournaments, n <= 6. The independent oracle for the
/// canonical enumeration at small n.
std::vector<Tournament> labeled_tournaments(int n);

}  // namespace tourney
