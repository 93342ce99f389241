#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tourney/families.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

enum class WeaveDir : std::uint8_t { F, B };

/// Direction of the two parity classes of a weave ordering, indexed by the
/// 1-based position parity (so odd_dir governs positions 1,3,5,...).
struct WeaveType {
  WeaveDir odd_dir, even_dir;
  bool operator==(const WeaveType&) const = default;
};

inline constexpr WeaveType kWeaveFF{WeaveDir::F, WeaveDir::F};
inline constexpr WeaveType kWeaveFB{WeaveDir::F, WeaveDir::B};
inline constexpr WeaveType kWeaveBF{WeaveDir::B, WeaveDir::F};
inline constexpr WeaveType kWeaveBB{WeaveDir::B, WeaveDir::B};

/// All weave types realized by o: cross-parity pairs must point forward, and
/// each parity class must be uniformly forward or backward. Empty when o is
/// not a weave ordering; several types when a parity class has at most one
/// pair. Listed in FF, FB, BF, BB order.
std::vector<WeaveType> classify_weave(const Tournament& t, const VertexOrdering& o);

/// The weave with 1-based positions as vertex ids (a weave ordering
/// determines the tournament).
Tournament make_weave(int n, WeaveType type);

/// make_weave(n, type) plus an apex vertex (index n) that beats the odd
/// 1-based positions and loses to the even ones.
Tournament make_weave_with_apex(int n, WeaveType type);

/// Isomorphism test against the T/U/W constructors (odd n only). Degenerate
/// coincidences resolve in T < U < W order, so C_3 reports (T, 3).
std::optional<std::pair<Family, int>> recognize_TUW(const Tournament& t);

/// Cross-check route: families witnessed by some apex vertex v whose removal
/// leaves an even weave with the right v-pattern (BB -> T, FB/BF -> U,
/// FF -> W). Returns the set found, in T, U, W order.
std::vector<Family> recognize_TUW_weave(const Tournament& t);

/// First pair (u,v), u < v, with h + {u,v} inducing a prime subtournament.
/// Requires g prime, h inducing a prime subtournament, 3 <= |h| <= n-2.
/// No pair would contradict two-vertex growth, so that throws InternalError.
std::pair<int, int> grow_by_two(const Tournament& g, VertexSet h);

/// First 5-subset (combination order) inducing a prime subtournament of a
/// prime g with >= 5 vertices; InternalError if none exists.
VertexSet find_prime5(const Tournament& g);

/// First (|h|+1)-subset inducing a prime subtournament that contains an
/// induced copy of induce(g,h) (the copy need not extend h itself).
/// Requires g prime and not a T/U/W, h inducing a prime subtournament,
/// 5 <= |h| <= n-1. InternalError if no subset qualifies.
VertexSet grow_by_one(const Tournament& g, VertexSet h);

/// First (n-k)-subset inducing a prime subtournament, k in {1,2}; nullopt
/// when none exists (which is meaningful: T/U/W admit no prime (n-1)-subset).
std::optional<VertexSet> shrink_prime(const Tournament& g, int k);

/// Witness that t has no induced D4: t = T_r(B_1,...,B_r) with transitive
/// blocks, optionally followed by a trailing transitive part ("tail"), i.e.
/// I_2(T_r(...), I_tail). tail == 0 distinguishes the first form; transitive
/// inputs report r = 1 with a single block. When the tail is nonempty it is
/// maximal: no further vertex of the front part can be peeled onto it.
struct D4Structure {
  int r = 1;
  std::vector<VertexSet> blocks;  // in T_r vertex order
  VertexSet tail = 0;
};

struct D4Classification {
  std::optional<D4Structure> structure;
  VertexSet d4_witness = 0;  // induces a D4; meaningful iff !structure
};

D4Classification d4_classify(const Tournament& t);

/// Full edge-wise validation of a D4Structure against t, including the
/// determinism rules (r = 1 exactly for transitive t, maximal tail).
bool validate_d4_structure(const Tournament& t, const D4Structure& s);

}  // namespace tourney
