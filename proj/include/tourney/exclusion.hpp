#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Single-backedge patterns: a transitive order v_1..v_m with exactly one
/// reversed pair: (1,m) for J, (2,m) for K, (1,m-1) for Kstar.
enum class Pattern { J, K, Kstar };

/// First vertex set inducing the size-m pattern, or nullopt. Exploits the
/// pattern shape (transitive spine plus one reversed pair) instead of generic
/// subgraph isomorphism. m >= 3.
std::optional<VertexSet> has_pattern(const Tournament& t, Pattern p, int m);

/// Largest m >= 3 with the pattern present; 0 when none is.
int max_pattern_size(const Tournament& t, Pattern p);

/// Maximum-size transitive vertex subset (exact, branch and bound), and the
/// restriction to an allowed set. Deterministic witness.
VertexSet max_transitive_subset(const Tournament& t);
VertexSet max_transitive_subset_in(const Tournament& t, VertexSet allowed);
int max_transitive_size_in(const Tournament& t, VertexSet allowed);

/// 10 * n * 2^(2n), the guaranteed backedge-length bound for J_n-free
/// tournaments.
std::int64_t backedge_length_bound(int n);

struct BoundedOrdering {
  VertexOrdering order;
  int max_backedge = 0;  // achieved value; always <= backedge_length_bound(n)
};

/// For a J_n-free tournament: a maximum transitive subset u_1..u_s
/// interleaved with buckets X_a = {v : min out-index a_v == a}. Asserts the
/// construction's inequalities (A,B nonempty, a_v < b_v, b_v - a_v < 2n,
/// |X_a| <= 2^(2n), achieved length <= bound); any failure throws
/// InternalError. J_n present -> std::invalid_argument.
BoundedOrdering bounded_backedge_ordering(const Tournament& t, int pattern_size);

/// Given an ordering of t whose backedges all have length <= k, reports
/// whether t is J_{10k}-free (the converse direction's claim). Ordering with
/// a longer backedge -> std::invalid_argument.
bool check_converse_J(const Tournament& t, const VertexOrdering& o, int k);

/// t as T_r(H_1,...,H_r) with r maximal (r = 1 when the top quotient of the
/// modular decomposition is not a T_r, r >= 3): parts in T_r vertex order
/// plus the largest J-pattern size found inside each part.
struct StructureDecomposition {
  int r = 1;
  std::vector<VertexSet> parts;
  std::vector<int> part_max_j;  // 0 = no J_3

  /// Smallest k with every part J_k-free (>= 3).
  int j_freeness() const;
};

StructureDecomposition kn_free_decompose(const Tournament& t);

/// Construction witness for K_n/Kstar_n-free tournaments. Either the r = 1
/// short-circuit (|V| < 2^m_config, or no vertex falls outside the spine
/// block M), or the full two-step structure: M ordered spine-with-buckets,
/// the rest N split into N_1..N_p by the nested out-sets A_w, and M cut into
/// M_1..M_{p+1} along those sets. All block relations are verified; any
/// failed step (a proof claim not holding) throws InternalError.
struct NoKnWitness {
  bool trivial = true;               // r = 1 report
  VertexOrdering m_order;            // spine ordering of M (when computed)
  std::vector<VertexSet> m_parts;    // M_1..M_{p+1}; {V} when trivial
  std::vector<VertexSet> n_parts;    // N_1..N_p; empty when trivial
};

/// pattern present (K or Kstar of pattern_size) -> std::invalid_argument.
NoKnWitness noKn_construct(const Tournament& t, int pattern_size, int m_config = 4);

/// Verifies parts is a T_r substitution of t with every part J_k-free
/// (violations -> std::invalid_argument), then reports whether t has neither
/// K_{k+1} nor Kstar_{k+1}.
bool check_converse_K(const Tournament& t, int r, const std::vector<VertexSet>& parts, int k);

}  // namespace tourney
