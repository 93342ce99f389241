#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// An ordering is matching when its backedges form a matching: every vertex
/// is an endpoint of at most one backedge.
bool is_matching_ordering(const Tournament& t, const VertexOrdering& o);

/// Position-constrained backtracking: a vertex of indegree b can only sit at
/// 1-based position b (head of a backedge), b+1 (untouched) or b+2 (tail).
std::optional<VertexOrdering> find_matching_ordering(const Tournament& t);
std::uint64_t count_matching_orderings(const Tournament& t);
std::vector<VertexOrdering> enumerate_matching_orderings(const Tournament& t);

struct MatchingReport {
  std::uint64_t count = 0;
  std::vector<VertexOrdering> witnesses;  // first max_witnesses, search order
};
MatchingReport matching_report(const Tournament& t, std::size_t max_witnesses);

// Permutations of positions {0..size-1}, as image vectors. Juxtaposition in
// identities below composes left factor first: (pq)(x) = q(p(x)).
//
// sigma_perm: the cycle (b b+2 ... a a-1 a-3 ... b+1) on an interval, the
// shape a second matching ordering induces on a block. tau_perm (size 4
// only): (0 2)(1 3). pi1_perm swaps positions (0,1),(2,3),...; pi2_perm
// swaps (1,2),(3,4),.... sigma_perm(n) == pi1*pi2 and tau_perm(4) ==
// pi2*pi1*pi2.
std::vector<int> sigma_perm(int size);
std::vector<int> sigma_perm_inverse(int size);
std::vector<int> tau_perm(int size);
std::vector<int> pi1_perm(int size);
std::vector<int> pi2_perm(int size);

std::vector<int> compose_perms(const std::vector<int>& first, const std::vector<int>& then);
std::vector<int> invert_perm(const std::vector<int>& p);

/// Ordering whose position i holds o[pi[i]].
VertexOrdering apply_perm(const VertexOrdering& o, const std::vector<int>& pi);

enum class SigmaKind { Identity, Sigma, SigmaInv, Tau };
enum class BlockShape { Transitive, PathLike };  // PathLike = isomorphic to P_k

struct OrderingBlock {
  int begin = 0, size = 0;
  SigmaKind sigma = SigmaKind::Identity;
  BlockShape shape = BlockShape::Transitive;
};

struct BlockDecomposition {
  std::vector<OrderingBlock> blocks;  // consecutive intervals covering 0..n-1
};

/// Validates the structure a second matching ordering forces: pi must split
/// into consecutive intervals acted on by sigma_X, its inverse, tau_X (size
/// 4) or identity (size 1); every interval's vertex set is homogeneous; each
/// block is transitive or a P_k presented in the ordering sigma prescribes.
/// Size-2 blocks report shape Transitive and satisfy any presentation.
/// Preconditions (o and o*pi matching) violated -> std::invalid_argument;
/// structure violations -> InternalError.
BlockDecomposition decompose_ordering_pair(const Tournament& t, const VertexOrdering& o,
                                           const std::vector<int>& pi);

/// No matching ordering, but every single-vertex deletion has one.
bool is_minimal_non_matching(const Tournament& t);

/// Canonical codes of every minimal non-matching tournament with <= n
/// vertices (n <= 8), smallest sizes first.
std::vector<std::string> minimal_non_matching_up_to(int n);

}  // namespace tourney
