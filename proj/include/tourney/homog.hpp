#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// X is homogeneous when every vertex outside X either beats all of X or
/// loses to all of X. Trivial cases: singletons, empty set, all of V.
bool is_homogeneous(const Tournament& t, VertexSet x);

/// Prime = only trivial homogeneous sets. Tournaments on 1 or 2 vertices are
/// prime by convention.
bool is_prime(const Tournament& t);

/// Smallest homogeneous superset of seed (the family of homogeneous sets
/// containing a fixed pair is closed under intersection, so this is well
/// defined). Grows by adding any outside vertex that splits the current set.
VertexSet module_closure(const Tournament& t, VertexSet seed);

/// Smallest nontrivial homogeneous set, ties broken by lexicographic order
/// on the sorted element sequence; nullopt iff t is prime.
std::optional<VertexSet> find_nontrivial_module(const Tournament& t);

/// Every homogeneous set with 1 <= |X| < n, by exhaustive subset scan.
std::vector<VertexSet> proper_homogeneous_sets(const Tournament& t);

/// Recursive modular decomposition. Internal nodes carry a prime quotient on
/// >= 2 vertices; child i spans the vertices substituted for quotient vertex
/// i. Leaves span single vertices. Deterministic choices: a non-strongly-
/// connected tournament splits as I_2(first strong component, rest); a
/// strongly connected decomposable one splits into its maximal proper
/// homogeneous sets (which partition V), ordered by smallest element.
struct DecompositionTree {
  VertexSet span = 0;
  Tournament quotient{1};
  std::vector<DecompositionTree> children;  // empty iff leaf

  bool leaf() const { return children.empty(); }
};

DecompositionTree decompose(const Tournament& t);

/// Inverse of decompose: rebuilds the tournament on the span's vertices
/// (vertex k of the result = k-th smallest element of the span), so
/// recompose(decompose(t)) == t exactly.
Tournament recompose(const DecompositionTree& tree);

/// Nested text form "(<quotient line>: child, child, ...)"; leaves print as
/// v<id> with 1-based original vertex ids.
std::string tree_to_string(const DecompositionTree& tree);

enum class VertexClassKind { Ext, Z, Vx };

struct VertexClass {
  VertexClassKind kind;
  int anchor = -1;  // the x with {v,x} homogeneous, when kind == Vx
};

/// Classifies v against a prime subtournament on h (|h| >= 3, v outside h):
/// Ext when h+v is prime, Z when h stays homogeneous in h+v, Vx when {v,x}
/// is homogeneous in h+v for some x in h. Exactly one case applies; an
/// ambiguous or empty classification throws InternalError.
VertexClass classify_vertex(const Tournament& g, VertexSet h, int v);

}  // namespace tourney
