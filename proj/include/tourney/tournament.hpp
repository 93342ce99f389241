#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tourney {

inline constexpr int kMaxVertices = 16;

/// Subset of vertices 0..n-1, one bit per vertex.
using VertexSet = std::uint32_t;

/// seq[position] = vertex. Positions are 0-based internally; command-line
/// output uses 1-based ids.
using VertexOrdering = std::vector<int>;

/// Thrown when a computation reaches a state the underlying theory rules out.
/// Catching one of these means either a bug or a genuine counterexample, so
/// the message always carries the offending instance.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Direction : std::uint8_t { Forward, Backward };  // u->v / v->u

inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline int lowest_bit(VertexSet s) { return __builtin_ctz(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool has_bit(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet full_set(int n) { return (VertexSet{1} << n) - 1; }

std::vector<int> set_elements(VertexSet s);

/// Complete directed graph on n <= 16 vertices: exactly one arc per pair.
/// Row i is the out-neighborhood of vertex i as a bitmask.
class Tournament {
 public:
  /// Transitive start: i -> j for every i < j. Reorient with set_edge.
  explicit Tournament(int n);

  int size() const { return n_; }
  bool has_edge(int u, int v) const { return (out_[u] >> v) & 1u; }

  /// Orients u -> v (and clears v -> u). u != v required.
  void set_edge(int u, int v);

  VertexSet out_set(int v) const { return out_[v]; }
  VertexSet in_set(int v) const { return full_set(n_) & ~out_[v] & ~bit(v); }
  int out_degree(int v) const { return popcount(out_[v]); }
  int in_degree(int v) const { return n_ - 1 - out_degree(v); }
  VertexSet vertices() const { return full_set(n_); }

  bool operator==(const Tournament& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
      if (out_[i] != o.out_[i]) return false;
    return true;
  }
  bool operator!=(const Tournament& o) const { return !(*this == o); }

  /// Pair bits in lexicographic (i,j) order, i < j; '1' means i -> j.
  std::string bit_string() const;
  /// Line format "n:<bits>".
  std::string to_line() const;
  /// Parses "n:<bits>"; anything after '#' is a comment. Throws
  /// std::invalid_argument on malformed input.
  static Tournament parse(const std::string& line);

 private:
  int n_;
  std::array<VertexSet, kMaxVertices> out_{};
};

/// Index of pair (i,j), i<j, in the lexicographic pair order used by the
/// file format: (0,1),(0,2),...,(0,n-1),(1,2),...
int pair_index(int n, int i, int j);

Direction edge_direction(const Tournament& t, int u, int v);

/// Subtournament on s; vertex k of the result is the k-th smallest element
/// of s. s must be a nonempty subset of t's vertices.
Tournament induce(const Tournament& t, VertexSet s);

/// Replaces vertex i of g by parts[i]; blocks are concatenated in g's vertex
/// order, so vertices of parts[i] occupy one contiguous index range.
Tournament substitute(const Tournament& g, const std::vector<Tournament>& parts);

/// Strongly connected components S_1, ..., S_s with S_i => S_j for i < j
/// (in a tournament the condensation is a total order).
std::vector<VertexSet> strong_components(const Tournament& t);
bool is_strongly_connected(const Tournament& t);
bool is_transitive(const Tournament& t);

/// True when o is a permutation of t's vertices.
bool is_valid_ordering(const Tournament& t, const VertexOrdering& o);

/// Arcs pointing right-to-left under o, as (later position, earlier
/// position), sorted. Throws std::invalid_argument on an invalid ordering.
std::vector<std::pair<int, int>> backedges(const Tournament& t, const VertexOrdering& o);
int max_backedge_length(const Tournament& t, const VertexOrdering& o);

/// Sorted out-degree sequence.
std::vector<int> score_sequence(const Tournament& t);

}  // namespace tourney
