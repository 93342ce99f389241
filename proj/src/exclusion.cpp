#include "tourney/exclusion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "tourney/families.hpp"
#include "tourney/homog.hpp"
#include "tourney/isomorphism.hpp"

namespace tourney {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

/// Exact maximum-transitive-subset sizes over vertex masks, memoized. A
/// transitive set has a unique top vertex, so g(mask) = max over v in mask of
/// 1 + g(mask & out(v)).
class TransitiveDp {
 public:
  explicit TransitiveDp(const Tournament& t) : t_(t) { memo_.emplace(0, 0); }

  int size_of(VertexSet mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    int best = 0;
    for (VertexSet rest = mask; rest != 0; rest &= rest - 1) {
      int v = lowest_bit(rest);
      VertexSet next = mask & t_.out_set(v);
      if (1 + popcount(next) <= best) continue;
      best = std::max(best, 1 + size_of(next));
    }
    memo_.emplace(mask, best);
    return best;
  }

  /// Deterministic witness: repeatedly takes the smallest vertex that still
  /// tops an optimal chain.
  VertexSet witness(VertexSet mask) {
    VertexSet out = 0;
    while (mask != 0) {
      int want = size_of(mask);
      for (VertexSet rest = mask; rest != 0; rest &= rest - 1) {
        int v = lowest_bit(rest);
        if (1 + size_of(mask & t_.out_set(v)) == want) {
          out |= bit(v);
          mask &= t_.out_set(v);
          break;
        }
      }
    }
    return out;
  }

 private:
  const Tournament& t_;
  std::unordered_map<VertexSet, int> memo_;
};

/// Visits every anchor tuple of the pattern in a fixed scan order. The anchor
/// carries the reversed pair plus, for K/Kstar, the extra spine endpoint;
/// avail is the set that may supply the remaining transitive spine. Stops
/// when f returns true.
template <typename F>
void visit_anchors(const Tournament& t, Pattern p, F&& f) {
  int n = t.size();
  if (p == Pattern::J) {
    // u beats the spine, w closes the cycle: w -> u, spine in out(u) & in(w)
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) {
        if (w == u || !t.has_edge(w, u)) continue;
        if (f(2, t.out_set(u) & t.in_set(w), bit(u) | bit(w))) return;
      }
    return;
  }
  if (p == Pattern::K) {
    // f beats everything, l -> s is the reversed pair, spine between s and l
    for (int fv = 0; fv < n; ++fv)
      for (int s = 0; s < n; ++s) {
        if (s == fv || !t.has_edge(fv, s)) continue;
        for (int l = 0; l < n; ++l) {
          if (l == fv || l == s || !t.has_edge(fv, l) || !t.has_edge(l, s)) continue;
          if (f(3, t.out_set(fv) & t.out_set(s) & t.in_set(l), bit(fv) | bit(s) | bit(l))) return;
        }
      }
    return;
  }
  // Kstar: pv -> fv is the reversed pair, l loses to everything but fv's side
  for (int pv = 0; pv < n; ++pv)
    for (int fv = 0; fv < n; ++fv) {
      if (fv == pv || !t.has_edge(pv, fv)) continue;
      for (int l = 0; l < n; ++l) {
        if (l == pv || l == fv || !t.has_edge(pv, l) || !t.has_edge(fv, l)) continue;
        if (f(3, t.out_set(fv) & t.in_set(pv) & t.in_set(l), bit(pv) | bit(fv) | bit(l))) return;
      }
    }
}

/// Spine of a transitive set: elements ordered so each beats all later ones.
std::vector<int> spine_order(const Tournament& t, VertexSet iset) {
  std::vector<int> spine = set_elements(iset);
  std::sort(spine.begin(), spine.end(), [&](int a, int b) {
    return popcount(t.out_set(a) & iset) > popcount(t.out_set(b) & iset);
  });
  return spine;
}

/// Places every vertex of xset right after spine position a_v = min {i :
/// v -> u_i} (1-based), checking the construction's inequalities: both index
/// sets nonempty, a_v < b_v = max {i : u_i -> v}, and the window b_v - a_v
/// shorter than twice the pattern size.
VertexOrdering bucket_interleave(const Tournament& t, const std::vector<int>& spine,
                                 VertexSet xset, int pattern_size) {
  int s = static_cast<int>(spine.size());
  std::vector<std::vector<int>> bucket(s + 1);
  for (int v : set_elements(xset)) {
    int a = 0, b = 0;
    for (int i = 1; i <= s; ++i) {
      if (t.has_edge(v, spine[i - 1])) {
        if (a == 0) a = i;
      } else {
        b = i;
      }
    }
    if (a == 0 || b == 0)
      throw InternalError("vertex uniform against a maximum transitive set in " + t.to_line());
    if (a >= b)
      throw InternalError("vertex insertable into a maximum transitive set in " + t.to_line());
    if (b - a >= 2 * pattern_size)
      throw InternalError("spine window at least twice the pattern size in " + t.to_line());
    bucket[a].push_back(v);
  }
  if (2 * pattern_size < 31) {
    std::int64_t cap = std::int64_t{1} << (2 * pattern_size);
    for (int a = 1; a <= s; ++a)
      if (static_cast<std::int64_t>(bucket[a].size()) > cap)
        throw InternalError("bucket above the 4^pattern_size cap in " + t.to_line());
  }
  VertexOrdering order;
  for (int i = 1; i <= s; ++i) {
    order.push_back(spine[i - 1]);
    for (int v : bucket[i]) order.push_back(v);
  }
  return order;
}

void check_dominates(const Tournament& t, VertexSet src, VertexSet dst, const char* what) {
  for (int a : set_elements(src))
    if ((t.out_set(a) & dst) != dst)
      throw InternalError(std::string(what) + " in " + t.to_line());
}

}  // namespace

std::optional<VertexSet> has_pattern(const Tournament& t, Pattern p, int m) {
  if (m < 3) throw std::invalid_argument("has_pattern: size must be at least 3");
  if (m > t.size()) return std::nullopt;
  TransitiveDp dp(t);
  int z = m - (p == Pattern::J ? 2 : 3);
  std::optional<VertexSet> hit;
  visit_anchors(t, p, [&](int, VertexSet avail, VertexSet anchors) {
    if (dp.size_of(avail) < z) return false;
    VertexSet w = dp.witness(avail);
    std::vector<int> elems = set_elements(w);
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
      return popcount(t.out_set(a) & w) > popcount(t.out_set(b) & w);
    });
    VertexSet zbits = 0;
    for (int i = 0; i < z; ++i) zbits |= bit(elems[i]);
    hit = anchors | zbits;
    return true;
  });
  return hit;
}

int max_pattern_size(const Tournament& t, Pattern p) {
  TransitiveDp dp(t);
  int best = 0;
  visit_anchors(t, p, [&](int anchor_count, VertexSet avail, VertexSet) {
    int m = anchor_count + dp.size_of(avail);
    if (m >= 3) best = std::max(best, m);
    return false;
  });
  return best;
}

VertexSet max_transitive_subset(const Tournament& t) {
  return max_transitive_subset_in(t, t.vertices());
}

VertexSet max_transitive_subset_in(const Tournament& t, VertexSet allowed) {
  TransitiveDp dp(t);
  return dp.witness(allowed & t.vertices());
}

int max_transitive_size_in(const Tournament& t, VertexSet allowed) {
  TransitiveDp dp(t);
  return dp.size_of(allowed & t.vertices());
}

std::int64_t backedge_length_bound(int n) {
  require(n >= 1 && n <= 27, "backedge_length_bound: size out of range");
  return std::int64_t{10} * n * (std::int64_t{1} << (2 * n));
}

BoundedOrdering bounded_backedge_ordering(const Tournament& t, int pattern_size) {
  require(pattern_size >= 3, "bounded_backedge_ordering: pattern size must be at least 3");
  if (has_pattern(t, Pattern::J, pattern_size))
    throw std::invalid_argument("bounded_backedge_ordering: the chain pattern is present");
  VertexSet iset = max_transitive_subset(t);
  std::vector<int> spine = spine_order(t, iset);
  VertexOrdering order = bucket_interleave(t, spine, t.vertices() & ~iset, pattern_size);
  int achieved = max_backedge_length(t, order);
  if (pattern_size <= 27 && achieved > backedge_length_bound(pattern_size))
    throw InternalError("ordering exceeds the guaranteed backedge bound in " + t.to_line());
  return {std::move(order), achieved};
}

bool check_converse_J(const Tournament& t, const VertexOrdering& o, int k) {
  require(k >= 0, "check_converse_J: negative bound");
  if (!is_valid_ordering(t, o))
    throw std::invalid_argument("check_converse_J: not an ordering of the tournament");
  if (max_backedge_length(t, o) > k)
    throw std::invalid_argument("check_converse_J: ordering has a backedge longer than the bound");
  std::int64_t target = std::int64_t{10} * k;
  if (target < 3 || target > t.size()) return true;
  return !has_pattern(t, Pattern::J, static_cast<int>(target));
}

int StructureDecomposition::j_freeness() const {
  int worst = 0;
  for (int mj : part_max_j) worst = std::max(worst, mj);
  return std::max(3, worst + 1);
}

StructureDecomposition kn_free_decompose(const Tournament& t) {
  StructureDecomposition out;
  DecompositionTree tree = decompose(t);
  bool rotation = false;
  if (!tree.leaf()) {
    int rq = tree.quotient.size();
    if (rq >= 3 && rq % 2 == 1) {
      if (auto phi = isomorphic(tree.quotient, make_family(Family::T, rq))) {
        out.r = rq;
        out.parts.assign(rq, 0);
        for (int i = 0; i < rq; ++i) out.parts[(*phi)[i]] = tree.children[i].span;
        rotation = true;
      }
    }
  }
  if (!rotation) {
    out.r = 1;
    out.parts = {t.vertices()};
  }
  for (VertexSet part : out.parts)
    out.part_max_j.push_back(max_pattern_size(induce(t, part), Pattern::J));
  return out;
}

NoKnWitness noKn_construct(const Tournament& t, int pattern_size, int m_config) {
  require(pattern_size >= 3, "noKn_construct: pattern size must be at least 3");
  require(m_config >= 1 && m_config <= 30, "noKn_construct: m_config out of range");
  if (has_pattern(t, Pattern::K, pattern_size) || has_pattern(t, Pattern::Kstar, pattern_size))
    throw std::invalid_argument("noKn_construct: an excluded pattern is present");

  NoKnWitness out;
  out.m_parts = {t.vertices()};
  if (t.size() < (1 << m_config)) return out;

  VertexSet iset = max_transitive_subset(t);
  std::vector<int> spine = spine_order(t, iset);
  int u1 = spine.front(), us = spine.back();
  VertexSet nset = 0;
  for (int v : set_elements(t.vertices() & ~iset))
    if (t.has_edge(v, u1) && t.has_edge(us, v)) nset |= bit(v);
  VertexSet xset = t.vertices() & ~iset & ~nset;
  VertexSet mset = iset | xset;
  out.m_order = bucket_interleave(t, spine, xset, pattern_size);
  if (nset == 0) return out;

  out.trivial = false;
  std::vector<int> melems = set_elements(mset);
  std::vector<VertexSet> comps;
  for (VertexSet local : strong_components(induce(t, mset))) {
    VertexSet global = 0;
    for (int i : set_elements(local)) global |= bit(melems[i]);
    comps.push_back(global);
  }
  int c = static_cast<int>(comps.size());

  // Each outside vertex must beat exactly a prefix of the component chain of
  // M; equal prefixes group the outside vertices, and the prefix boundaries
  // cut M into the interleaving blocks.
  std::map<int, std::vector<int>> groups;
  for (int w : set_elements(nset)) {
    VertexSet aw = t.out_set(w) & mset;
    int k = 0;
    VertexSet prefix = 0;
    while (k < c && (comps[k] & ~aw) == 0) prefix |= comps[k++];
    if (prefix != aw)
      throw InternalError("outside vertex whose beaten set is not a component prefix in " +
                          t.to_line());
    groups[k].push_back(w);
  }

  out.m_parts.clear();
  int done = 0;
  for (const auto& [k, ws] : groups) {
    VertexSet np = 0;
    for (int w : ws) np |= bit(w);
    out.n_parts.push_back(np);
    VertexSet mp = 0;
    for (int i = done; i < k; ++i) mp |= comps[i];
    if (mp == 0)
      throw InternalError("empty spine block between outside groups in " + t.to_line());
    out.m_parts.push_back(mp);
    done = k;
  }
  VertexSet tail = 0;
  for (int i = done; i < c; ++i) tail |= comps[i];
  if (tail == 0)
    throw InternalError("no spine block after the last outside group in " + t.to_line());
  out.m_parts.push_back(tail);

  int p = static_cast<int>(out.n_parts.size());
  for (int i = 0; i < p + 1; ++i)
    for (int j = i + 1; j < p + 1; ++j)
      check_dominates(t, out.m_parts[i], out.m_parts[j], "spine blocks out of order");
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      check_dominates(t, out.n_parts[i], out.n_parts[j], "outside groups out of order");
  for (int a = 0; a < p + 1; ++a)
    for (int b = 0; b < p; ++b) {
      if (a <= b)
        check_dominates(t, out.n_parts[b], out.m_parts[a],
                        "outside group losing to an early spine block");
      else
        check_dominates(t, out.m_parts[a], out.n_parts[b],
                        "spine block losing to an earlier outside group");
    }
  return out;
}

bool check_converse_K(const Tournament& t, int r, const std::vector<VertexSet>& parts, int k) {
  require(k >= 3, "check_converse_K: freeness index must be at least 3");
  require(r >= 1 && r % 2 == 1, "check_converse_K: part count must be odd and positive");
  require(static_cast<int>(parts.size()) == r, "check_converse_K: part count mismatch");
  VertexSet seen = 0;
  for (VertexSet part : parts) {
    require(part != 0, "check_converse_K: empty part");
    require((part & ~t.vertices()) == 0, "check_converse_K: part outside the vertex set");
    require((part & seen) == 0, "check_converse_K: overlapping parts");
    seen |= part;
  }
  require(seen == t.vertices(), "check_converse_K: parts do not cover the vertex set");
  Tournament tr = make_family(Family::T, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      VertexSet src = tr.has_edge(i, j) ? parts[i] : parts[j];
      VertexSet dst = tr.has_edge(i, j) ? parts[j] : parts[i];
      for (int a : set_elements(src))
        require((t.out_set(a) & dst) == dst,
                "check_converse_K: parts do not substitute into the rotation quotient");
    }
  for (VertexSet part : parts)
    require(!has_pattern(induce(t, part), Pattern::J, k),
            "check_converse_K: a part contains the excluded chain pattern");
  if (k + 1 > t.size()) return true;
  return !has_pattern(t, Pattern::K, k + 1) && !has_pattern(t, Pattern::Kstar, k + 1);
}

}  // namespace tourney
