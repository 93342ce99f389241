#include "tourney/growth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tourney/homog.hpp"
#include "tourney/isomorphism.hpp"

namespace tourney {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Calls f(mask) for every k-subset of {0..n-1} in combination order until f
/// returns true; reports whether any call did.
template <typename F>
bool any_subset(int n, int k, F f) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(i);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool dominates(const Tournament& t, VertexSet a, VertexSet b) {
  for (int x : set_elements(a))
    if ((t.out_set(x) & b) != b) return false;
  return true;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : set_elements(s)) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::vector<WeaveType> classify_weave(const Tournament& t, const VertexOrdering& o) {
  if (!is_valid_ordering(t, o))
    throw std::invalid_argument("classify_weave: not an ordering of the tournament");
  int n = t.size();
  bool odd_f = true, odd_b = true, even_f = true, even_b = true;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      bool forward = t.has_edge(o[p], o[q]);
      if (p % 2 != q % 2) {
        if (!forward) return {};
        continue;
      }
      bool& all_f = (p % 2 == 0) ? odd_f : even_f;  // 0-based even = 1-based odd
      bool& all_b = (p % 2 == 0) ? odd_b : even_b;
      (forward ? all_b : all_f) = false;
      if (!odd_f && !odd_b) return {};
      if (!even_f && !even_b) return {};
    }
  }
  std::vector<WeaveType> types;
  for (WeaveDir od : {WeaveDir::F, WeaveDir::B})
    for (WeaveDir ev : {WeaveDir::F, WeaveDir::B}) {
      if (od == WeaveDir::F ? !odd_f : !odd_b) continue;
      if (ev == WeaveDir::F ? !even_f : !even_b) continue;
      types.push_back({od, ev});
    }
  return types;
}

Tournament make_weave(int n, WeaveType type) {
  require(n >= 1 && n <= kMaxVertices, "make_weave: n out of range");
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i % 2 != j % 2) {
        t.set_edge(i, j);
        continue;
      }
      WeaveDir dir = (i % 2 == 0) ? type.odd_dir : type.even_dir;
      if (dir == WeaveDir::F)
        t.set_edge(i, j);
      else
        t.set_edge(j, i);
    }
  return t;
}

Tournament make_weave_with_apex(int n, WeaveType type) {
  require(n >= 1 && n + 1 <= kMaxVertices, "make_weave_with_apex: n out of range");
  Tournament w = make_weave(n, type);
  Tournament t(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.has_edge(i, j))
        t.set_edge(i, j);
      else
        t.set_edge(j, i);
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0)
      t.set_edge(n, i);  // apex beats the odd 1-based positions
    else
      t.set_edge(i, n);
  }
  return t;
}

std::optional<std::pair<Family, int>> recognize_TUW(const Tournament& t) {
  int n = t.size();
  if (n < 3 || n % 2 == 0) return std::nullopt;
  for (Family fam : {Family::T, Family::U, Family::W})
    if (are_isomorphic(t, make_family(fam, n))) return std::make_pair(fam, n);
  return std::nullopt;
}

std::vector<Family> recognize_TUW_weave(const Tournament& t) {
  int n = t.size();
  if (n < 3 || n % 2 == 0) return {};
  bool hit_t = false, hit_u = false, hit_w = false;
  for (int v = 0; v < n; ++v) {
    VertexSet rest = t.vertices() & ~bit(v);
    Tournament sub = induce(t, rest);
    std::vector<int> elems = set_elements(rest);
    std::vector<int> local(n - 1);
    for (int i = 0; i < n - 1; ++i) local[i] = i;
    do {
      bool apex_ok = true;
      for (int p = 0; p < n - 1 && apex_ok; ++p) {
        int w = elems[local[p]];
        apex_ok = (p % 2 == 0) ? t.has_edge(v, w) : t.has_edge(w, v);
      }
      if (!apex_ok) continue;
      for (WeaveType ty : classify_weave(sub, local)) {
        if (ty == kWeaveBB) hit_t = true;
        if (ty == kWeaveFB || ty == kWeaveBF) hit_u = true;
        if (ty == kWeaveFF) hit_w = true;
      }
    } while (std::next_permutation(local.begin(), local.end()));
  }
  std::vector<Family> out;
  if (hit_t) out.push_back(Family::T);
  if (hit_u) out.push_back(Family::U);
  if (hit_w) out.push_back(Family::W);
  return out;
}

std::pair<int, int> grow_by_two(const Tournament& g, VertexSet h) {
  int n = g.size();
  require((h & ~g.vertices()) == 0, "grow_by_two: h not a vertex subset");
  int hs = popcount(h);
  require(hs >= 3 && hs <= n - 2, "grow_by_two: need 3 <= |h| <= n-2");
  require(is_prime(g), "grow_by_two: tournament must be prime");
  require(is_prime(induce(g, h)), "grow_by_two: h must induce a prime subtournament");
  for (int u = 0; u < n; ++u) {
    if (has_bit(h, u)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (has_bit(h, v)) continue;
      if (is_prime(induce(g, h | bit(u) | bit(v)))) return {u, v};
    }
  }
  throw InternalError("no prime two-vertex extension of " + set_to_string(h) + " in " +
                      g.to_line());
}

VertexSet find_prime5(const Tournament& g) {
  require(is_prime(g), "find_prime5: tournament must be prime");
  require(g.size() >= 5, "find_prime5: need at least 5 vertices");
  VertexSet found = 0;
  if (any_subset(g.size(), 5, [&](VertexSet s) {
        if (!is_prime(induce(g, s))) return false;
        found = s;
        return true;
      }))
    return found;
  throw InternalError("no prime 5-vertex subtournament in " + g.to_line());
}

VertexSet grow_by_one(const Tournament& g, VertexSet h) {
  int n = g.size();
  require((h & ~g.vertices()) == 0, "grow_by_one: h not a vertex subset");
  int hs = popcount(h);
  require(hs >= 5 && hs <= n - 1, "grow_by_one: need 5 <= |h| <= n-1");
  require(is_prime(g), "grow_by_one: tournament must be prime");
  require(!recognize_TUW(g), "grow_by_one: tournament must lie outside the three odd families");
  Tournament pattern = induce(g, h);
  require(is_prime(pattern), "grow_by_one: h must induce a prime subtournament");
  VertexSet found = 0;
  if (any_subset(n, hs + 1, [&](VertexSet s) {
        Tournament sub = induce(g, s);
        if (!is_prime(sub) || !contains_induced(sub, pattern)) return false;
        found = s;
        return true;
      }))
    return found;
  throw InternalError("no prime one-vertex growth of " + set_to_string(h) + " in " + g.to_line());
}

std::optional<VertexSet> shrink_prime(const Tournament& g, int k) {
  require(k == 1 || k == 2, "shrink_prime: k must be 1 or 2");
  require(is_prime(g), "shrink_prime: tournament must be prime");
  int n = g.size();
  if (n - k < 1) return std::nullopt;
  VertexSet found = 0;
  if (any_subset(n, n - k, [&](VertexSet s) {
        if (!is_prime(induce(g, s))) return false;
        found = s;
        return true;
      }))
    return found;
  return std::nullopt;
}

D4Classification d4_classify(const Tournament& t) {
  D4Classification out;
  if (auto w = contains_induced(t, make_family(Family::D4, 4))) {
    out.d4_witness = *w;
    return out;
  }
  D4Structure s;
  if (is_transitive(t)) {
    s.blocks = {t.vertices()};
    out.structure = s;
    return out;
  }
  auto comps = strong_components(t);
  int j = static_cast<int>(comps.size());
  while (j >= 2 && popcount(comps[j - 1]) == 1) {
    --j;
    s.tail |= comps[j];
  }
  // With no D4 around, everything left of the trailing transitive part is one
  // strong component: a vertex dominating a later cyclic triangle would have
  // been caught above.
  if (j != 1)
    throw InternalError("front of a D4-free tournament splits into " + std::to_string(j) +
                        " components: " + t.to_line());
  VertexSet front = comps[0];
  std::vector<int> front_elems = set_elements(front);
  DecompositionTree tree = decompose(induce(t, front));
  int r = tree.quotient.size();
  if (r < 3 || r % 2 == 0)
    throw InternalError("front quotient of D4-free " + t.to_line() + " has even size " +
                        std::to_string(r));
  auto phi = isomorphic(tree.quotient, make_family(Family::T, r));
  if (!phi)
    throw InternalError("front quotient of D4-free " + t.to_line() + " is not a circle");
  s.r = r;
  s.blocks.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    VertexSet global = 0;
    for (int local : set_elements(tree.children[i].span)) global |= bit(front_elems[local]);
    s.blocks[(*phi)[i]] = global;
  }
  for (VertexSet b : s.blocks)
    if (!is_transitive(induce(t, b)))
      throw InternalError("non-transitive block " + set_to_string(b) + " in D4-free " +
                          t.to_line());
  if (!validate_d4_structure(t, s))
    throw InternalError("constructed structure fails validation for " + t.to_line());
  out.structure = s;
  return out;
}

bool validate_d4_structure(const Tournament& t, const D4Structure& s) {
  if (s.r < 1 || s.r % 2 == 0) return false;
  if (static_cast<int>(s.blocks.size()) != s.r) return false;
  VertexSet front = 0;
  for (VertexSet b : s.blocks) {
    if (b == 0 || (b & ~t.vertices()) || (b & front)) return false;
    front |= b;
  }
  if ((s.tail & ~t.vertices()) || (s.tail & front)) return false;
  if ((front | s.tail) != t.vertices()) return false;
  for (VertexSet b : s.blocks)
    if (!is_transitive(induce(t, b))) return false;
  if (s.tail && !is_transitive(induce(t, s.tail))) return false;
  if (s.r >= 3) {
    Tournament circle = make_family(Family::T, s.r);
    for (int i = 0; i < s.r; ++i)
      for (int j = 0; j < s.r; ++j) {
        if (i == j) continue;
        if (circle.has_edge(i, j) && !dominates(t, s.blocks[i], s.blocks[j])) return false;
      }
  }
  if (s.tail && !dominates(t, front, s.tail)) return false;
  if (is_transitive(t)) return s.r == 1 && s.tail == 0;
  if (s.tail) {
    // Maximal tail: the front may not still end in a vertex beaten by all of
    // the rest of the front, or that vertex could be peeled onto the tail.
    for (int v : set_elements(front))
      if ((t.out_set(v) & front & ~bit(v)) == 0) return false;
  }
  return true;
}

}  // namespace tourney
