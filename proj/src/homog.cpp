#include "tourney/homog.hpp"

#include <algorithm>

#include "tourney/isomorphism.hpp"

namespace tourney {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

bool is_homogeneous(const Tournament& t, VertexSet x) {
  require((x & ~t.vertices()) == 0, "set outside vertex range");
  for (VertexSet rest = t.vertices() & ~x; rest; rest &= rest - 1) {
    VertexSet hit = t.out_set(lowest_bit(rest)) & x;
    if (hit != 0 && hit != x) return false;
  }
  return true;
}

VertexSet module_closure(const Tournament& t, VertexSet seed) {
  require((seed & ~t.vertices()) == 0, "seed outside vertex range");
  VertexSet x = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet rest = t.vertices() & ~x; rest; rest &= rest - 1) {
      int v = lowest_bit(rest);
      VertexSet hit = t.out_set(v) & x;
      if (hit != 0 && hit != x) {
        x |= bit(v);
        grew = true;
      }
    }
  }
  return x;
}

bool is_prime(const Tournament& t) {
  int n = t.size();
  if (n <= 2) return true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (module_closure(t, bit(u) | bit(v)) != t.vertices()) return false;
  return true;
}

std::optional<VertexSet> find_nontrivial_module(const Tournament& t) {
  int n = t.size();
  std::optional<VertexSet> found;
  std::vector<int> found_elems;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      VertexSet x = module_closure(t, bit(u) | bit(v));
      if (x == t.vertices()) continue;
      std::vector<int> elems = set_elements(x);
      if (!found || popcount(x) < popcount(*found) ||
          (popcount(x) == popcount(*found) && elems < found_elems)) {
        found = x;
        found_elems = std::move(elems);
      }
    }
  return found;
}

std::vector<VertexSet> proper_homogeneous_sets(const Tournament& t) {
  std::vector<VertexSet> out;
  VertexSet all = t.vertices();
  for (VertexSet x = 1; x < all; ++x)
    if (is_homogeneous(t, x)) out.push_back(x);
  return out;
}

namespace {

DecompositionTree decompose_rec(const Tournament& full, VertexSet span) {
  DecompositionTree node;
  node.span = span;
  if (popcount(span) == 1) return node;

  Tournament sub = induce(full, span);
  std::vector<int> elems = set_elements(span);
  auto to_global = [&](VertexSet local) {
    VertexSet g = 0;
    for (; local; local &= local - 1) g |= bit(elems[lowest_bit(local)]);
    return g;
  };

  std::vector<VertexSet> parts_local;
  std::vector<VertexSet> comps = strong_components(sub);
  if (comps.size() > 1) {
    // Not strongly connected: peel the dominant strong component off the rest.
    parts_local = {comps[0], sub.vertices() & ~comps[0]};
  } else {
    // Strongly connected: the maximal proper homogeneous sets partition the
    // vertices (all singletons exactly when sub is prime).
    std::vector<VertexSet> homog = proper_homogeneous_sets(sub);
    for (VertexSet x : homog) {
      bool maximal = true;
      for (VertexSet y : homog)
        if (y != x && (x & ~y) == 0) {
          maximal = false;
          break;
        }
      if (maximal) parts_local.push_back(x);
    }
    std::sort(parts_local.begin(), parts_local.end(),
              [](VertexSet a, VertexSet b) { return lowest_bit(a) < lowest_bit(b); });
    VertexSet seen = 0;
    for (VertexSet p : parts_local) {
      if (seen & p)
        throw InternalError("overlapping maximal homogeneous sets in " + sub.to_line());
      seen |= p;
    }
    if (seen != sub.vertices())
      throw InternalError("maximal homogeneous sets miss a vertex in " + sub.to_line());
  }

  int k = static_cast<int>(parts_local.size());
  Tournament quotient(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (sub.has_edge(lowest_bit(parts_local[i]), lowest_bit(parts_local[j])))
        quotient.set_edge(i, j);
    }
  if (!is_prime(quotient))
    throw InternalError("composite quotient for " + sub.to_line());

  node.quotient = quotient;
  for (VertexSet p : parts_local) node.children.push_back(decompose_rec(full, to_global(p)));
  return node;
}

// u -> v in the tournament the tree describes? Both must lie in tree.span.
bool tree_beats(const DecompositionTree& tree, int u, int v) {
  int cu = -1;
  int cv = -1;
  for (int i = 0; i < static_cast<int>(tree.children.size()); ++i) {
    if (has_bit(tree.children[i].span, u)) cu = i;
    if (has_bit(tree.children[i].span, v)) cv = i;
  }
  if (cu != cv) return tree.quotient.has_edge(cu, cv);
  return tree_beats(tree.children[cu], u, v);
}

}  // namespace

DecompositionTree decompose(const Tournament& t) { return decompose_rec(t, t.vertices()); }

Tournament recompose(const DecompositionTree& tree) {
  std::vector<int> elems = set_elements(tree.span);
  int n = static_cast<int>(elems.size());
  Tournament out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (tree_beats(tree, elems[i], elems[j]))
        out.set_edge(i, j);
      else
        out.set_edge(j, i);
    }
  return out;
}

std::string tree_to_string(const DecompositionTree& tree) {
  if (tree.leaf()) return "v" + std::to_string(lowest_bit(tree.span) + 1);
  std::string s = "(" + tree.quotient.to_line() + ":";
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    s += i == 0 ? " " : ", ";
    s += tree_to_string(tree.children[i]);
  }
  return s + ")";
}

VertexClass classify_vertex(const Tournament& g, VertexSet h, int v) {
  require(v >= 0 && v < g.size(), "vertex out of range");
  require((h & ~g.vertices()) == 0, "set outside vertex range");
  require(!has_bit(h, v), "vertex must lie outside the set");
  require(popcount(h) >= 3, "need at least three vertices");
  require(is_prime(induce(g, h)), "induced subtournament must be prime");

  VertexSet s = h | bit(v);
  Tournament sub = induce(g, s);
  std::vector<int> elems = set_elements(s);
  auto local = [&](int global) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), global) -
                            elems.begin());
  };

  VertexSet h_local = 0;
  for (int x : set_elements(h)) h_local |= bit(local(x));

  std::vector<VertexClass> hits;
  if (is_prime(sub)) hits.push_back({VertexClassKind::Ext, -1});
  if (is_homogeneous(sub, h_local)) hits.push_back({VertexClassKind::Z, -1});
  for (int x : set_elements(h))
    if (is_homogeneous(sub, bit(local(v)) | bit(local(x))))
      hits.push_back({VertexClassKind::Vx, x});

  if (hits.size() != 1)
    throw InternalError("vertex " + std::to_string(v + 1) + " has " +
                        std::to_string(hits.size()) + " classifications against " +
                        induce(g, h).to_line() + " inside " + g.to_line());
  return hits[0];
}

}  // namespace tourney
