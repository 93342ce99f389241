#include "tourney/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tourney/enumeration.hpp"
#include "tourney/exclusion.hpp"
#include "tourney/families.hpp"
#include "tourney/growth.hpp"
#include "tourney/homog.hpp"
#include "tourney/isomorphism.hpp"
#include "tourney/matching.hpp"
#include "tourney/triangles.hpp"

namespace tourney {
namespace {

struct Instance {
  Tournament t;
  std::string note;       // printed next to the tournament line on failure
  int tag = 0;            // suite-local dispatch
  std::vector<int> params;
};

using Universe = std::vector<Instance>;
using Check = std::function<std::optional<std::string>(const Instance&)>;

struct SuiteDef {
  const char* id;
  const char* description;
  int hi;  // largest vertex count the universe can use
  std::function<std::string(int)> universe_text;  // receives the clamped max n
  std::function<Universe(int)> build;
  Check check;
  std::function<std::vector<std::string>(int)> post;  // aggregate checks, may be null
};

VertexOrdering identity_ordering(int n) {
  VertexOrdering o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

/// x homogeneous inside the subtournament induced on `within` (x subset of
/// within), tested without relabeling.
bool homog_in(const Tournament& t, VertexSet x, VertexSet within) {
  for (int v : set_elements(within & ~x)) {
    VertexSet o = t.out_set(v) & x;
    if (o != 0 && o != x) return false;
  }
  return true;
}

bool dominates(const Tournament& t, VertexSet a, VertexSet b) {
  for (int v : set_elements(a))
    if ((t.out_set(v) & b) != b) return false;
  return true;
}

/// Bits for 1-based positions lo..hi; empty when hi < lo.
VertexSet mask_range1(int lo, int hi) {
  VertexSet m = 0;
  for (int i = lo; i <= hi; ++i) m |= bit(i - 1);
  return m;
}

VertexSet tri_mask(const Triangle& tr) { return bit(tr.a) | bit(tr.b) | bit(tr.c); }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

/// parts must partition the vertices, be nonempty, and (for r >= 3) have all
/// cross-part edges following the circle family's arcs.
std::optional<std::string> check_t_parts(const Tournament& t, int r,
                                         const std::vector<VertexSet>& parts) {
  if (r < 1 || r % 2 == 0) return std::string("arrangement size not odd");
  if (static_cast<int>(parts.size()) != r) return std::string("part count off");
  VertexSet all = 0;
  for (VertexSet p : parts) {
    if (!p) return std::string("empty part");
    if (p & all) return std::string("overlapping parts");
    all |= p;
  }
  if (all != t.vertices()) return std::string("parts do not cover");
  if (r == 1) return std::nullopt;
  Tournament tr = make_family(Family::T, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      bool fwd = tr.has_edge(i, j);
      if (!dominates(t, parts[fwd ? i : j], parts[fwd ? j : i]))
        return std::string("cross-part edge off the circle pattern");
    }
  return std::nullopt;
}

std::uint64_t brute_matching_count(const Tournament& t) {
  VertexOrdering p = identity_ordering(t.size());
  std::uint64_t c = 0;
  do {
    if (is_matching_ordering(t, p)) ++c;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

Universe canon_universe(int lo, int hi, const std::function<bool(const Tournament&)>& keep = {}) {
  Universe u;
  for (int n = lo; n <= hi; ++n)
    for (const Tournament& t : canonical_tournaments(n))
      if (!keep || keep(t)) u.push_back({t, "", 0, {}});
  return u;
}

std::string canon_text(int lo, int eff, const char* what) {
  if (eff < lo)
    return std::string(what) + " (empty: limit below " + std::to_string(lo) + " vertices)";
  if (eff == lo) return std::string(what) + " on " + std::to_string(lo) + " vertices";
  return std::string(what) + " on " + std::to_string(lo) + ".." + std::to_string(eff) +
         " vertices";
}

constexpr WeaveType kKinds[4] = {kWeaveFF, kWeaveFB, kWeaveBF, kWeaveBB};
const char* const kKindNames[4] = {"FF", "FB", "BF", "BB"};
constexpr Family kTUW[3] = {Family::T, Family::U, Family::W};

Universe weave_universe(int lo, int eff) {
  Universe u;
  for (int n = lo; n <= eff; ++n)
    for (int k = 0; k < 4; ++k)
      u.push_back({make_weave(n, kKinds[k]),
                   std::string(kKindNames[k]) + " weave, n=" + std::to_string(n), 0, {k}});
  return u;
}

std::optional<std::string> check_weave_rows(const Instance& in) {
  const Tournament& t = in.t;
  int n = t.size();
  WeaveType ty = kKinds[in.params[0]];
  auto types = classify_weave(t, identity_ordering(n));
  if (std::find(types.begin(), types.end(), ty) == types.end())
    return std::string("constructed weave lacks its own type");
  bool odd = n % 2 != 0;
  if (ty == kWeaveFF && !is_transitive(t)) return std::string("FF weave not transitive");
  if (!odd) {
    if (ty == kWeaveFB && !is_homogeneous(t, mask_range1(2, n)))
      return std::string("tail block not homogeneous");
    if (ty == kWeaveBF && !is_homogeneous(t, mask_range1(1, n - 1)))
      return std::string("front block not homogeneous");
    if (ty == kWeaveBB && !is_homogeneous(t, bit(0) | bit(n - 1)))
      return std::string("endpoint pair not homogeneous");
  } else {
    if (ty == kWeaveFB && !is_homogeneous(t, mask_range1(1, n - 1)))
      return std::string("front block not homogeneous");
    if (ty == kWeaveBF && !are_isomorphic(t, make_family(Family::U, n)))
      return std::string("BF weave is not U_n");
    if (ty == kWeaveBB && !are_isomorphic(t, make_family(Family::T, n)))
      return std::string("BB weave is not T_n");
  }
  Tournament a = make_weave_with_apex(n, ty);
  int v = n;  // apex index
  if (odd) {
    if (ty == kWeaveFF || ty == kWeaveFB) {
      if (!is_homogeneous(a, bit(v) | mask_range1(1, n - 1)))
        return std::string("apex block not homogeneous");
    } else if (!is_homogeneous(a, bit(v) | bit(n - 1))) {
      return std::string("apex pair not homogeneous");
    }
  } else {
    Family want = ty == kWeaveFF   ? Family::W
                  : ty == kWeaveBB ? Family::T
                                   : Family::U;
    if (!are_isomorphic(a, make_family(want, n + 1)))
      return std::string("apex extension misses its family");
  }
  return std::nullopt;
}

std::optional<std::string> check_prime_weaves(const Instance& in) {
  const Tournament& w = in.t;
  int n = w.size();
  if (n >= 3 && is_prime(w)) {
    auto r = recognize_TUW(w);
    if (!r || r->second != n || (r->first != Family::T && r->first != Family::U))
      return std::string("prime weave is neither T_n nor U_n");
  }
  Tournament a = make_weave_with_apex(n, kKinds[in.params[0]]);
  if (is_prime(a)) {
    auto r = recognize_TUW(a);
    if (!r || r->second != n + 1)
      return std::string("prime apex extension outside the three families");
  }
  return std::nullopt;
}

std::optional<std::string> check_weave_deletion(const Instance& in) {
  const Tournament& t = in.t;
  int n = t.size();
  auto full_types = classify_weave(t, identity_ordering(n));
  for (int i = 0; i + 1 < n; ++i) {
    VertexSet mask = t.vertices() & ~(bit(i) | bit(i + 1));
    if (!mask) continue;  // nothing left: vacuous
    Tournament sub = induce(t, mask);
    auto sub_types = classify_weave(sub, identity_ordering(n - 2));
    for (WeaveType ty : full_types)
      if (std::find(sub_types.begin(), sub_types.end(), ty) == sub_types.end())
        return std::string("type lost deleting positions ") + std::to_string(i + 1) + "," +
               std::to_string(i + 2);
  }
  return std::nullopt;
}

std::vector<SuiteDef> build_registry() {
  std::vector<SuiteDef> reg;

  reg.push_back(SuiteDef{
      "enum_counts",
      "canonical enumeration matches the known class counts, cross-checked against labeled "
      "enumeration for n <= 5",
      8,
      [](int eff) { return canon_text(1, eff, "canonical class streams"); },
      [](int eff) {
        static const int counts[9] = {0, 1, 1, 2, 4, 12, 56, 456, 6880};
        Universe u;
        for (int n = 1; n <= eff; ++n)
          u.push_back({make_family(Family::I, n), "n=" + std::to_string(n), 0, {n, counts[n]}});
        return u;
      },
      [](const Instance& in) -> std::optional<std::string> {
        int n = in.params[0];
        auto want = static_cast<std::size_t>(in.params[1]);
        const auto& canon = canonical_tournaments(n);
        if (canon.size() != want)
          return "stream has " + std::to_string(canon.size()) + " classes, expected " +
                 std::to_string(want);
        for (std::size_t i = 0; i < canon.size(); ++i) {
          if (canonical_form(canon[i]) != canon[i])
            return std::string("stream member not in canonical form");
          if (i + 1 < canon.size() && !(canonical_code(canon[i]) < canonical_code(canon[i + 1])))
            return std::string("stream out of order");
        }
        if (n <= 5) {
          std::set<std::string> codes;
          for (const Tournament& t : labeled_tournaments(n)) codes.insert(canonical_code(t));
          if (codes.size() != want) return std::string("labeled dedup disagrees");
          for (const Tournament& t : canon)
            if (!codes.count(canonical_code(t)))
              return std::string("canonical class missing from labeled dedup");
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "decomposable_4",
      "every 4-vertex tournament has a nontrivial homogeneous set, and its decomposition "
      "round-trips",
      4,
      [](int eff) { return canon_text(4, std::min(eff, 4), "canonical tournaments"); },
      [](int eff) { return canon_universe(4, std::min(eff, 4)); },
      [](const Instance& in) -> std::optional<std::string> {
        if (is_prime(in.t)) return std::string("prime on four vertices");
        auto m = find_nontrivial_module(in.t);
        if (!m || popcount(*m) < 2 || popcount(*m) >= in.t.size())
          return std::string("no nontrivial homogeneous set reported");
        auto tree = decompose(in.t);
        if (tree.leaf() || tree.children.size() < 2) return std::string("degenerate decomposition");
        if (!is_prime(tree.quotient)) return std::string("quotient not prime");
        if (recompose(tree) != in.t) return std::string("recompose mismatch");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prime_census_5",
      "the 5-vertex primes are exactly T_5, U_5 and W_5",
      5,
      [](int eff) { return canon_text(5, std::min(eff, 5), "canonical tournaments"); },
      [](int eff) { return canon_universe(5, std::min(eff, 5)); },
      [](const Instance& in) -> std::optional<std::string> {
        bool p = is_prime(in.t);
        bool named = are_isomorphic(in.t, make_family(Family::T, 5)) ||
                     are_isomorphic(in.t, make_family(Family::U, 5)) ||
                     are_isomorphic(in.t, make_family(Family::W, 5));
        if (p && !named) return std::string("prime outside the three families");
        if (!p && named) return std::string("family member not prime");
        return std::nullopt;
      },
      [](int eff) -> std::vector<std::string> {
        if (eff < 5) return {};
        int c = 0;
        for (const Tournament& t : canonical_tournaments(5)) c += is_prime(t) ? 1 : 0;
        if (c == 3) return {};
        return {make_family(Family::I, 5).to_line() + "  # prime class count is " +
                std::to_string(c) + ", expected 3"};
      },
  });

  reg.push_back(SuiteDef{
      "prime_strong",
      "prime tournaments on at least 3 vertices are strongly connected",
      7,
      [](int eff) { return canon_text(3, eff, "prime canonical tournaments"); },
      [](int eff) {
        return canon_universe(3, eff, [](const Tournament& t) { return is_prime(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        if (!is_strongly_connected(in.t)) return std::string("prime but not strongly connected");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_2_1",
      "a homogeneous set restricts to a homogeneous set of every induced subtournament",
      6,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        VertexSet V = t.vertices();
        for (VertexSet x = 0; x <= V; ++x) {
          if (!homog_in(t, x, V)) continue;
          for (VertexSet w = 0; w <= V; ++w)
            if (!homog_in(t, x & w, w)) return std::string("restriction not homogeneous");
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_2_2",
      "a common homogeneous set of two restrictions is homogeneous in their union",
      6,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        VertexSet V = t.vertices();
        for (VertexSet w1 = 0; w1 <= V; ++w1)
          for (VertexSet w2 = 0; w2 <= V; ++w2) {
            VertexSet both = w1 & w2;
            VertexSet x = both;
            while (true) {
              if (homog_in(t, x, w1) && homog_in(t, x, w2) && !homog_in(t, x, w1 | w2))
                return std::string("not homogeneous in the union");
              if (!x) break;
              x = (x - 1) & both;
            }
          }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_2_3",
      "with {x,y} homogeneous, homogeneous sets move between the tournament and the deletion "
      "of y (adding y back when x is inside)",
      6,
      [](int eff) { return canon_text(2, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(2, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = t.size();
        VertexSet V = t.vertices();
        for (int y = 0; y < n; ++y)
          for (int x = 0; x < n; ++x) {
            if (x == y || !homog_in(t, bit(x) | bit(y), V)) continue;
            VertexSet w = V & ~bit(y);
            VertexSet s = w;
            while (true) {
              if (homog_in(t, s, w)) {
                bool ok = has_bit(s, x) ? homog_in(t, s | bit(y), V) : homog_in(t, s, V);
                if (!ok) return std::string("transfer across a twin deletion fails");
              }
              if (!s) break;
              s = (s - 1) & w;
            }
          }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_2_4",
      "the intersection of two homogeneous sets is homogeneous",
      6,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        VertexSet V = t.vertices();
        std::vector<VertexSet> homogs;
        for (VertexSet x = 0; x <= V; ++x)
          if (homog_in(t, x, V)) homogs.push_back(x);
        for (VertexSet x : homogs)
          for (VertexSet y : homogs)
            if ((x & y) && !homog_in(t, x & y, V))
              return std::string("intersection not homogeneous");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_2_5",
      "subtracting a homogeneous set that sticks out leaves a homogeneous set",
      6,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        VertexSet V = t.vertices();
        std::vector<VertexSet> homogs;
        for (VertexSet x = 0; x <= V; ++x)
          if (homog_in(t, x, V)) homogs.push_back(x);
        for (VertexSet x : homogs)
          for (VertexSet y : homogs)
            if ((y & ~x) && !homog_in(t, x & ~y, V))
              return std::string("difference not homogeneous");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_2_6",
      "overlapping sets homogeneous away from each other's difference have a homogeneous union",
      6,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        VertexSet V = t.vertices();
        for (VertexSet x = 0; x <= V; ++x)
          for (VertexSet y = 0; y <= V; ++y) {
            if (!(x & y)) continue;
            if (homog_in(t, x, V & ~(y & ~x)) && homog_in(t, y, V & ~(x & ~y)) &&
                !homog_in(t, x | y, V))
              return std::string("union not homogeneous");
          }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_2_7",
      "outside a 5-vertex prime every vertex is an extender, an absorber, or a clone, and "
      "decomposable two-vertex extensions expose the predicted homogeneous set",
      7,
      [](int eff) { return canon_text(6, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(6, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        VertexSet V = t.vertices();
        for (VertexSet h = 0; h <= V; ++h) {
          if (popcount(h) != 5 || !is_prime(induce(t, h))) continue;
          auto outside = set_elements(V & ~h);
          int kind[kMaxVertices];
          int anchor[kMaxVertices];
          for (int v : outside) {
            bool e = is_prime(induce(t, h | bit(v)));
            bool z = homog_in(t, h, h | bit(v));
            std::vector<int> anchors;
            for (int x : set_elements(h))
              if (homog_in(t, bit(x) | bit(v), h | bit(v))) anchors.push_back(x);
            int hits = (e ? 1 : 0) + (z ? 1 : 0) + static_cast<int>(anchors.size());
            if (hits != 1)
              return std::string("outside vertex fits ") + std::to_string(hits) + " classes";
            VertexClass c = classify_vertex(t, h, v);
            if (e) {
              if (c.kind != VertexClassKind::Ext) return std::string("extender misclassified");
              kind[v] = 0;
            } else if (z) {
              if (c.kind != VertexClassKind::Z) return std::string("absorber misclassified");
              kind[v] = 1;
            } else {
              if (c.kind != VertexClassKind::Vx || c.anchor != anchors[0])
                return std::string("clone misclassified");
              kind[v] = 2;
              anchor[v] = anchors[0];
            }
          }
          for (int u : outside)
            for (int v : outside) {
              if (u == v) continue;
              VertexSet g2 = h | bit(u) | bit(v);
              if (is_prime(induce(t, g2))) continue;
              if (kind[u] == 0 && kind[v] == 0) {
                if (!homog_in(t, bit(u) | bit(v), g2))
                  return std::string("extender pair not homogeneous");
              } else if (kind[u] == 1 && kind[v] != 1) {
                if (!homog_in(t, h | bit(v), g2))
                  return std::string("absorbed extension not homogeneous");
              } else if (kind[u] == 2 && !(kind[v] == 2 && anchor[v] == anchor[u])) {
                if (!homog_in(t, bit(u) | bit(anchor[u]), g2))
                  return std::string("clone pair not homogeneous");
              }
            }
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_2_8",
      "inside a prime tournament every prime subtournament grows by two vertices",
      7,
      [](int eff) { return canon_text(5, eff, "prime canonical tournaments"); },
      [](int eff) {
        return canon_universe(5, eff, [](const Tournament& t) { return is_prime(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = t.size();
        VertexSet V = t.vertices();
        for (VertexSet h = 0; h <= V; ++h) {
          int k = popcount(h);
          if (k < 3 || k > n - 2 || !is_prime(induce(t, h))) continue;
          auto [a, b] = grow_by_two(t, h);
          if (a >= b || a < 0 || b >= n || has_bit(h, a) || has_bit(h, b))
            return std::string("grown pair invalid");
          if (!is_prime(induce(t, h | bit(a) | bit(b))))
            return std::string("grown set not prime");
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_2_9",
      "every prime tournament on at least 5 vertices holds a 5-vertex prime subtournament",
      7,
      [](int eff) { return canon_text(5, eff, "prime canonical tournaments"); },
      [](int eff) {
        return canon_universe(5, eff, [](const Tournament& t) { return is_prime(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        VertexSet s = find_prime5(in.t);
        if ((s & ~in.t.vertices()) || popcount(s) != 5) return std::string("bad witness set");
        Tournament sub = induce(in.t, s);
        if (!is_prime(sub)) return std::string("witness not prime");
        if (!recognize_TUW(sub)) return std::string("5-vertex prime outside the three families");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_2_10",
      "one-vertex shrinking of a prime tournament succeeds exactly outside T/U/W",
      7,
      [](int eff) { return canon_text(5, eff, "prime canonical tournaments"); },
      [](int eff) {
        return canon_universe(5, eff, [](const Tournament& t) { return is_prime(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        bool tuw = recognize_TUW(t).has_value();
        auto s = shrink_prime(t, 1);
        if (s.has_value() == tuw)
          return tuw ? std::string("critical family member shrinks by one")
                     : std::string("no one-vertex shrink outside the critical families");
        if (s) {
          if ((*s & ~t.vertices()) || popcount(*s) != t.size() - 1)
            return std::string("bad shrink witness");
          if (!is_prime(induce(t, *s))) return std::string("shrink witness not prime");
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_2_11",
      "every 7-vertex prime shrinks by two vertices to a prime subtournament",
      7,
      [](int eff) { return canon_text(7, eff, "prime canonical tournaments"); },
      [](int eff) {
        if (eff < 7) return Universe{};
        return canon_universe(7, 7, [](const Tournament& t) { return is_prime(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        auto s = shrink_prime(in.t, 2);
        if (!s) return std::string("no two-vertex shrink");
        if ((*s & ~in.t.vertices()) || popcount(*s) != in.t.size() - 2)
          return std::string("bad shrink witness");
        if (!is_prime(induce(in.t, *s))) return std::string("shrink witness not prime");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_3_1",
      "outside T/U/W a prime subtournament on 5 or more vertices grows one vertex at a time",
      7,
      [](int eff) { return canon_text(6, eff, "prime canonical tournaments outside T/U/W"); },
      [](int eff) {
        return canon_universe(6, eff, [](const Tournament& t) {
          return is_prime(t) && !recognize_TUW(t).has_value();
        });
      },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = t.size();
        VertexSet V = t.vertices();
        for (VertexSet h = 0; h <= V; ++h) {
          int k = popcount(h);
          if (k < 5 || k > n - 1 || !is_prime(induce(t, h))) continue;
          VertexSet s = grow_by_one(t, h);
          if ((s & ~V) || popcount(s) != k + 1) return std::string("bad grow witness");
          Tournament sub = induce(t, s);
          if (!is_prime(sub)) return std::string("grown set not prime");
          if (!contains_induced(sub, induce(t, h)))
            return std::string("grown set loses the given subtournament");
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_3_2",
      "each weave type forces the predicted structure, with and without an apex vertex",
      7,
      [](int eff) { return canon_text(1, eff, "constructed weaves (all four types)"); },
      [](int eff) { return weave_universe(1, eff); },
      check_weave_rows,
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_3_3",
      "prime weaves are T_n or U_n; prime apex extensions are T, U or W",
      7,
      [](int eff) { return canon_text(2, eff, "constructed weaves (all four types)"); },
      [](int eff) { return weave_universe(2, eff); },
      check_prime_weaves,
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_3_4",
      "deleting two adjacent positions of a weave preserves every type it has",
      8,
      [](int eff) { return canon_text(2, eff, "constructed weaves (all four types)"); },
      [](int eff) { return weave_universe(2, eff); },
      check_weave_deletion,
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_3_8",
      "a prime tournament on at least 3 vertices avoids the dominated 3-cycle exactly when "
      "it is T_n",
      7,
      [](int eff) { return canon_text(3, eff, "prime canonical tournaments"); },
      [](int eff) {
        return canon_universe(3, eff, [](const Tournament& t) { return is_prime(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        bool free4 = !contains_induced(in.t, make_family(Family::D4, 4)).has_value();
        auto r = recognize_TUW(in.t);
        bool is_t = r && r->first == Family::T;
        if (free4 && !is_t) return std::string("no dominated 3-cycle yet not T_n");
        if (!free4 && is_t) return std::string("dominated 3-cycle inside T_n");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_3_9",
      "tournaments without the dominated 3-cycle carry the layered circle structure",
      7,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        auto c = d4_classify(t);
        bool free4 = !contains_induced(t, make_family(Family::D4, 4)).has_value();
        if (free4) {
          if (!c.structure) return std::string("no structure for a diamond-free tournament");
          if (!validate_d4_structure(t, *c.structure))
            return std::string("structure fails validation");
        } else {
          if (c.structure) return std::string("structure reported despite a dominated 3-cycle");
          if (popcount(c.d4_witness) != 4 ||
              !are_isomorphic(induce(t, c.d4_witness), make_family(Family::D4, 4)))
            return std::string("witness does not induce the dominated 3-cycle");
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_4_1",
      "strongly connected prime tournaments are triangle-connected",
      7,
      [](int eff) { return canon_text(1, eff, "strongly connected prime canonical tournaments"); },
      [](int eff) {
        return canon_universe(1, eff, [](const Tournament& t) {
          return is_prime(t) && is_strongly_connected(t);
        });
      },
      [](const Instance& in) -> std::optional<std::string> {
        if (!is_triangle_connected(in.t)) return std::string("prime but not triangle-connected");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_4_2",
      "a strongly connected tournament is triangle-connected exactly when no nontrivial "
      "homogeneous set holds a cyclic triangle",
      6,
      [](int eff) { return canon_text(1, eff, "strongly connected canonical tournaments"); },
      [](int eff) {
        return canon_universe(1, eff,
                              [](const Tournament& t) { return is_strongly_connected(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        bool tc = is_triangle_connected(t);
        auto tris = cyclic_triangles(t);
        bool covered = false;
        for (VertexSet x : proper_homogeneous_sets(t)) {
          if (popcount(x) < 3) continue;
          for (const Triangle& tr : tris)
            if ((tri_mask(tr) & x) == tri_mask(tr)) {
              covered = true;
              break;
            }
          if (covered) break;
        }
        if (tc == covered)
          return tc ? std::string("triangle-connected despite a triangle in a homogeneous set")
                    : std::string("not triangle-connected without a triangle in a homogeneous set");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "triangle_cover",
      "in a strongly connected tournament on at least 3 vertices every vertex lies on a "
      "cyclic triangle",
      7,
      [](int eff) { return canon_text(3, eff, "strongly connected canonical tournaments"); },
      [](int eff) {
        return canon_universe(3, eff,
                              [](const Tournament& t) { return is_strongly_connected(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        VertexSet cov = 0;
        for (const Triangle& tr : cyclic_triangles(in.t)) cov |= tri_mask(tr);
        if (cov != in.t.vertices()) return std::string("vertex outside every cyclic triangle");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_5_1",
      "in a matching ordering the 1-based position of an indegree-b vertex is b, b+1 or b+2 "
      "according to its backedge role",
      7,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = t.size();
        for (const VertexOrdering& o : enumerate_matching_orderings(t)) {
          int heads[kMaxVertices] = {0};
          int tails[kMaxVertices] = {0};
          for (auto [later, earlier] : backedges(t, o)) {
            ++tails[later];
            ++heads[earlier];
          }
          for (int q = 0; q < n; ++q) {
            if (heads[q] + tails[q] > 1) return std::string("ordering is not matching");
            int b = t.in_degree(o[q]);
            int want = heads[q] ? b : tails[q] ? b + 2 : b + 1;
            if (q + 1 != want) return std::string("indegree does not pin the position");
          }
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_5_2",
      "a cycle moving every element at most two steps is the block cycle, its inverse, or a "
      "distance-2 swap",
      7,
      [](int eff) { return canon_text(1, eff, "all permutations, one instance per size"); },
      [](int eff) {
        Universe u;
        for (int n = 1; n <= eff; ++n)
          u.push_back({make_family(Family::I, n), "permutations of " + std::to_string(n), 0, {}});
        return u;
      },
      [](const Instance& in) -> std::optional<std::string> {
        int n = in.t.size();
        std::vector<int> p = identity_ordering(n);
        do {
          bool small = true;
          for (int i = 0; i < n && small; ++i)
            if (std::abs(p[i] - i) > 2) small = false;
          if (!small) continue;
          std::vector<char> seen(n, 0);
          std::vector<int> cyc;
          int cycles = 0;
          for (int i = 0; i < n && cycles <= 1; ++i) {
            if (seen[i]) continue;
            if (p[i] == i) {
              seen[i] = 1;
              continue;
            }
            ++cycles;
            if (cycles > 1) break;
            cyc.clear();
            int j = i;
            do {
              seen[j] = 1;
              cyc.push_back(j);
              j = p[j];
            } while (j != i);
          }
          if (cycles != 1) continue;
          int k = static_cast<int>(cyc.size());
          int lo = *std::min_element(cyc.begin(), cyc.end());
          int hi = *std::max_element(cyc.begin(), cyc.end());
          bool ok = false;
          if (hi - lo + 1 == k) {
            auto sp = sigma_perm(k);
            auto spi = sigma_perm_inverse(k);
            bool m1 = true, m2 = true;
            for (int i = 0; i < k; ++i) {
              if (p[lo + i] != lo + sp[i]) m1 = false;
              if (p[lo + i] != lo + spi[i]) m2 = false;
            }
            ok = m1 || m2;
          }
          if (!ok && k == 2 && std::abs(cyc[0] - cyc[1]) == 2) ok = true;
          if (!ok) return std::string("short-step cycle outside the standard forms");
        } while (std::next_permutation(p.begin(), p.end()));
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "prop_5_3",
      "applying the block cycle (or its inverse, or tau at size 4) to a matching ordering "
      "forces the predicted single-block presentation",
      7,
      [](int eff) { return canon_text(2, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(2, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = t.size();
        struct Want {
          std::vector<int> perm;
          SigmaKind kind;
        };
        std::vector<Want> wants = {{sigma_perm(n), SigmaKind::Sigma},
                                   {sigma_perm_inverse(n), SigmaKind::SigmaInv}};
        if (n == 4) wants.push_back({tau_perm(4), SigmaKind::Tau});
        for (const VertexOrdering& o : enumerate_matching_orderings(t))
          for (const Want& w : wants) {
            if (!is_matching_ordering(t, apply_perm(o, w.perm))) continue;
            auto d = decompose_ordering_pair(t, o, w.perm);
            if (d.blocks.size() != 1) return std::string("full-size map split into blocks");
            const OrderingBlock& b = d.blocks[0];
            if (b.begin != 0 || b.size != n) return std::string("block does not span");
            bool kind_ok = b.sigma == w.kind;
            // at size 2 the cycle equals its inverse; either kind is right
            if (n == 2 && (b.sigma == SigmaKind::Sigma || b.sigma == SigmaKind::SigmaInv))
              kind_ok = true;
            if (!kind_ok) return std::string("block kind mismatch");
          }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_5_4",
      "any two matching orderings differ by a tiling of identity, cycle, inverse-cycle and "
      "tau blocks",
      6,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = t.size();
        auto ords = enumerate_matching_orderings(t);
        std::vector<int> pos(n);
        for (const VertexOrdering& o : ords) {
          for (int i = 0; i < n; ++i) pos[o[i]] = i;
          for (const VertexOrdering& o2 : ords) {
            std::vector<int> pi(n);
            for (int i = 0; i < n; ++i) pi[i] = pos[o2[i]];
            auto d = decompose_ordering_pair(t, o, pi);
            int cursor = 0;
            for (const OrderingBlock& b : d.blocks) {
              if (b.begin != cursor || b.size < 1) return std::string("blocks do not tile");
              cursor += b.size;
              bool ident = true;
              for (int i = b.begin; i < b.begin + b.size; ++i)
                if (pi[i] != i) ident = false;
              if ((b.sigma == SigmaKind::Identity) != ident)
                return std::string("identity kind mismatch");
              if (b.sigma == SigmaKind::Tau && b.size != 4) return std::string("tau block size");
            }
            if (cursor != n) return std::string("blocks do not cover");
          }
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_5_5",
      "a prime tournament not isomorphic to P_n has at most one matching ordering",
      7,
      [](int eff) { return canon_text(1, eff, "prime canonical tournaments"); },
      [](int eff) {
        return canon_universe(1, eff, [](const Tournament& t) { return is_prime(t); });
      },
      [](const Instance& in) -> std::optional<std::string> {
        int n = in.t.size();
        if (are_isomorphic(in.t, make_family(Family::P, n))) return std::nullopt;
        if (count_matching_orderings(in.t) > 1)
          return std::string("several matching orderings outside the path family");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_5_6",
      "matching-ordering counts of P_1..P_8 are 1, 2, 3, 3, 2, 2, 2, 2",
      8,
      [](int eff) {
        int m = std::min(eff, 8);
        std::ostringstream s;
        s << "P_1..P_" << m << "; counts";
        for (int n = 1; n <= m; ++n)
          s << (n == 1 ? " " : ", ") << count_matching_orderings(make_family(Family::P, n));
        return s.str();
      },
      [](int eff) {
        static const int counts[9] = {0, 1, 2, 3, 3, 2, 2, 2, 2};
        Universe u;
        for (int n = 1; n <= std::min(eff, 8); ++n)
          u.push_back(
              {make_family(Family::P, n), "P_" + std::to_string(n), 0, {n, counts[n]}});
        return u;
      },
      [](const Instance& in) -> std::optional<std::string> {
        auto c = count_matching_orderings(in.t);
        if (c != static_cast<std::uint64_t>(in.params[1]))
          return "count " + std::to_string(c) + ", expected " + std::to_string(in.params[1]);
        if (in.params[0] <= 7 && brute_matching_count(in.t) != c)
          return std::string("search count disagrees with the full sweep");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "cor_5_7",
      "matching-ordering counts of transitive tournaments follow the Fibonacci numbers",
      9,
      [](int eff) {
        int m = std::min(eff, 9);
        std::ostringstream s;
        s << "I_1..I_" << m << "; counts";
        for (int n = 1; n <= m; ++n)
          s << (n == 1 ? " " : ", ") << count_matching_orderings(make_family(Family::I, n));
        return s.str();
      },
      [](int eff) {
        static const int fib[10] = {0, 1, 2, 3, 5, 8, 13, 21, 34, 55};
        Universe u;
        for (int n = 1; n <= std::min(eff, 9); ++n)
          u.push_back({make_family(Family::I, n), "I_" + std::to_string(n), 0, {n, fib[n]}});
        return u;
      },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = in.params[0];
        auto c = count_matching_orderings(t);
        if (c != static_cast<std::uint64_t>(in.params[1]))
          return "count " + std::to_string(c) + ", expected " + std::to_string(in.params[1]);
        if (n <= 7 && brute_matching_count(t) != c)
          return std::string("search count disagrees with the full sweep");
        // the disjoint-adjacent-swap products give the 2^(n/2) lower bound
        int half = n / 2;
        std::set<VertexOrdering> swaps;
        for (std::uint32_t m = 0; m < (1u << half); ++m) {
          VertexOrdering o = identity_ordering(n);
          for (int j = 0; j < half; ++j)
            if ((m >> j) & 1) std::swap(o[2 * j], o[2 * j + 1]);
          if (!is_matching_ordering(t, o)) return std::string("swap product not matching");
          swaps.insert(o);
        }
        if (swaps.size() != (std::size_t{1} << half))
          return std::string("swap products collide");
        if (c < swaps.size()) return std::string("count below the swap-product bound");
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_5_8",
      "Q_7 and Q_9 are minimally non-matching, and Q_7 appears in the small catalog",
      9,
      [](int eff) {
        return eff < 7 ? std::string("Q_n members (empty: limit below 7 vertices)")
                       : (eff < 9 ? std::string("Q_7") : std::string("Q_7 and Q_9"));
      },
      [](int eff) {
        Universe u;
        for (int n = 7; n <= std::min(eff, 9); n += 2)
          u.push_back({make_family(Family::Q, n), "Q_" + std::to_string(n), 0, {n}});
        return u;
      },
      [](const Instance& in) -> std::optional<std::string> {
        if (!is_minimal_non_matching(in.t)) return std::string("not minimally non-matching");
        return std::nullopt;
      },
      [](int eff) -> std::vector<std::string> {
        if (eff < 7) return {};
        auto codes = minimal_non_matching_up_to(7);
        std::string want = canonical_code(make_family(Family::Q, 7));
        if (std::find(codes.begin(), codes.end(), want) != codes.end()) return {};
        return {make_family(Family::Q, 7).to_line() + "  # missing from the minimal catalog"};
      },
  });

  reg.push_back(SuiteDef{
      "tuw_prime",
      "T_n, U_n and W_n are prime and their prime subtournaments stay in the same family",
      9,
      [](int eff) { return canon_text(3, eff, "T/U/W members (odd sizes)"); },
      [](int eff) {
        Universe u;
        for (int n = 3; n <= std::min(eff, 9); n += 2)
          for (int k = 0; k < 3; ++k)
            u.push_back({make_family(kTUW[k], n),
                         family_name(kTUW[k]) + "_" + std::to_string(n), 0, {k, n}});
        return u;
      },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        Family f = kTUW[in.params[0]];
        int n = t.size();
        if (!is_prime(t)) return std::string("family member not prime");
        std::vector<char> found(n + 1, 0);
        VertexSet V = t.vertices();
        for (VertexSet s = 0; s <= V; ++s) {
          int m = popcount(s);
          if (m < 3 || m >= n) continue;
          Tournament sub = induce(t, s);
          if (!is_prime(sub)) continue;
          if (m % 2 == 0) return std::string("even-size prime subtournament");
          if (!are_isomorphic(sub, make_family(f, m)))
            return std::string("prime subtournament leaves the family");
          found[m] = 1;
        }
        for (int m = 3; m < n; m += 2)
          if (!found[m])
            return std::string("no prime subtournament on ") + std::to_string(m) + " vertices";
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_6_1",
      "J_4-free tournaments admit orderings with backedge length under the fixed bound; "
      "short-backedge orderings exclude long J patterns",
      7,
      [](int eff) { return canon_text(1, eff, "canonical tournaments"); },
      [](int eff) { return canon_universe(1, eff); },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        int n = t.size();
        if (!has_pattern(t, Pattern::J, 4)) {
          BoundedOrdering bo = bounded_backedge_ordering(t, 4);
          if (!is_valid_ordering(t, bo.order)) return std::string("construction not an ordering");
          if (bo.max_backedge != max_backedge_length(t, bo.order))
            return std::string("reported backedge length off");
          if (bo.max_backedge > backedge_length_bound(4))
            return std::string("backedge bound exceeded");
        }
        if (has_pattern(t, Pattern::J, 5) && is_transitive(t))
          return std::string("transitive despite a J_5");
        VertexOrdering p = identity_ordering(n);
        std::optional<VertexOrdering> adjacent;
        do {
          bool ok = true;
          for (int j = 2; j < n && ok; ++j)
            for (int i = 0; i + 2 <= j; ++i)
              if (t.has_edge(p[j], p[i])) {
                ok = false;
                break;
              }
          if (ok) {
            adjacent = p;
            break;
          }
        } while (std::next_permutation(p.begin(), p.end()));
        if (adjacent) {
          if (!check_converse_J(t, *adjacent, 1))
            return std::string("long J inside a short-backedge tournament");
          if (has_pattern(t, Pattern::J, 5))
            return std::string("J_5 admits an ordering with only adjacent backedges");
        }
        return std::nullopt;
      },
      nullptr,
  });

  reg.push_back(SuiteDef{
      "thm_6_2",
      "K_4/Kstar_4-free tournaments split into an odd circle of J-bounded parts, and such "
      "arrangements stay K-free",
      8,
      [](int eff) {
        std::ostringstream s;
        s << canon_text(1, std::min(eff, 7), "K_4- and Kstar_4-free canonical tournaments");
        s << " plus odd circle arrangements of transitive parts on <= " << std::min(eff, 8)
          << " vertices";
        return s.str();
      },
      [](int eff) {
        Universe u = canon_universe(1, std::min(eff, 7), [](const Tournament& t) {
          return !has_pattern(t, Pattern::K, 4) && !has_pattern(t, Pattern::Kstar, 4);
        });
        for (int r = 1; r <= 5; r += 2) {
          std::vector<int> sizes;
          std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == r) {
              std::vector<Tournament> blocks;
              for (int s : sizes) blocks.push_back(make_family(Family::I, s));
              Tournament t = substitute(make_family(Family::T, r), blocks);
              u.push_back({t,
                           "T_" + std::to_string(r) + " with transitive parts " +
                               join_ints(sizes),
                           1, sizes});
              return;
            }
            for (int s = 1; s + (r - pos - 1) <= left; ++s) {
              sizes.push_back(s);
              rec(pos + 1, left - s);
              sizes.pop_back();
            }
          };
          rec(0, std::min(eff, 8));
        }
        return u;
      },
      [](const Instance& in) -> std::optional<std::string> {
        const Tournament& t = in.t;
        if (in.tag == 1) {
          int r = static_cast<int>(in.params.size());
          std::vector<VertexSet> parts;
          int off = 0;
          for (int s : in.params) {
            parts.push_back(mask_range1(off + 1, off + s));
            off += s;
          }
          if (has_pattern(t, Pattern::K, 4)) return std::string("K_4 in the arrangement");
          if (has_pattern(t, Pattern::Kstar, 4))
            return std::string("Kstar_4 in the arrangement");
          if (!check_converse_K(t, r, parts, 3))
            return std::string("converse check rejected the arrangement");
          return std::nullopt;
        }
        NoKnWitness w = noKn_construct(t, 4);
        if (w.trivial) {
          if (w.m_parts.size() != 1 || w.m_parts[0] != t.vertices() || !w.n_parts.empty())
            return std::string("malformed trivial witness");
        } else {
          int p = static_cast<int>(w.n_parts.size());
          if (p < 1 || static_cast<int>(w.m_parts.size()) != p + 1)
            return std::string("witness block counts off");
          std::vector<VertexSet> ordered(w.m_parts.begin(), w.m_parts.end());
          ordered.insert(ordered.end(), w.n_parts.begin(), w.n_parts.end());
          if (auto err = check_t_parts(t, 2 * p + 1, ordered)) return err;
          VertexSet mset = 0;
          for (VertexSet x : w.m_parts) mset |= x;
          if (static_cast<int>(w.m_order.size()) != popcount(mset))
            return std::string("spine ordering size off");
          VertexSet seen = 0;
          for (int v : w.m_order) {
            if (v < 0 || v >= t.size() || !has_bit(mset, v) || has_bit(seen, v))
              return std::string("spine ordering not a permutation of its block");
            seen |= bit(v);
          }
          for (std::size_t q = 0; q < w.m_order.size(); ++q)
            for (std::size_t i = 0; i < q; ++i)
              if (t.has_edge(w.m_order[q], w.m_order[i]) &&
                  static_cast<std::int64_t>(q - i) > backedge_length_bound(4))
                return std::string("spine backedge bound exceeded");
        }
        StructureDecomposition sd = kn_free_decompose(t);
        if (sd.parts.size() != sd.part_max_j.size()) return std::string("part annotations off");
        if (auto err = check_t_parts(t, sd.r, sd.parts)) return err;
        int worst = 0;
        for (std::size_t i = 0; i < sd.parts.size(); ++i) {
          int mj = max_pattern_size(induce(t, sd.parts[i]), Pattern::J);
          if (mj != sd.part_max_j[i]) return std::string("per-part J size off");
          worst = std::max(worst, mj);
        }
        if (sd.j_freeness() != std::max(3, worst + 1)) return std::string("freeness level off");
        if (sd.r == 1) {
          auto tree = decompose(t);
          if (!tree.leaf()) {
            int rq = tree.quotient.size();
            if (rq >= 3 && rq % 2 == 1 && are_isomorphic(tree.quotient, make_family(Family::T, rq)))
              return std::string("maximal circle arrangement missed");
          }
        }
        return std::nullopt;
      },
      nullptr,
  });

  return reg;
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> reg = build_registry();
  return reg;
}

const SuiteDef* find_suite(const std::string& id) {
  for (const SuiteDef& def : registry())
    if (id == def.id) return &def;
  return nullptr;
}

}  // namespace

std::string VerificationReport::to_text(bool include_elapsed) const {
  std::ostringstream s;
  s << "theorem_id: " << theorem_id << "\n";
  s << "universe: " << universe << "\n";
  s << "checked: " << checked << "\n";
  s << "failures: " << failures.size() << "\n";
  for (const std::string& f : failures) s << f << "\n";
  s << "status: " << (passed() ? "pass" : "fail") << "\n";
  if (include_elapsed)
    s << "elapsed_seconds: " << std::fixed << std::setprecision(3) << elapsed_seconds << "\n";
  return s.str();
}

VerificationReport run_suite(const std::string& theorem_id, int max_n, int jobs) {
  const SuiteDef* def = find_suite(theorem_id);
  if (!def) throw std::invalid_argument("unknown theorem id: " + theorem_id);
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  int eff = std::min(max_n, def->hi);
  auto start = std::chrono::steady_clock::now();
  Universe universe = def->build(eff);
  std::vector<std::optional<std::string>> results(universe.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = def->check(universe[i]);
    } catch (const std::exception& e) {
      results[i] = std::string(e.what());
    }
  };
  std::size_t workers = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
  workers = std::min(workers, universe.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < universe.size(); ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < universe.size(); i += workers) run_one(i);
      });
    for (std::thread& th : pool) th.join();
  }
  VerificationReport rep;
  rep.theorem_id = def->id;
  rep.universe = def->universe_text(eff);
  rep.checked = universe.size();
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!results[i]) continue;
    std::string line = universe[i].t.to_line();
    std::string ctx = universe[i].note;
    if (!ctx.empty() && !results[i]->empty()) ctx += "; ";
    ctx += *results[i];
    if (!ctx.empty()) line += "  # " + ctx;
    rep.failures.push_back(line);
  }
  if (def->post)
    for (std::string& f : def->post(eff)) rep.failures.push_back(std::move(f));
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const SuiteDef& def : registry()) ids.push_back(def.id);
  return ids;
}

std::string suite_description(const std::string& theorem_id) {
  const SuiteDef* def = find_suite(theorem_id);
  if (!def) throw std::invalid_argument("unknown theorem id: " + theorem_id);
  return def->description;
}

}  // namespace tourney
