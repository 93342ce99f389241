#include "tourney/matching.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tourney/enumeration.hpp"
#include "tourney/families.hpp"
#include "tourney/homog.hpp"
#include "tourney/isomorphism.hpp"

namespace tourney {

namespace {

/// Position-law backtracking. A vertex of indegree b placed at 0-based
/// position p must satisfy b in {p-1, p, p+1}: b == p+1 makes it the head of
/// exactly one backedge arriving from a later position, b == p-1 the tail of
/// exactly one backedge already formed, b == p untouched. The indegree
/// arithmetic closes every case on its own, so no completion check is needed.
struct Search {
  const Tournament& t;
  int n;
  bool stop_at_first;
  std::size_t max_witnesses;
  std::uint64_t count = 0;
  std::vector<VertexOrdering> witnesses;
  VertexOrdering order;
  VertexSet used = 0;
  std::array<bool, kMaxVertices> open_head{};  // placed heads still waiting

  Search(const Tournament& t, bool stop, std::size_t maxw)
      : t(t), n(t.size()), stop_at_first(stop), max_witnesses(maxw), order(n, -1) {}

  bool dfs(int p) {
    if (p == n) {
      ++count;
      if (witnesses.size() < max_witnesses) witnesses.push_back(order);
      return stop_at_first;
    }
    for (int v = 0; v < n; ++v) {
      if (has_bit(used, v)) continue;
      int b = t.in_degree(v);
      if (b < p - 1 || b > p + 1) continue;
      int tails = 0, hit = -1;
      for (int q = 0; q < p && tails < 2; ++q)
        if (t.has_edge(v, order[q])) {
          ++tails;
          hit = order[q];
        }
      if (b == p - 1) {
        if (tails != 1 || !open_head[hit]) continue;
        open_head[hit] = false;
        order[p] = v;
        used |= bit(v);
        if (dfs(p + 1)) return true;
        used &= ~bit(v);
        open_head[hit] = true;
      } else {
        if (tails != 0) continue;
        open_head[v] = (b == p + 1);
        order[p] = v;
        used |= bit(v);
        if (dfs(p + 1)) return true;
        used &= ~bit(v);
        open_head[v] = false;
      }
    }
    return false;
  }
};

/// All orderings b of h with h.has_edge(b[x], b[y]) matching pattern's (x,y)
/// orientation for every pair, i.e. the labelings under which h reads exactly
/// like pattern.
std::vector<VertexOrdering> pattern_orderings(const Tournament& h, const Tournament& pattern) {
  std::vector<VertexOrdering> out;
  int n = h.size();
  VertexOrdering perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x + 1; y < n && ok; ++y)
        ok = h.has_edge(perm[x], perm[y]) == pattern.has_edge(x, y);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

VertexOrdering transitive_ordering(const Tournament& h) {
  VertexOrdering o(h.size());
  std::iota(o.begin(), o.end(), 0);
  std::sort(o.begin(), o.end(),
            [&](int a, int b) { return h.out_degree(a) > h.out_degree(b); });
  return o;
}

}  // namespace

bool is_matching_ordering(const Tournament& t, const VertexOrdering& o) {
  std::array<int, kMaxVertices> touched{};
  for (auto [later, earlier] : backedges(t, o)) {
    if (++touched[later] > 1 || ++touched[earlier] > 1) return false;
  }
  return true;
}

std::optional<VertexOrdering> find_matching_ordering(const Tournament& t) {
  Search s(t, true, 1);
  s.dfs(0);
  if (s.witnesses.empty()) return std::nullopt;
  return s.witnesses.front();
}

std::uint64_t count_matching_orderings(const Tournament& t) {
  Search s(t, false, 0);
  s.dfs(0);
  return s.count;
}

std::vector<VertexOrdering> enumerate_matching_orderings(const Tournament& t) {
  Search s(t, false, std::numeric_limits<std::size_t>::max());
  s.dfs(0);
  return s.witnesses;
}

MatchingReport matching_report(const Tournament& t, std::size_t max_witnesses) {
  Search s(t, false, max_witnesses);
  s.dfs(0);
  return {s.count, std::move(s.witnesses)};
}

std::vector<int> sigma_perm(int size) {
  if (size < 1) throw std::invalid_argument("sigma_perm: empty interval");
  std::vector<int> seq;
  for (int x = 0; x < size; x += 2) seq.push_back(x);
  if (size % 2 == 0) seq.push_back(size - 1);
  for (int x = (size % 2 == 0) ? size - 3 : size - 2; x >= 1; x -= 2) seq.push_back(x);
  std::vector<int> sig(size);
  for (int i = 0; i < size; ++i) sig[seq[i]] = seq[(i + 1) % size];
  return sig;
}

std::vector<int> sigma_perm_inverse(int size) { return invert_perm(sigma_perm(size)); }

std::vector<int> tau_perm(int size) {
  if (size != 4) throw std::invalid_argument("tau_perm: interval must have size 4");
  return {2, 3, 0, 1};
}

std::vector<int> pi1_perm(int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  for (int x = 0; x + 1 < size; x += 2) std::swap(p[x], p[x + 1]);
  return p;
}

std::vector<int> pi2_perm(int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  for (int x = 1; x + 1 < size; x += 2) std::swap(p[x], p[x + 1]);
  return p;
}

std::vector<int> compose_perms(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

VertexOrdering apply_perm(const VertexOrdering& o, const std::vector<int>& pi) {
  VertexOrdering out(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) out[i] = o[pi[i]];
  return out;
}

BlockDecomposition decompose_ordering_pair(const Tournament& t, const VertexOrdering& o,
                                           const std::vector<int>& pi) {
  int n = t.size();
  if (static_cast<int>(pi.size()) != n)
    throw std::invalid_argument("decompose_ordering_pair: permutation size mismatch");
  VertexSet seen = 0;
  for (int x : pi) {
    if (x < 0 || x >= n || has_bit(seen, x))
      throw std::invalid_argument("decompose_ordering_pair: not a permutation");
    seen |= bit(x);
  }
  if (!is_matching_ordering(t, o))
    throw std::invalid_argument("decompose_ordering_pair: first ordering is not matching");
  if (!is_matching_ordering(t, apply_perm(o, pi)))
    throw std::invalid_argument("decompose_ordering_pair: second ordering is not matching");

  BlockDecomposition out;
  int begin = 0, running_max = -1;
  for (int x = 0; x < n; ++x) {
    running_max = std::max(running_max, pi[x]);
    if (running_max != x) continue;  // interval not yet closed under pi
    int size = x - begin + 1;
    std::vector<int> local(size);
    for (int i = 0; i < size; ++i) {
      local[i] = pi[begin + i] - begin;
      if (std::abs(local[i] - i) > 2)
        throw InternalError("block permutation moves a position by 3+ in " + t.to_line());
    }
    OrderingBlock block{begin, size, SigmaKind::Identity, BlockShape::Transitive};
    if (size == 1) {
      block.sigma = SigmaKind::Identity;
    } else if (local == sigma_perm(size)) {
      block.sigma = SigmaKind::Sigma;
    } else if (local == sigma_perm_inverse(size)) {
      block.sigma = SigmaKind::SigmaInv;
    } else if (size == 4 && local == tau_perm(4)) {
      block.sigma = SigmaKind::Tau;
    } else {
      throw InternalError("block permutation is not a recognized cycle in " + t.to_line());
    }

    VertexSet vset = 0;
    for (int i = 0; i < size; ++i) vset |= bit(o[begin + i]);
    if (!is_homogeneous(t, vset))
      throw InternalError("ordering block is not homogeneous in " + t.to_line());

    Tournament hi = induce(t, vset);
    std::vector<int> elems = set_elements(vset);
    if (size >= 3) {
      std::vector<VertexOrdering> bases;
      if (is_transitive(hi)) {
        block.shape = BlockShape::Transitive;
        bases = {transitive_ordering(hi)};
      } else if (are_isomorphic(hi, make_family(Family::P, size))) {
        block.shape = BlockShape::PathLike;
        bases = pattern_orderings(hi, make_family(Family::P, size));
      } else {
        throw InternalError("ordering block is neither transitive nor path-like in " +
                            t.to_line());
      }
      if (block.sigma == SigmaKind::Tau && block.shape != BlockShape::PathLike)
        throw InternalError("tau block is not path-like in " + t.to_line());

      VertexOrdering lo(size);  // the o-induced ordering in hi's local ids
      for (int i = 0; i < size; ++i) {
        int v = o[begin + i];
        lo[i] = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), v) - elems.begin());
      }
      std::vector<std::vector<int>> perms;
      if (block.sigma == SigmaKind::Sigma) perms = {pi2_perm(size)};
      if (block.sigma == SigmaKind::SigmaInv) perms = {pi1_perm(size)};
      if (block.sigma == SigmaKind::Tau)
        perms = {pi2_perm(4), compose_perms(pi2_perm(4), pi1_perm(4))};
      bool presented = false;
      for (const auto& base : bases) {
        for (const auto& perm : perms)
          if (apply_perm(base, perm) == lo) {
            presented = true;
            break;
          }
        if (presented) break;
      }
      if (!presented)
        throw InternalError("ordering block has an unexpected presentation in " + t.to_line());
    }
    out.blocks.push_back(block);
    begin = x + 1;
  }
  return out;
}

bool is_minimal_non_matching(const Tournament& t) {
  if (find_matching_ordering(t)) return false;
  for (int v = 0; v < t.size(); ++v) {
    if (!find_matching_ordering(induce(t, t.vertices() & ~bit(v)))) return false;
  }
  return true;
}

std::vector<std::string> minimal_non_matching_up_to(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("minimal_non_matching_up_to: need 1 <= n <= 8");
  std::vector<std::string> out;
  for (int m = 1; m <= n; ++m)
    for (const Tournament& rep : canonical_tournaments(m))
      if (is_minimal_non_matching(rep)) out.push_back(canonical_code(rep));
  return out;
}

}  // namespace tourney
