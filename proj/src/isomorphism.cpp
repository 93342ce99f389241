#include "tourney/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>

namespace tourney {

namespace {

bool extend_map(const Tournament& a, const Tournament& b, std::vector<int>& img,
                VertexSet& used, int k) {
  int n = a.size();
  if (k == n) return true;
  for (int w = 0; w < n; ++w) {
    if (has_bit(used, w)) continue;
    if (a.out_degree(k) != b.out_degree(w)) continue;
    bool consistent = true;
    for (int i = 0; i < k; ++i)
      if (a.has_edge(i, k) != b.has_edge(img[i], w)) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    img[k] = w;
    used |= bit(w);
    if (extend_map(a, b, img, used, k + 1)) return true;
    used &= ~bit(w);
  }
  return false;
}

// Maximizes the layered bit sequence over relabelings. Segment k packs the
// orientations between position k and positions 0..k-1, bit (k-1-i) set when
// position i beats position k, so integer order on a segment is lexicographic
// order on its bits. During the search best[] always matches the current
// prefix: a strictly better segment overwrites best[k] and zero-fills the
// deeper segments (any completion only raises them), a worse one is pruned,
// so at the end best[] holds the greatest reachable sequence.
struct CanonSearch {
  const Tournament& t;
  int n;
  std::array<std::uint32_t, kMaxVertices> best{};
  std::array<int, kMaxVertices> order{};

  explicit CanonSearch(const Tournament& tt) : t(tt), n(tt.size()) {}

  std::uint32_t segment(int k, int v) const {
    std::uint32_t seg = 0;
    for (int i = 0; i < k; ++i)
      if (t.has_edge(order[i], v)) seg |= std::uint32_t{1} << (k - 1 - i);
    return seg;
  }

  void dfs(int k, VertexSet placed) {
    if (k == n) return;
    std::array<std::pair<std::uint32_t, int>, kMaxVertices> cand;
    int cnt = 0;
    for (int v = 0; v < n; ++v)
      if (!has_bit(placed, v)) cand[cnt++] = {segment(k, v), v};
    std::sort(cand.begin(), cand.begin() + cnt,
              [](const std::pair<std::uint32_t, int>& x,
                 const std::pair<std::uint32_t, int>& y) { return x.first > y.first; });
    std::uint32_t top = cand[0].first;
    if (top < best[k]) return;
    if (top > best[k]) {
      best[k] = top;
      for (int d = k + 1; d < n; ++d) best[d] = 0;
    }
    for (int c = 0; c < cnt && cand[c].first == top; ++c) {
      order[k] = cand[c].second;
      dfs(k + 1, placed | bit(cand[c].second));
    }
  }
};

}  // namespace

std::optional<std::vector<int>> isomorphic(const Tournament& a, const Tournament& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> img(a.size(), -1);
  VertexSet used = 0;
  if (extend_map(a, b, img, used, 0)) return img;
  return std::nullopt;
}

bool are_isomorphic(const Tournament& a, const Tournament& b) {
  return isomorphic(a, b).has_value();
}

Tournament canonical_form(const Tournament& t) {
  CanonSearch search(t);
  search.dfs(0, 0);
  Tournament out(t.size());
  for (int k = 0; k < t.size(); ++k)
    for (int i = 0; i < k; ++i) {
      if (search.best[k] >> (k - 1 - i) & 1u)
        out.set_edge(i, k);
      else
        out.set_edge(k, i);
    }
  return out;
}

std::string canonical_code(const Tournament& t) { return canonical_form(t).bit_string(); }

std::optional<VertexSet> contains_induced(const Tournament& t, const Tournament& pattern) {
  int n = t.size();
  int m = pattern.size();
  if (m > n) return std::nullopt;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    VertexSet s = 0;
    for (int x : idx) s |= bit(x);
    if (are_isomorphic(induce(t, s), pattern)) return s;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tourney
