#include "tourney/tournament.hpp"

#include <algorithm>

namespace tourney {

std::vector<int> set_elements(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = lowest_bit(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

Tournament::Tournament(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count must be in 1..16");
  for (int i = 0; i < n_; ++i) out_[i] = full_set(n_) & ~full_set(i + 1);
}

void Tournament::set_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("set_edge needs two distinct vertices");
  out_[u] |= bit(v);
  out_[v] &= ~bit(u);
}

int pair_index(int n, int i, int j) {
  // pairs with first coordinate < i come first: sum_{r<i} (n-1-r)
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::string Tournament::bit_string() const {
  std::string s;
  s.reserve(n_ * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s.push_back(has_edge(i, j) ? '1' : '0');
  return s;
}

std::string Tournament::to_line() const { return std::to_string(n_) + ":" + bit_string(); }

Tournament Tournament::parse(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.pop_back();
  std::size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw std::invalid_argument("empty tournament line");
  s = s.substr(start);

  std::size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("tournament line needs 'n:<bits>'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad vertex count in tournament line");
  }
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count must be in 1..16");

  std::string bits = s.substr(colon + 1);
  if ((int)bits.size() != n * (n - 1) / 2)
    throw std::invalid_argument("expected " + std::to_string(n * (n - 1) / 2) + " orientation bits");

  Tournament t(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      char c = bits[k++];
      if (c == '1')
        t.set_edge(i, j);
      else if (c == '0')
        t.set_edge(j, i);
      else
        throw std::invalid_argument("orientation bits must be 0 or 1");
    }
  return t;
}

Direction edge_direction(const Tournament& t, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= t.size() || v >= t.size())
    throw std::invalid_argument("edge_direction needs two distinct vertices");
  return t.has_edge(u, v) ? Direction::Forward : Direction::Backward;
}

Tournament induce(const Tournament& t, VertexSet s) {
  if (!s || (s & ~t.vertices())) throw std::invalid_argument("induce: set must be a nonempty subset");
  std::vector<int> verts = set_elements(s);
  Tournament r((int)verts.size());
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (t.has_edge(verts[b], verts[a])) r.set_edge((int)b, (int)a);
  return r;
}

Tournament substitute(const Tournament& g, const std::vector<Tournament>& parts) {
  if ((int)parts.size() != g.size())
    throw std::invalid_argument("substitute: need one part per quotient vertex");
  int total = 0;
  std::vector<int> offset(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = total;
    total += parts[i].size();
  }
  if (total > kMaxVertices) throw std::invalid_argument("substitute: result exceeds 16 vertices");

  Tournament r(total);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int a = 0; a < parts[i].size(); ++a)
      for (int b = a + 1; b < parts[i].size(); ++b)
        if (parts[i].has_edge(b, a)) r.set_edge(offset[i] + b, offset[i] + a);
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      bool fwd = g.has_edge((int)i, (int)j);
      for (int a = 0; a < parts[i].size(); ++a)
        for (int b = 0; b < parts[j].size(); ++b) {
          if (fwd)
            r.set_edge(offset[i] + a, offset[j] + b);
          else
            r.set_edge(offset[j] + b, offset[i] + a);
        }
    }
  }
  return r;
}

namespace {

// Transitive closure by bitmask saturation; n <= 16 keeps this trivial.
std::array<VertexSet, kMaxVertices> reach_sets(const Tournament& t) {
  std::array<VertexSet, kMaxVertices> reach{};
  for (int v = 0; v < t.size(); ++v) {
    VertexSet r = bit(v);
    for (;;) {
      VertexSet grown = r;
      VertexSet frontier = r;
      while (frontier) {
        int u = lowest_bit(frontier);
        frontier &= frontier - 1;
        grown |= t.out_set(u);
      }
      if (grown == r) break;
      r = grown;
    }
    reach[v] = r;
  }
  return reach;
}

}  // namespace

std::vector<VertexSet> strong_components(const Tournament& t) {
  auto reach = reach_sets(t);
  std::vector<VertexSet> comps;
  VertexSet done = 0;
  for (int v = 0; v < t.size(); ++v) {
    if (has_bit(done, v)) continue;
    VertexSet comp = 0;
    for (int u = v; u < t.size(); ++u)
      if (has_bit(reach[v], u) && has_bit(reach[u], v)) comp |= bit(u);
    comps.push_back(comp);
    done |= comp;
  }
  // condensation of a tournament is a total order: sort so S_i => S_j for i<j
  std::sort(comps.begin(), comps.end(), [&](VertexSet a, VertexSet b) {
    return t.has_edge(lowest_bit(a), lowest_bit(b));
  });
  return comps;
}

bool is_strongly_connected(const Tournament& t) { return strong_components(t).size() == 1; }

bool is_transitive(const Tournament& t) {
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) {
      if (i == j || !t.has_edge(i, j)) continue;
      // out-neighborhoods must nest along edges
      if (t.out_set(j) & ~t.out_set(i)) return false;
    }
  return true;
}

bool is_valid_ordering(const Tournament& t, const VertexOrdering& o) {
  if ((int)o.size() != t.size()) return false;
  VertexSet seen = 0;
  for (int v : o) {
    if (v < 0 || v >= t.size() || has_bit(seen, v)) return false;
    seen |= bit(v);
  }
  return true;
}

std::vector<std::pair<int, int>> backedges(const Tournament& t, const VertexOrdering& o) {
  if (!is_valid_ordering(t, o)) throw std::invalid_argument("backedges: not an ordering of t");
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < (int)o.size(); ++j)
    for (int i = 0; i < j; ++i)
      if (t.has_edge(o[j], o[i])) out.emplace_back(j, i);
  return out;
}

int max_backedge_length(const Tournament& t, const VertexOrdering& o) {
  int best = 0;
  for (auto [j, i] : backedges(t, o)) best = std::max(best, j - i);
  return best;
}

std::vector<int> score_sequence(const Tournament& t) {
  std::vector<int> s(t.size());
  for (int v = 0; v < t.size(); ++v) s[v] = t.out_degree(v);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace tourney
