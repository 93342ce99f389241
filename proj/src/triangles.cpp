#include "tourney/triangles.hpp"

#include <numeric>

namespace tourney {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Triangle> cyclic_triangles(const Tournament& t) {
  std::vector<Triangle> out;
  int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        bool ab = t.has_edge(a, b), bc = t.has_edge(b, c), ca = t.has_edge(c, a);
        if (ab == bc && bc == ca) out.push_back({a, b, c});
      }
  return out;
}

std::vector<std::vector<Triangle>> triangle_components(const Tournament& t) {
  std::vector<Triangle> tris = cyclic_triangles(t);
  int m = static_cast<int>(tris.size());
  int n = t.size();
  // One bucket node per unordered vertex pair; triangles sharing a pair (and
  // hence exactly two vertices) meet in its bucket.
  Dsu dsu(m + n * n);
  auto bucket = [&](int u, int v) { return m + u * n + v; };
  for (int i = 0; i < m; ++i) {
    dsu.unite(i, bucket(tris[i].a, tris[i].b));
    dsu.unite(i, bucket(tris[i].a, tris[i].c));
    dsu.unite(i, bucket(tris[i].b, tris[i].c));
  }
  std::vector<std::vector<Triangle>> comps;
  std::vector<int> comp_of_root(m + n * n, -1);
  for (int i = 0; i < m; ++i) {
    int root = dsu.find(i);
    if (comp_of_root[root] < 0) {
      comp_of_root[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of_root[root]].push_back(tris[i]);
  }
  return comps;
}

bool is_triangle_connected(const Tournament& t) {
  if (!is_strongly_connected(t)) return false;
  return triangle_components(t).size() <= 1;
}

}  // namespace tourney
