#include "tourney/families.hpp"

namespace tourney {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Tournament circle(int n) {  // T_n, n = 2k+1
  int k = (n - 1) / 2;
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= k; ++d) t.set_edge(i, (i + d) % n);
  return t;
}

Tournament single_backedge(int n, int from, int to) {  // transitive order, one reversed pair
  Tournament t(n);
  t.set_edge(from, to);
  return t;
}

}  // namespace

Tournament make_family(Family kind, int n) {
  require(n >= 1 && n <= kMaxVertices, "family size out of range");
  switch (kind) {
    case Family::I:
      return Tournament(n);
    case Family::T:
      require(n % 2 == 1, "T_n needs odd n");
      return circle(n);
    case Family::U: {
      require(n % 2 == 1, "U_n needs odd n");
      Tournament t = circle(n);
      int k = (n - 1) / 2;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (t.has_edge(i, j))
            t.set_edge(j, i);
          else
            t.set_edge(i, j);
        }
      return t;
    }
    case Family::W: {
      require(n % 2 == 1, "W_n needs odd n");
      Tournament t(n);  // first n-1 vertices already transitive
      for (int i = 0; i < n - 1; ++i) {
        // 1-based index i+1: even positions beat the last vertex, odd lose
        if ((i + 1) % 2 == 0)
          t.set_edge(i, n - 1);
        else
          t.set_edge(n - 1, i);
      }
      return t;
    }
    case Family::P: {
      Tournament t(n);
      for (int i = 0; i + 1 < n; ++i) t.set_edge(i + 1, i);
      return t;
    }
    case Family::Q: {
      require(n >= 3, "Q_n needs n >= 3");
      Tournament t(n);
      for (int i = 0; i + 1 <= n - 3; ++i) t.set_edge(i + 1, i);
      t.set_edge(n - 2, 0);
      t.set_edge(n - 1, n - 3);
      return t;
    }
    case Family::J:
      require(n >= 3, "J_n needs n >= 3");
      return single_backedge(n, n - 1, 0);
    case Family::K:
      require(n >= 3, "K_n needs n >= 3");
      return single_backedge(n, n - 1, 1);
    case Family::Kstar:
      require(n >= 3, "Kstar_n needs n >= 3");
      return single_backedge(n, n - 2, 0);
    case Family::D4: {
      require(n == 4, "D4 has exactly 4 vertices");
      Tournament t(4);  // vertex 0 dominates the cycle 1 -> 2 -> 3 -> 1
      t.set_edge(3, 1);
      return t;
    }
    case Family::D4star: {
      require(n == 4, "D4star has exactly 4 vertices");
      Tournament t(4);
      t.set_edge(1, 0);
      t.set_edge(2, 0);
      t.set_edge(3, 0);
      t.set_edge(3, 1);
      return t;
    }
    case Family::C3: {
      require(n == 3, "C3 has exactly 3 vertices");
      Tournament t(3);
      t.set_edge(2, 0);
      return t;
    }
  }
  throw std::invalid_argument("unknown family");
}

std::string family_name(Family kind) {
  switch (kind) {
    case Family::I: return "I";
    case Family::T: return "T";
    case Family::U: return "U";
    case Family::W: return "W";
    case Family::P: return "P";
    case Family::Q: return "Q";
    case Family::J: return "J";
    case Family::K: return "K";
    case Family::Kstar: return "Kstar";
    case Family::D4: return "D4";
    case Family::D4star: return "D4star";
    case Family::C3: return "C3";
  }
  return "?";
}

}  // namespace tourney
