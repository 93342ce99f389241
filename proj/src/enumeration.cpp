#include "tourney/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tourney/isomorphism.hpp"

namespace tourney {

std::vector<Tournament> enumerate_canonical(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_canonical: need 1 <= n <= 8");
  std::vector<Tournament> reps = {Tournament(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Tournament> next;
    for (const Tournament& base : reps) {
      // vertex m-1 joins; bit j of mask = (m-1) -> j
      for (VertexSet mask = 0; mask < full_set(m - 1) + 1; ++mask) {
        Tournament t(m);
        for (int i = 0; i < m - 1; ++i)
          for (int j = i + 1; j < m - 1; ++j)
            if (base.has_edge(j, i)) t.set_edge(j, i);
        for (int j = 0; j < m - 1; ++j)
          if (has_bit(mask, j))
            t.set_edge(m - 1, j);
          else
            t.set_edge(j, m - 1);
        Tournament canon = canonical_form(t);
        next.emplace(canon.bit_string(), canon);
      }
    }
    reps.clear();
    for (auto& [code, t] : next) reps.push_back(t);
  }
  return reps;
}

const std::vector<Tournament>& canonical_tournaments(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Tournament>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_canonical(n)).first;
  return it->second;
}

std::vector<Tournament> labeled_tournaments(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("labeled_tournaments: need 1 <= n <= 6");
  int pairs = n * (n - 1) / 2;
  std::vector<Tournament> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << pairs); ++word) {
    Tournament t(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++idx)
        if (((word >> idx) & 1) == 0) t.set_edge(j, i);
    out.push_back(t);
  }
  return out;
}

}  // namespace tourney
