#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/isomorphism.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

TEST_CASE("labeled_tournaments is the full 2^C(n,2) sweep") {
  CHECK(labeled_tournaments(1).size() == 1);
  CHECK(labeled_tournaments(3).size() == 8);
  CHECK(labeled_tournaments(5).size() == 1024);
  auto all = labeled_tournaments(4);
  CHECK(all.size() == 64);
  std::set<std::string> lines;
  for (const Tournament& t : all) lines.insert(t.to_line());
  CHECK(lines.size() == 64);
  CHECK_THROWS_AS(labeled_tournaments(7), std::invalid_argument);
}

TEST_CASE("enumerate_canonical counts") {
  const std::size_t want[] = {1, 1, 2, 4, 12, 56};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_canonical(n).size() == want[n - 1]);
  CHECK_THROWS_AS(enumerate_canonical(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_canonical(9), std::invalid_argument);
}

TEST_CASE("canonical stream entries are sorted canonical fixpoints") {
  for (int n = 1; n <= 6; ++n) {
    auto reps = enumerate_canonical(n);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(canonical_form(reps[i]) == reps[i]);
      if (i) CHECK(canonical_code(reps[i - 1]) < canonical_code(reps[i]));
    }
  }
}

TEST_CASE("canonical stream matches labeled enumeration plus dedup") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> dedup;
    for (const Tournament& t : labeled_tournaments(n)) dedup.insert(canonical_code(t));
    auto reps = enumerate_canonical(n);
    CHECK(reps.size() == dedup.size());
    for (const Tournament& t : reps) CHECK(dedup.count(canonical_code(t)) == 1);
  }
}

TEST_CASE("canonical_tournaments caches a stable reference") {
  const auto& a = canonical_tournaments(5);
  const auto& b = canonical_tournaments(5);
  CHECK(&a == &b);
  CHECK(a.size() == 12);
}
