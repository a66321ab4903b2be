#include <doctest.h>

#include <bit>
#include <random>

#include "ktds/cover_search.hpp"
#include "ktds/error.hpp"
#include "oracle.hpp"

using namespace ktds;

namespace {

bool satisfies(const CoverProblem& p, Mask chosen) {
  for (std::size_t c = 0; c < p.sets.size(); ++c) {
    if (std::popcount(p.sets[c] & chosen) < p.demand[c]) return false;
  }
  return true;
}

/// Best value and the lexicographically least / greatest optimal member lists.
struct Naive {
  int value = -1;
  std::vector<std::size_t> least;
  std::vector<std::size_t> greatest;
};

Naive naive(const CoverProblem& p) {
  Naive out;
  for (Mask s = 0; s < (Mask{1} << p.items); ++s) {
    if (!satisfies(p, s)) continue;
    const int size = std::popcount(s);
    const auto members = oracle::members(s);
    if (out.value < 0 || size < out.value) {
      out = {size, members, members};
    } else if (size == out.value) {
      out.least = std::min(out.least, members);
      out.greatest = std::max(out.greatest, members);
    }
  }
  return out;
}

CoverProblem random_problem(std::mt19937_64& rng) {
  CoverProblem p;
  p.items = 1 + rng() % 12;
  const std::size_t constraints = rng() % 10;
  for (std::size_t c = 0; c < constraints; ++c) {
    const Mask set = rng() & rng() & ((Mask{1} << p.items) - 1);
    p.sets.push_back(set);
    p.demand.push_back(static_cast<int>(rng() % 4) - 1);
  }
  return p;
}

}  // namespace

TEST_CASE("a tiny cover") {
  CoverProblem p;
  p.items = 4;
  p.sets = {0b0011, 0b0110, 0b1100};
  p.demand = {1, 1, 1};
  const auto s = solve_min_cover(p);
  REQUIRE(s);
  CHECK(s->value == 2);
  CHECK(satisfies(p, s->chosen));

  CoverOptions least;
  least.tie_break = TieBreak::lex_least;
  CHECK(solve_min_cover(p, least)->chosen == 0b0101);  // {0, 2}
  CoverOptions greatest;
  greatest.tie_break = TieBreak::lex_greatest;
  CHECK(solve_min_cover(p, greatest)->chosen == 0b1010);  // {1, 3}
}

TEST_CASE("infeasible and empty problems") {
  CoverProblem p;
  p.items = 3;
  p.sets = {0b011};
  p.demand = {3};
  CHECK_FALSE(cover_feasible(p));
  CHECK_FALSE(solve_min_cover(p).has_value());

  CoverProblem none;
  none.items = 5;
  const auto s = solve_min_cover(none);
  REQUIRE(s);
  CHECK(s->value == 0);
  CHECK(s->chosen == 0);
}

TEST_CASE("size caps") {
  CoverProblem p;
  p.items = 65;
  CHECK_THROWS_AS(solve_min_cover(p), SizeCapExceeded);

  CoverProblem q;
  q.items = 64;
  q.sets.assign(65, 1);
  q.demand.assign(65, 1);
  CHECK_THROWS_AS(solve_min_cover(q), SizeCapExceeded);
  q.demand.back() = 0;  // constraints without demand do not count
  CHECK(solve_min_cover(q)->value == 1);
}

TEST_CASE("agrees with exhaustive enumeration on random problems") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const CoverProblem p = random_problem(rng);
    const Naive expected = naive(p);
    for (unsigned threads : {1U, 3U}) {
      CoverOptions any;
      any.threads = threads;
      const auto s = solve_min_cover(p, any);
      if (expected.value < 0) {
        REQUIRE_FALSE(s.has_value());
        continue;
      }
      REQUIRE(s.has_value());
      REQUIRE(s->value == expected.value);
      REQUIRE(satisfies(p, s->chosen));
    }
    if (expected.value < 0) continue;
    CoverOptions least;
    least.tie_break = TieBreak::lex_least;
    CHECK(oracle::members(solve_min_cover(p, least)->chosen) == expected.least);
    CoverOptions greatest;
    greatest.tie_break = TieBreak::lex_greatest;
    CHECK(oracle::members(solve_min_cover(p, greatest)->chosen) == expected.greatest);
  }
}

TEST_CASE("value is independent of the worker count") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    CoverProblem p;
    p.items = 40;
    for (int c = 0; c < 40; ++c) {
      p.sets.push_back(rng() & rng() & ((Mask{1} << 40) - 1));
      p.demand.push_back(2);
    }
    const auto one = solve_min_cover(p);
    for (unsigned threads : {2U, 4U}) {
      CoverOptions o;
      o.threads = threads;
      const auto many = solve_min_cover(p, o);
      REQUIRE(one.has_value() == many.has_value());
      if (one) {
        CHECK(one->value == many->value);
        CHECK(satisfies(p, many->chosen));
      }
    }
  }
}
