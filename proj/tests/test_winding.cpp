#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hexwalk/enumerate.hpp"
#include "hexwalk/winding.hpp"
#include "oracles.hpp"

using namespace hexwalk;

namespace {
const Walk kHexagon{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 2}, {0, 1}, {0, 0}};
}

TEST_CASE("hook weights at the origin") {
  // Entering (0,0) from (1,0), then turning up or down.
  const Edge in({1, 0}, {0, 0});
  CHECK(hook_weight(in, Edge({0, 0}, {0, 1}), {0, 0}) == -1);
  CHECK(hook_weight(in, Edge({0, 0}, {0, -1}), {0, 0}) == 1);
}

TEST_CASE("a hook and its reversal have opposite weights") {
  for (std::int64_t p = -3; p <= 3; ++p)
    for (std::int64_t q = -3; q <= 3; ++q) {
      const Vertex c{p, q};
      const auto ns = neighbors(c);
      for (Vertex a : ns)
        for (Vertex b : ns) {
          if (a == b) continue;
          const Walk h{a, c, b};
          CHECK(winding(h) == -winding(reversed(h)));
          CHECK(hook_weight(Edge(a, c), Edge(c, b), c) == winding(h));
        }
    }
}

TEST_CASE("hook_weight rejects malformed input") {
  const Edge e({0, 0}, {1, 0});
  CHECK_THROWS_AS(hook_weight(e, e, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(hook_weight(e, Edge({5, 5}, {5, 6}), {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("single-edge walks have winding zero") {
  CHECK(winding(Walk{{0, 0}, {1, 0}}) == 0);
  CHECK(winding(Walk{{0, 0}, {0, 1}}) == 0);
}

TEST_CASE("winding rejects malformed walks") {
  CHECK_THROWS_AS(winding(Walk{{0, 0}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(winding(Walk{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(winding(Walk{{0, 0}, {1, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("reversal negates winding over the full enumeration up to length 8") {
  for_each_free_saw({0, 0}, 8, [](const Walk& w) {
    CHECK(winding(reversed(w)) == -winding(w));
  });
}

TEST_CASE("winding is bounded by the hook count") {
  for_each_free_saw({0, 0}, 8, [](const Walk& w) {
    CHECK(std::llabs(winding(w)) <= static_cast<long long>(w.size()) - 2);
  });
}

TEST_CASE("winding adds over splits plus the joining hook") {
  std::mt19937 rng(20240811);
  std::vector<Walk> pool;
  for_each_free_saw({0, 0}, 9, [&](const Walk& w) {
    if (w.size() >= 4 && pool.size() < 4000) pool.push_back(w);
  });
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const Walk& w = pool[pick(rng)];
    std::uniform_int_distribution<std::size_t> cut(1, w.size() - 2);
    const std::size_t i = cut(rng);
    const Walk w1(w.begin(), w.begin() + i + 1);
    const Walk w2(w.begin() + i, w.end());
    const Walk hook{w[i - 1], w[i], w[i + 1]};
    CHECK(winding(w) == winding(w1) + winding(w2) + winding(hook));
  }
}

TEST_CASE("zeta^r equals the exponent difference of the end edges") {
  for_each_free_saw({0, 0}, 8, [](const Walk& w) {
    const int first = step_exponent(w[0], w[1]);
    const int last = step_exponent(w[w.size() - 2], w.back());
    CHECK(((winding(w) % 6) + 6) % 6 == (last - first + 6) % 6);
  });
}

TEST_CASE("the hexagonal face has complete winding +-6") {
  CHECK(complete_winding(kHexagon) == 6);
  CHECK(complete_winding(reversed(kHexagon)) == -6);
}

TEST_CASE("complete_winding requires a closed walk") {
  CHECK_THROWS_AS(complete_winding(Walk{{0, 0}, {1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("closed SAW census: lengths below the girth are empty") {
  CHECK(oracles::naive_girth({0, 0}, 7) == 6);
  const ClosedCensus census = closed_saw_census({0, 0}, 14);
  CHECK(census.begin()->first == 6);
}

TEST_CASE("every closed SAW up to length 14 has complete winding +-6") {
  const ClosedCensus census = closed_saw_census({0, 0}, 14);
  REQUIRE(!census.empty());
  for (const auto& [len, byr] : census) {
    REQUIRE(byr.size() == 2);
    CHECK(byr.count(6) == 1);
    CHECK(byr.count(-6) == 1);
    CHECK(byr.at(6) == byr.at(-6));  // one per traversal direction
    CHECK(len % 2 == 0);
  }
  // A vertex of a cubic plane graph lies on three faces, each traversed in
  // both directions.
  CHECK(census.at(6).at(6) == 3);
  CHECK(census.at(6).at(-6) == 3);
  // 10-cycles are the boundaries of two-face dominoes; 3*6 pairs with a face
  // at the origin minus the 3 pairs counted from both sides.
  CHECK(census.at(10).at(6) == 15);
  CHECK(census.count(7) == 0);
  CHECK(census.count(8) == 0);  // no 8-cycles in a hexagonal tiling
}

TEST_CASE("complete winding of any enumerated closed walk is divisible by 6") {
  for (const auto& [len, byr] : closed_saw_census({0, 0}, 12))
    for (const auto& [rstar, count] : byr) CHECK(rstar % 6 == 0);
}
