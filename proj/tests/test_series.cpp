#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hexwalk/series.hpp"

using namespace hexwalk;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> power(1, order), dir(0, 5), count(-5, 5);
  std::uniform_int_distribution<long long> wind(-10, 10);
  TruncatedSeries s(order);
  for (int t = 0; t < 40; ++t)
    s.add_term(power(rng), TermKey{dir(rng), wind(rng)}, count(rng));
  return s;
}

}  // namespace

TEST_CASE("add_term keeps the sparse form canonical") {
  TruncatedSeries s(4);
  s.add_term(2, {1, 5}, 7);
  s.add_term(2, {1, 5}, -7);
  CHECK(s == TruncatedSeries(4));

  s.add_term(3, {2, -1}, 1);
  s.add_term(3, {2, -1}, 1);
  TruncatedSeries twice(4);
  twice.add_term(3, {2, -1}, 2);
  CHECK(s == twice);

  s.add_term(1, {0, 0}, 0);  // no-op
  CHECK(s == twice);

  CHECK_THROWS_AS(s.add_term(5, {0, 0}, 1), std::out_of_range);
  CHECK_THROWS_AS(s.add_term(0, {0, 0}, 1), std::out_of_range);
}

TEST_CASE("keys fold through zeta^3 = -1") {
  TruncatedSeries a(2), b(2);
  a.add_term(1, {3, 0}, 1);
  b.add_term(1, {0, 0}, -1);
  CHECK(a == b);
  a.add_term(2, {5, 4}, 2);
  b.add_term(2, {2, 4}, -2);
  CHECK(a == b);
}

TEST_CASE("monomial shifts") {
  std::mt19937 rng(777);
  const TruncatedSeries s = random_series(rng, 8);

  SUBCASE("identity shift is a no-op") { CHECK(s.shifted(0, 0, 0, +1) == s); }

  SUBCASE("shifts compose additively and signs multiply") {
    const auto once = s.shifted(1, -2, 1, +1).shifted(2, 3, -4, -1);
    const auto direct = s.shifted(3, 1, -3, -1);
    CHECK(once == direct);
    const auto swapped = s.shifted(2, 3, -4, -1).shifted(1, -2, 1, +1);
    CHECK(once == swapped);
  }

  SUBCASE("terms pushed past the order disappear") {
    TruncatedSeries t(3);
    t.add_term(3, {0, 0}, 5);
    CHECK(t.shifted(1, 0, 0, +1) == TruncatedSeries(3));
  }
}

TEST_CASE("shift against a hand-expanded product") {
  // (x*3*zeta^2*y^5 - 7*x^2*zeta^5*y^-2) * x*zeta^-2*y
  TruncatedSeries s(4);
  s.add_term(1, {2, 5}, 3);
  s.add_term(2, {5, -2}, -7);
  const TruncatedSeries shifted = s.shifted(1, -2, 1, +1);
  TruncatedSeries expected(4);
  expected.add_term(2, {0, 6}, 3);
  expected.add_term(3, {3, -1}, -7);
  CHECK(shifted == expected);
}

TEST_CASE("specialization of single terms") {
  TruncatedSeries s(2);
  s.add_term(1, {3, 0}, 1);  // zeta^3 = -1
  for (int j = 0; j <= 7; ++j) {
    const auto values = s.specialize(j);
    CHECK(values[0] == -Cyclo(1));
    CHECK(values[1].is_zero());
  }
}

TEST_CASE("specializing the zero series gives zeros") {
  const auto values = TruncatedSeries(5).specialize(3);
  for (const Cyclo& v : values) CHECK(v.is_zero());
}

TEST_CASE("specialize commutes with add_term") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> power(1, 6), dir(0, 5), count(-5, 5),
      jdist(0, 7);
  std::uniform_int_distribution<long long> wind(-60, 60);
  for (int t = 0; t < 50; ++t) {
    TruncatedSeries s = random_series(rng, 6);
    const int j = jdist(rng);
    auto before = s.specialize(j);
    const int n = power(rng);
    const TermKey key{dir(rng), wind(rng)};
    const int c = count(rng);
    s.add_term(n, key, c);
    auto after = s.specialize(j);
    CoeffMap lone;
    lone.add(key, c);
    before[static_cast<std::size_t>(n - 1)] += lone.specialize(j);
    for (std::size_t i = 0; i < after.size(); ++i)
      CHECK(before[i] == after[i]);
  }
}

TEST_CASE("specialize is compatible with monomial shifts") {
  std::mt19937 rng(5150);
  for (int t = 0; t < 20; ++t) {
    const TruncatedSeries s = random_series(rng, 6);
    const int j = t % 8;
    const auto shifted_vals = s.shifted(1, 2, -1, +1).specialize(j);
    const auto base_vals = s.specialize(j);
    // x * zeta^2 * y^-1 multiplies the value and moves it up one power.
    const Cyclo factor =
        Cyclo::root48(16) * inverse(Cyclo::root48(6L * j + 1));
    CHECK(shifted_vals[0].is_zero());
    for (std::size_t n = 1; n < shifted_vals.size(); ++n)
      CHECK(shifted_vals[n] == base_vals[n - 1] * factor);
  }
}
