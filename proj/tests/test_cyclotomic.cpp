#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hexwalk/cyclotomic.hpp"

using namespace hexwalk;

namespace {

Cyclo random_element(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> coef(-9, 9);
  while (true) {
    Cyclo out;
    for (int i = 0; i < Cyclo::kDegree; ++i)
      out += Cyclo::root48(i).scaled(mpq_class(coef(rng)));
    if (!nonzero || !out.is_zero()) return out;
  }
}

double abs_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b);
}

}  // namespace

TEST_CASE("defining reduction of the 48th root") {
  CHECK(Cyclo::root48(0) == Cyclo(1));
  CHECK(Cyclo::root48(48) == Cyclo(1));
  CHECK((Cyclo::root48(16) - Cyclo::root48(8) + Cyclo(1)).is_zero());
  CHECK(Cyclo::root48(3) * Cyclo::root48(45) == Cyclo(1));
  CHECK(Cyclo::root48(24) == -Cyclo(1));
  CHECK(Cyclo::root48(-3) == Cyclo::root48(45));
}

TEST_CASE("field laws on random elements") {
  std::mt19937 rng(987654);
  for (int t = 0; t < 100; ++t) {
    const Cyclo a = random_element(rng), b = random_element(rng),
                c = random_element(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("inverse on random nonzero elements") {
  std::mt19937 rng(13579);
  for (int t = 0; t < 100; ++t) {
    const Cyclo a = random_element(rng, true);
    CHECK(a * inverse(a) == Cyclo(1));
  }
  CHECK(inverse(Cyclo::root48(5)) == Cyclo::root48(43));
  CHECK_THROWS_AS(inverse(Cyclo()), std::domain_error);
}

TEST_CASE("critical weight") {
  const Cyclo xc = critical_weight();
  CHECK(xc * two_cos_pi_8() == Cyclo(1));
  CHECK(inverse(xc) == two_cos_pi_8());
  CHECK(abs_err(xc.to_complex(), {0.5411961001461970, 0.0}) < 1e-12);
  CHECK(xc.conjugate() == xc);  // real
}

TEST_CASE("y roots solve the defining equation and are primitive") {
  const Cyclo zeta = Cyclo::root48(8);
  for (int j = 0; j <= 7; ++j) {
    const Cyclo y = y_root(j);
    CHECK(y == Cyclo::root48(6L * j + 1));
    const Cyclo y4 = pow(y, 4);
    CHECK((zeta * zeta * inverse(y4) + inverse(zeta * zeta) * y4).is_zero());
    Cyclo p(1);
    for (int k = 1; k < 48; ++k) {
      p *= y;
      CHECK_FALSE(p == Cyclo(1));
    }
    CHECK(p * y == Cyclo(1));
  }
  CHECK(y_root(7) == Cyclo::root48(43));
  CHECK_THROWS_AS(y_root(8), std::out_of_range);
  CHECK_THROWS_AS(y_root(-1), std::out_of_range);
}

TEST_CASE("2 Re(zeta^4 y_7) equals minus 2 cos(pi/8)") {
  const Cyclo z4y7 = Cyclo::root48(32) * y_root(7);
  const Cyclo two_re = z4y7 + inverse(z4y7);
  CHECK(two_re == -two_cos_pi_8());
}

TEST_CASE("cosine constants match floating oracles") {
  CHECK(abs_err(two_cos_pi_8().to_complex(),
                {2.0 * std::cos(M_PI / 8.0), 0.0}) < 1e-12);
  CHECK(abs_err(cos_3pi_8().to_complex(), {std::cos(3.0 * M_PI / 8.0), 0.0}) <
        1e-12);
  CHECK(abs_err(cos_pi_4().to_complex(), {std::cos(M_PI / 4.0), 0.0}) < 1e-12);
  CHECK(abs_err(Cyclo::root48(12).to_complex(), {0.0, 1.0}) < 1e-12);
}

TEST_CASE("to_complex is multiplicative within float tolerance") {
  std::mt19937 rng(24680);
  for (int t = 0; t < 100; ++t) {
    const Cyclo a = random_element(rng), b = random_element(rng);
    CHECK(abs_err((a * b).to_complex(), a.to_complex() * b.to_complex()) <
          1e-9 * (1.0 + std::abs(a.to_complex()) * std::abs(b.to_complex())));
  }
}

TEST_CASE("exactness survives deep products") {
  // (z^5 + 1/3)^32 evaluated two ways.
  const Cyclo base = Cyclo::root48(5) + Cyclo(mpq_class(1, 3));
  Cyclo serial(1);
  for (int i = 0; i < 32; ++i) serial *= base;
  CHECK(serial == pow(base, 32));
  CHECK(pow(base, 32) * inverse(pow(base, 16)) == pow(base, 16));
}
