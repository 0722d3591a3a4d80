#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <string>

namespace hexwalk {

// Exact element of Q(zeta_48) in the power basis 1, z, ..., z^15, where
// z = exp(2*pi*i/48) and z^16 = z^8 - 1 (48th cyclotomic polynomial
// x^16 - x^8 + 1, degree phi(48) = 16). Coordinates are exact rationals;
// values are immutable once built and safe to share across threads.
class Cyclo {
 public:
  static constexpr int kDegree = 16;

  Cyclo() = default;  // zero
  explicit Cyclo(long n) { c_[0] = n; }
  explicit Cyclo(const mpq_class& r) { c_[0] = r; }

  // z^(k mod 48), reduced to the power basis.
  static Cyclo root48(long k);

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  Cyclo operator-() const;
  Cyclo scaled(const mpq_class& r) const;

  bool operator==(const Cyclo& o) const;
  bool is_zero() const;

  // Coordinate-wise z^k -> z^{-k}; fixes exactly the real subfield.
  Cyclo conjugate() const;

  const mpq_class& coord(int i) const { return c_[i]; }

  // Floating evaluation for display and cross-checks only; exact
  // verification paths never call this.
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  std::array<mpq_class, kDegree> c_{};
  friend Cyclo inverse(const Cyclo&);
};

// Multiplicative inverse via the extended Euclidean algorithm in
// Q[x]/(x^16 - x^8 + 1). Throws std::domain_error on zero.
Cyclo inverse(const Cyclo& a);

Cyclo pow(Cyclo base, unsigned long e);

// y_j = exp(2*pi*i*(6j+1)/48) = z^(6j+1), a primitive 48th root of unity
// solving zeta^2 y^-4 + zeta^-2 y^4 = 0. Requires 0 <= j <= 7.
Cyclo y_root(int j);

// x_c = 1/(2 cos(pi/8)), the critical step weight.
Cyclo critical_weight();

Cyclo two_cos_pi_8();  // z^3 + z^45
Cyclo cos_3pi_8();     // (z^9 + z^39)/2
Cyclo cos_pi_4();      // (z^6 + z^42)/2

}  // namespace hexwalk
