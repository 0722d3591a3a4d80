#include "hexwalk/cyclotomic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hexwalk {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// Reduce a polynomial in z of degree < len in place, using
// z^k = z^{k-8} - z^{k-16} for k >= 16, and truncate to degree < 16.
void fold(std::vector<mpq_class>& c) {
  for (std::size_t k = c.size(); k-- > Cyclo::kDegree;) {
    if (c[k] == 0) continue;
    c[k - 8] += c[k];
    c[k - 16] -= c[k];
    c[k] = 0;
  }
  c.resize(Cyclo::kDegree);
}

}  // namespace

Cyclo Cyclo::root48(long k) {
  k %= 48;
  if (k < 0) k += 48;
  Cyclo out;
  if (k < kDegree) {
    out.c_[k] = 1;
    return out;
  }
  std::vector<mpq_class> c(static_cast<std::size_t>(k) + 1);
  c[static_cast<std::size_t>(k)] = 1;
  fold(c);
  for (int i = 0; i < kDegree; ++i) out.c_[i] = c[i];
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  for (int i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  std::vector<mpq_class> prod(2 * kDegree - 1);
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < kDegree; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  fold(prod);
  for (int i = 0; i < kDegree; ++i) c_[i] = prod[i];
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo out;
  for (int i = 0; i < kDegree; ++i) out.c_[i] = -c_[i];
  return out;
}

Cyclo Cyclo::scaled(const mpq_class& r) const {
  Cyclo out;
  for (int i = 0; i < kDegree; ++i) out.c_[i] = c_[i] * r;
  return out;
}

bool Cyclo::operator==(const Cyclo& o) const {
  for (int i = 0; i < kDegree; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool Cyclo::is_zero() const {
  for (int i = 0; i < kDegree; ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclo Cyclo::conjugate() const {
  Cyclo out;
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    out += root48(-i).scaled(c_[i]);
  }
  return out;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z = 0;
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    const double a = kTau * i / 48.0;
    z += c_[i].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

using Poly = std::vector<mpq_class>;  // coefficients, lowest degree first

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

// a -= q * b for monomial q = coef * x^shift
void submul(Poly& a, const Poly& b, const mpq_class& coef, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= coef * b[i];
}

}  // namespace

Cyclo inverse(const Cyclo& a) {
  if (a.is_zero()) throw std::domain_error("inverse: division by zero");

  // Extended gcd of a and the modulus m = x^16 - x^8 + 1 over Q[x]:
  // maintain r0 = u0 * a (mod m), r1 = u1 * a (mod m).
  Poly r0(17);
  r0[16] = 1;
  r0[8] = -1;
  r0[0] = 1;
  Poly r1(a.c_.begin(), a.c_.end());
  Poly u0{mpq_class(0)};
  Poly u1{mpq_class(1)};

  while (true) {
    const int d1 = degree(r1);
    if (d1 < 0) throw std::domain_error("inverse: zero divisor (unexpected)");
    if (d1 == 0) break;
    int d0 = degree(r0);
    while (d0 >= d1) {
      const mpq_class coef = r0[d0] / r1[d1];
      submul(r0, r1, coef, d0 - d1);
      submul(u0, u1, coef, d0 - d1);
      d0 = degree(r0);
    }
    std::swap(r0, r1);
    std::swap(u0, u1);
  }

  // r1 is a nonzero constant: a * u1 == r1 (mod m).
  const mpq_class lead = r1[0];
  Cyclo out;
  Poly u(u1);
  u.resize(std::max<std::size_t>(u.size(), Cyclo::kDegree));
  fold(u);
  for (int i = 0; i < Cyclo::kDegree; ++i) out.c_[i] = u[i] / lead;
  return out;
}

Cyclo pow(Cyclo base, unsigned long e) {
  Cyclo out(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Cyclo y_root(int j) {
  if (j < 0 || j > 7) throw std::out_of_range("y_root: j must be in 0..7");
  return Cyclo::root48(6L * j + 1);
}

Cyclo critical_weight() { return inverse(two_cos_pi_8()); }

Cyclo two_cos_pi_8() { return Cyclo::root48(3) + Cyclo::root48(45); }

Cyclo cos_3pi_8() {
  return (Cyclo::root48(9) + Cyclo::root48(39)).scaled(mpq_class(1, 2));
}

Cyclo cos_pi_4() {
  return (Cyclo::root48(6) + Cyclo::root48(42)).scaled(mpq_class(1, 2));
}

}  // namespace hexwalk
