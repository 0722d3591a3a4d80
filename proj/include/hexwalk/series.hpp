#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "hexwalk/cyclotomic.hpp"

namespace hexwalk {

// Key of a coefficient monomial zeta^dir * y^wind, with zeta the primitive
// sixth root of unity and y a formal Laurent variable. Canonical form keeps
// dir in {0,1,2}: since zeta^3 = -1, a key with dir in {3,4,5} is stored as
// (dir-3, wind) with negated count.
struct TermKey {
  int dir = 0;
  long long wind = 0;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

// Sparse integer combination of monomials; zero entries are dropped.
class CoeffMap {
 public:
  void add(TermKey k, const mpz_class& count);
  void add(const CoeffMap& o);
  bool empty() const { return m_.empty(); }
  bool operator==(const CoeffMap& o) const { return m_ == o.m_; }
  const std::map<TermKey, mpz_class>& terms() const { return m_; }

  // Substitute zeta = z^8 and y = y_j = z^(6j+1); winding exponents reduce
  // mod 48 here and only here.
  Cyclo specialize(int j) const;

  std::string str() const;

 private:
  std::map<TermKey, mpz_class> m_;
};

// Power series in x truncated at x^order with CoeffMap coefficients for the
// powers 1..order. Arithmetic never consults powers beyond the order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  int order() const { return order_; }
  void add_term(int n, TermKey k, const mpz_class& count);
  void add(const TruncatedSeries& o);  // orders must match

  // Maps every term (n, dir, wind, c) to (n+dn, dir+ddir, wind+dwind,
  // sign*c); terms pushed past the order are discarded.
  TruncatedSeries shifted(int dn, int ddir, long long dwind, int sign) const;

  const CoeffMap& coeff(int n) const;  // n in 1..order

  // One exact value per x-power, index i for x^(i+1).
  std::vector<Cyclo> specialize(int j) const;

  bool operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
  }

 private:
  int order_;
  std::vector<CoeffMap> c_;
};

}  // namespace hexwalk
