#include "hexwalk/series.hpp"

#include <sstream>
#include <stdexcept>

namespace hexwalk {

void CoeffMap::add(TermKey k, const mpz_class& count) {
  if (count == 0) return;
  k.dir = ((k.dir % 6) + 6) % 6;
  mpz_class c = count;
  if (k.dir >= 3) {
    k.dir -= 3;
    c = -c;
  }
  auto [it, inserted] = m_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m_.erase(it);
  }
}

void CoeffMap::add(const CoeffMap& o) {
  for (const auto& [k, c] : o.m_) add(k, c);
}

Cyclo CoeffMap::specialize(int j) const {
  Cyclo out;
  for (const auto& [k, c] : m_) {
    const long long e = 8LL * k.dir + (6LL * j + 1) * k.wind;
    out += Cyclo::root48(static_cast<long>(((e % 48) + 48) % 48))
               .scaled(mpq_class(c));
  }
  return out;
}

std::string CoeffMap::str() const {
  if (m_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : m_) {
    if (!first) os << " + ";
    os << c.get_str() << "*zeta^" << k.dir << "*y^" << k.wind;
    first = false;
  }
  return os.str();
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
  c_.resize(static_cast<std::size_t>(order));
}

void TruncatedSeries::add_term(int n, TermKey k, const mpz_class& count) {
  if (n < 1 || n > order_)
    throw std::out_of_range("TruncatedSeries::add_term: power out of range");
  c_[static_cast<std::size_t>(n - 1)].add(k, count);
}

void TruncatedSeries::add(const TruncatedSeries& o) {
  if (o.order_ != order_)
    throw std::invalid_argument("TruncatedSeries::add: order mismatch");
  for (int n = 1; n <= order_; ++n)
    c_[static_cast<std::size_t>(n - 1)].add(o.c_[static_cast<std::size_t>(n - 1)]);
}

TruncatedSeries TruncatedSeries::shifted(int dn, int ddir, long long dwind,
                                         int sign) const {
  if (dn < 0) throw std::invalid_argument("TruncatedSeries::shifted: dn must be >= 0");
  TruncatedSeries out(order_);
  for (int n = 1; n + dn <= order_; ++n) {
    for (const auto& [k, c] : c_[static_cast<std::size_t>(n - 1)].terms()) {
      out.add_term(n + dn, TermKey{k.dir + ddir, k.wind + dwind},
                   sign >= 0 ? c : mpz_class(-c));
    }
  }
  return out;
}

const CoeffMap& TruncatedSeries::coeff(int n) const {
  if (n < 1 || n > order_)
    throw std::out_of_range("TruncatedSeries::coeff: power out of range");
  return c_[static_cast<std::size_t>(n - 1)];
}

std::vector<Cyclo> TruncatedSeries::specialize(int j) const {
  std::vector<Cyclo> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (const CoeffMap& cm : c_) out.push_back(cm.specialize(j));
  return out;
}

}  // namespace hexwalk
