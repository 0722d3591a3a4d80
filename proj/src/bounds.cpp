#include "hexwalk/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hexwalk/cyclotomic.hpp"

namespace hexwalk {

namespace {

const double kMu = std::sqrt(2.0 + std::sqrt(2.0));  // 2cos(pi/8)

// Smallest integer L with 6 L^2 >= n.
int ceil_sqrt_sixth(int n) {
  int lo = 0;
  while (6LL * lo * lo < n) ++lo;
  return lo;
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

SequenceTable build_table(int n_max, const EnumOptions& opt) {
  SequenceTable t;
  t.n_max = n_max;
  t.s = count_saws_upto(n_max, opt);
  t.b = count_start_saws_upto(n_max, opt);
  t.c = count_halfplane_saws_upto(n_max, opt);
  t.d = count_trapezoidal_saws_upto(n_max, opt);
  return t;
}

std::vector<InequalityResult> check_inequalities(const SequenceTable& t) {
  std::vector<InequalityResult> out;
  const int N = t.n_max;

  for (int n = 1; n <= N; ++n) {
    out.push_back({"s=3b", n, t.s[n] == 3 * t.b[n],
                   mpz_class(t.s[n] - 3 * t.b[n]).get_d()});
    out.push_back({"d<=c", n, t.d[n] <= t.c[n], mpz_class(t.c[n] - t.d[n]).get_d()});
    out.push_back({"c<=b", n, t.c[n] <= t.b[n], mpz_class(t.b[n] - t.c[n]).get_d()});
  }

  // b_n <= c_{n+1} + sum_{i=1}^{n+3} c_i c_{n+4-i}; needs c up to n+3.
  for (int n = 1; n + 3 <= N; ++n) {
    mpz_class rhs = t.c[n + 1];
    for (int i = 1; i <= n + 3; ++i) rhs += t.c[i] * t.c[n + 4 - i];
    out.push_back({"b_upper", n, t.b[n] <= rhs, mpz_class(rhs - t.b[n]).get_d()});
  }

  // c_n recurrence with the ceiling reading of the lower limit; needs d and c
  // up to n+3.
  for (int n = 3; n + 3 <= N; ++n) {
    const int lo = ceil_sqrt_sixth(n);
    mpz_class rhs = 0;
    for (int i = lo; i <= n + 1; ++i) rhs += t.d[i] * t.c[n + 2 - i];
    for (int i = lo; i <= n + 3; ++i) rhs += t.d[i] * t.c[n + 4 - i];
    out.push_back(
        {"c_recurrence", n, t.c[n] <= rhs, mpz_class(rhs - t.c[n]).get_d()});
  }

  // d_n < 4 n x_c^{-n}, compared as d_n x_c^n < 4n. The power is exact in
  // the field; one float conversion at the end keeps the comparison error
  // below 1e-15 of the compared quantities, which sit far apart here.
  const Cyclo xc = critical_weight();
  Cyclo xc_n(1);
  for (int n = 1; n <= N; ++n) {
    xc_n *= xc;
    const double lhs = t.d[n].get_d() * xc_n.to_complex().real();
    out.push_back({"d_upper", n, lhs < 4.0 * n, 4.0 * n - lhs});
  }
  return out;
}

MuReport mu_estimates(const std::vector<mpz_class>& s_counts) {
  MuReport rep;
  const std::size_t N = s_counts.size() - 1;
  rep.s_root.assign(N + 1, 0.0);
  rep.ratio.assign(N + 1, 0.0);
  rep.fekete_ok = true;
  for (std::size_t n = 1; n <= N; ++n) {
    rep.s_root[n] = std::pow(s_counts[n].get_d(), 1.0 / static_cast<double>(n));
    if (rep.s_root[n] < kMu - 1e-9) rep.fekete_ok = false;
    if (n >= 2)
      rep.ratio[n] = s_counts[n].get_d() / s_counts[n - 1].get_d();
  }
  rep.final_ratio = N >= 2 ? rep.ratio[N] : 0.0;
  return rep;
}

std::string table_csv(const SequenceTable& t) {
  const MuReport mu = mu_estimates(t.s);
  std::ostringstream os;
  os << "n,s,b,c,d,s_root,ratio\n";
  for (int n = 1; n <= t.n_max; ++n) {
    os << n << ',' << t.s[n].get_str() << ',' << t.b[n].get_str() << ','
       << t.c[n].get_str() << ',' << t.d[n].get_str() << ','
       << fmt12(mu.s_root[n]) << ',' << (n >= 2 ? fmt12(mu.ratio[n]) : "")
       << '\n';
  }
  return os.str();
}

}  // namespace hexwalk
