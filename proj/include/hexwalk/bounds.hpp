#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hexwalk/enumerate.hpp"

namespace hexwalk {

// Exact counts per length for the four nested walk classes; entry [0] of
// each column is unused.
struct SequenceTable {
  int n_max = 0;
  std::vector<mpz_class> s;  // SAWs from the origin
  std::vector<mpz_class> b;  // first edge fixed
  std::vector<mpz_class> c;  // halfplane
  std::vector<mpz_class> d;  // trapezoidal exits, deduplicated
};

SequenceTable build_table(int n_max, const EnumOptions& opt = {});

struct InequalityResult {
  std::string name;
  int n = 0;
  bool holds = false;
  double slack = 0.0;  // right side minus left side
};

// Evaluates, at every index the table rows allow:
//   s_n = 3 b_n, d_n <= c_n <= b_n,
//   b_n <= c_{n+1} + sum_{i=1}^{n+3} c_i c_{n+4-i},
//   c_n <= sum_{i=L}^{n+1} d_i c_{n+2-i} + sum_{i=L}^{n+3} d_i c_{n+4-i}
//     with L = ceil(sqrt(n/6)), n >= 3,
//   d_n < 4 n x_c^{-n}  (real comparison via high-precision evaluation; the
//     compared quantities are far apart at these scales).
std::vector<InequalityResult> check_inequalities(const SequenceTable& t);

struct MuReport {
  std::vector<double> s_root;  // s_n^(1/n), [0] unused
  std::vector<double> ratio;   // s_n / s_{n-1}, defined for n >= 2
  bool fekete_ok = false;      // every s_n^(1/n) >= 2cos(pi/8) - 1e-9
  double final_ratio = 0.0;
};

// 2cos(pi/8) lower-brackets every s_n^(1/n) by submultiplicativity; the
// ratio column trends toward the growth constant from finite data.
MuReport mu_estimates(const std::vector<mpz_class>& s_counts);

// Header n,s,b,c,d,s_root,ratio; integers in decimal, floats with 12
// significant digits, ratio blank on the first row.
std::string table_csv(const SequenceTable& t);

}  // namespace hexwalk
