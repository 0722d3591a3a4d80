#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hexwalk/domain.hpp"
#include "hexwalk/enumerate.hpp"
#include "hexwalk/series.hpp"

namespace hexwalk {

struct Mismatch {
  int power = 0;
  std::string lhs, rhs;
};

struct VerificationReport {
  std::string statement;
  std::string domain;
  int order = 0;  // truncation order N
  bool verified = false;
  std::optional<Mismatch> mismatch;
  std::uint64_t walks = 0;
  std::uint64_t cycles = 0;
  double millis = 0.0;
  std::string note;

  // include_meta = false drops the wall-clock field so identical invocations
  // serialize to identical bytes.
  nlohmann::json to_json(bool include_meta) const;
};

// Left side of the boundary identity: for every weak SAW from the start edge
// to a border edge e, the term x^|w| * zeta^(away exponent of e) * y^r(w).
// While accumulating, asserts that r(w) is constant per border edge and that
// labelled edges match their part constants; violations throw.
TruncatedSeries boundary_series(const Domain& d, int order,
                                const EnumOptions& opt = {},
                                std::uint64_t* walks_out = nullptr);

// Right side: the interior SAW series acted on by the three monomial shifts
// (0,0,0), (1,-2,+1), (1,+2,-1), plus the cycle term summing
// x^(|w|+|C|) * zeta^l(w) * (zeta^2 y^(r-4) + zeta^-2 y^(r+4)) over cycles C
// meeting w only in its final vertex.
TruncatedSeries interior_series(const Domain& d, int order,
                                const EnumOptions& opt = {},
                                std::uint64_t* walks_out = nullptr,
                                std::uint64_t* cycles_out = nullptr);

// Compares both sides coefficient map by coefficient map up to x^N. For
// finite domains N may be omitted: the walk-length ceiling |X|+2 makes the
// comparison exact at every power. Infinite domains require N; truncation is
// sound because the x^n coefficient of either side only involves walks and
// cycles of total length <= n.
VerificationReport verify_prop1(const Domain& d, std::optional<int> order,
                                const EnumOptions& opt = {});

// Counting series of the slit-plane interior SAWs bucketed by final
// direction exponent l (0..5) and winding mod 48; at most 288 buckets, zero
// buckets absent. coeffs[0] unused, coeffs[n] is the x^n count.
struct GTable {
  int order = 0;
  std::uint64_t walks = 0;
  std::map<std::pair<int, int>, std::vector<mpz_class>> buckets;
};
GTable g_table(int order, const EnumOptions& opt = {});

// For each j in 0..7 checks, exactly in Q(zeta_48), that
//   x / (1 + 2 Re(zeta^4 y_j) x) = - sum_{l,k} zeta^l y_j^k G_{l,k}(x)
// holds coefficient for coefficient up to x^N. One shared table feeds all
// eight checks.
std::vector<VerificationReport> verify_cor2(int order,
                                            const EnumOptions& opt = {});
VerificationReport verify_cor2_one(const GTable& table, int j);

// Trapezoid check: with F_A, F_B, F_C the exit-length polynomials of the
// A, B and C border parts, verifies
//   cos(3pi/8) F_A(x_c) + cos(pi/4) F_B(x_c) + F_C(x_c) = x_c
// as an exact field equality, plus the numeric consequence
// F_A + F_B + F_C at x_c <= x_c / cos(3pi/8) < 2 within 1e-12.
VerificationReport verify_cor5(int r, int s, const EnumOptions& opt = {});

}  // namespace hexwalk
