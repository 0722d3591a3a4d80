#include "hexwalk/identity.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace hexwalk {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string edge_str(Edge e) {
  std::ostringstream os;
  os << "(" << e.u.p << "," << e.u.q << ")-(" << e.v.p << "," << e.v.q << ")";
  return os.str();
}

struct BoundaryAcc {
  TruncatedSeries series;
  std::map<Edge, long long> group_winding;
  std::uint64_t walks = 0;
  explicit BoundaryAcc(int order) : series(order) {}
};

struct InteriorAcc {
  TruncatedSeries saws;
  TruncatedSeries cycle_term;
  std::uint64_t walks = 0;
  std::uint64_t cycles = 0;
  explicit InteriorAcc(int order) : saws(order), cycle_term(order) {}
};

}  // namespace

nlohmann::json VerificationReport::to_json(bool include_meta) const {
  nlohmann::json j{{"statement", statement}, {"domain", domain},
                   {"N", order},             {"verified", verified},
                   {"walks", walks},         {"cycles", cycles}};
  if (mismatch)
    j["mismatch"] = {{"power", mismatch->power},
                     {"lhs", mismatch->lhs},
                     {"rhs", mismatch->rhs}};
  if (!note.empty()) j["note"] = note;
  if (include_meta) j["millis"] = millis;
  return j;
}

TruncatedSeries boundary_series(const Domain& d, int order,
                                const EnumOptions& opt,
                                std::uint64_t* walks_out) {
  auto on_exit = [&d](BoundaryAcc& acc, const Walk& w, Edge e, int away_exp,
                      long long wind) {
    acc.series.add_term(static_cast<int>(w.size()) - 1,
                        TermKey{away_exp, wind}, 1);
    ++acc.walks;
    const auto [it, inserted] = acc.group_winding.emplace(e, wind);
    if (!inserted && it->second != wind)
      throw std::runtime_error("winding inconsistency at border edge " +
                               edge_str(e) + " of " + d.name);
    if (const PartLabel* part = d.part_of(e)) {
      if (part->dir_exp != away_exp || part->winding != wind)
        throw std::runtime_error(std::string("part constant mismatch for ") +
                                 part->name + " at edge " + edge_str(e) +
                                 " of " + d.name);
    }
  };
  auto merge = [&d](BoundaryAcc& into, BoundaryAcc&& from) {
    into.series.add(from.series);
    into.walks += from.walks;
    for (const auto& [e, wind] : from.group_winding) {
      const auto [it, inserted] = into.group_winding.emplace(e, wind);
      if (!inserted && it->second != wind)
        throw std::runtime_error("winding inconsistency at border edge " +
                                 edge_str(e) + " of " + d.name);
    }
  };
  BoundaryAcc acc = reduce_domain_walks<BoundaryAcc>(
      d, order, opt, [order] { return BoundaryAcc(order); },
      [](BoundaryAcc&, const Walk&, int, long long) {}, on_exit, merge);
  if (walks_out) *walks_out = acc.walks;
  return acc.series;
}

TruncatedSeries interior_series(const Domain& d, int order,
                                const EnumOptions& opt,
                                std::uint64_t* walks_out,
                                std::uint64_t* cycles_out) {
  auto on_saw = [&d, order](InteriorAcc& acc, const Walk& w, int rev_exp,
                            long long wind) {
    const int n = static_cast<int>(w.size()) - 1;
    acc.saws.add_term(n, TermKey{rev_exp, wind}, 1);
    ++acc.walks;
    if (n + 6 > order) return;
    const VertexSet forbidden(w.begin(), w.end() - 1);
    for_each_cycle_through(
        d.contains, w.back(), forbidden, order - n, [&](int cycle_len) {
          acc.cycle_term.add_term(n + cycle_len, TermKey{rev_exp + 2, wind - 4}, 1);
          acc.cycle_term.add_term(n + cycle_len, TermKey{rev_exp + 4, wind + 4}, 1);
          ++acc.cycles;
        });
  };
  auto merge = [](InteriorAcc& into, InteriorAcc&& from) {
    into.saws.add(from.saws);
    into.cycle_term.add(from.cycle_term);
    into.walks += from.walks;
    into.cycles += from.cycles;
  };
  InteriorAcc acc = reduce_domain_walks<InteriorAcc>(
      d, order, opt, [order] { return InteriorAcc(order); }, on_saw,
      [](InteriorAcc&, const Walk&, Edge, int, long long) {}, merge);

  TruncatedSeries out = acc.saws;
  out.add(acc.saws.shifted(1, -2, +1, +1));
  out.add(acc.saws.shifted(1, +2, -1, +1));
  out.add(acc.cycle_term);
  if (walks_out) *walks_out = acc.walks;
  if (cycles_out) *cycles_out = acc.cycles;
  return out;
}

VerificationReport verify_prop1(const Domain& d, std::optional<int> order,
                                const EnumOptions& opt) {
  const auto t0 = Clock::now();
  int n_eff;
  if (order) {
    n_eff = *order;
  } else if (d.finite) {
    n_eff = static_cast<int>(d.vertex_count()) + 2;
  } else {
    throw std::invalid_argument(
        "verify_prop1: a truncation order is required for infinite domains");
  }

  VerificationReport rep;
  rep.statement = "prop1";
  rep.domain = d.name;
  rep.order = n_eff;

  std::uint64_t lhs_walks = 0, rhs_walks = 0, cycles = 0;
  const TruncatedSeries lhs = boundary_series(d, n_eff, opt, &lhs_walks);
  const TruncatedSeries rhs = interior_series(d, n_eff, opt, &rhs_walks, &cycles);
  rep.walks = lhs_walks + rhs_walks;
  rep.cycles = cycles;

  rep.verified = true;
  for (int n = 1; n <= n_eff; ++n) {
    if (lhs.coeff(n) == rhs.coeff(n)) continue;
    rep.verified = false;
    rep.mismatch = Mismatch{n, lhs.coeff(n).str(), rhs.coeff(n).str()};
    break;
  }
  if (!d.finite)
    rep.note =
        "truncated check: the x^n coefficient of either side involves only "
        "walks and cycles of total length <= n, so equality up to N is exact";
  rep.millis = ms_since(t0);
  return rep;
}

GTable g_table(int order, const EnumOptions& opt) {
  const Domain d = slit_plane();
  GTable table = reduce_domain_walks<GTable>(
      d, order, opt,
      [order] {
        GTable t;
        t.order = order;
        return t;
      },
      [order](GTable& acc, const Walk& w, int rev_exp, long long wind) {
        const int k = static_cast<int>(((wind % 48) + 48) % 48);
        auto [it, inserted] = acc.buckets.emplace(std::make_pair(rev_exp, k),
                                                  std::vector<mpz_class>());
        if (inserted) it->second.resize(static_cast<std::size_t>(order) + 1);
        ++it->second[w.size() - 1];
        ++acc.walks;
      },
      [](GTable&, const Walk&, Edge, int, long long) {},
      [](GTable& into, GTable&& from) {
        into.walks += from.walks;
        for (auto& [key, coeffs] : from.buckets) {
          auto [it, inserted] = into.buckets.try_emplace(key, std::move(coeffs));
          if (!inserted)
            for (std::size_t n = 0; n < it->second.size(); ++n)
              it->second[n] += coeffs[n];
        }
      });
  return table;
}

VerificationReport verify_cor2_one(const GTable& table, int j) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.statement = "cor2:j=" + std::to_string(j);
  rep.domain = "slitplane";
  rep.order = table.order;
  rep.walks = table.walks;

  // 2 Re(zeta^4 y_j): the conjugate of a root of unity is its inverse.
  const long e = 32 + 6L * j + 1;
  const Cyclo c = Cyclo::root48(e) + Cyclo::root48(-e);
  const Cyclo neg_c = -c;

  rep.verified = true;
  Cyclo lhs(1);  // (-c)^(n-1) for x^n
  for (int n = 1; n <= table.order; ++n) {
    Cyclo rhs;
    for (const auto& [key, coeffs] : table.buckets) {
      const mpz_class& count = coeffs[static_cast<std::size_t>(n)];
      if (count == 0) continue;
      const long ex = 8L * key.first + (6L * j + 1) * key.second;
      rhs += Cyclo::root48(ex).scaled(mpq_class(count));
    }
    rhs = -rhs;
    if (!(lhs == rhs)) {
      rep.verified = false;
      rep.mismatch = Mismatch{n, lhs.str(), rhs.str()};
      break;
    }
    lhs *= neg_c;
  }
  if (j == 7)
    rep.note =
        "at j=7 the closed form is sum_{n>=1} (2cos(pi/8))^(n-1) x^n; the "
        "x^n coefficient carries exponent n-1, not n";
  rep.millis = ms_since(t0);
  return rep;
}

std::vector<VerificationReport> verify_cor2(int order, const EnumOptions& opt) {
  const GTable table = g_table(order, opt);
  std::vector<VerificationReport> reports;
  reports.reserve(8);
  for (int j = 0; j <= 7; ++j) reports.push_back(verify_cor2_one(table, j));
  return reports;
}

VerificationReport verify_cor5(int r, int s, const EnumOptions& opt) {
  const auto t0 = Clock::now();
  const Domain d = trapezoid(r, s);
  const int order = static_cast<int>(d.vertex_count()) + 2;

  VerificationReport rep;
  rep.statement = "cor5";
  rep.domain = d.name;
  rep.order = order;

  struct Acc {
    std::vector<mpz_class> a, b, c;
    std::uint64_t walks = 0;
    explicit Acc(int n)
        : a(static_cast<std::size_t>(n) + 1),
          b(static_cast<std::size_t>(n) + 1),
          c(static_cast<std::size_t>(n) + 1) {}
  };
  Acc acc = reduce_domain_walks<Acc>(
      d, order, opt, [order] { return Acc(order); },
      [](Acc&, const Walk&, int, long long) {},
      [&d](Acc& a, const Walk& w, Edge e, int, long long) {
        const PartLabel* part = d.part_of(e);
        if (part == nullptr)
          throw std::runtime_error("unlabelled border edge " + edge_str(e));
        const std::size_t n = w.size() - 1;
        ++a.walks;
        switch (part->name[0]) {
          case 'A': ++a.a[n]; break;
          case 'B': ++a.b[n]; break;
          case 'C': ++a.c[n]; break;
          default: break;  // the start edge contributes to none of the three
        }
      },
      [](Acc& into, Acc&& from) {
        into.walks += from.walks;
        for (std::size_t i = 0; i < into.a.size(); ++i) {
          into.a[i] += from.a[i];
          into.b[i] += from.b[i];
          into.c[i] += from.c[i];
        }
      });
  rep.walks = acc.walks;

  const Cyclo xc = critical_weight();
  auto eval = [&xc](const std::vector<mpz_class>& coeffs) {
    Cyclo v;  // Horner over the powers x^1..x^N
    for (std::size_t n = coeffs.size(); n-- > 1;)
      v = (v + Cyclo(mpq_class(coeffs[n]))) * xc;
    return v;
  };
  const Cyclo fa = eval(acc.a), fb = eval(acc.b), fc = eval(acc.c);
  const Cyclo combined = cos_3pi_8() * fa + cos_pi_4() * fb + fc;
  rep.verified = combined == xc;
  if (!rep.verified) rep.mismatch = Mismatch{0, combined.str(), xc.str()};

  // Numeric consequence: F_A + F_B + F_C at x_c stays below
  // x_c / cos(3pi/8) < 2.
  const double total = (fa + fb + fc).to_complex().real();
  const double bound = (xc * inverse(cos_3pi_8())).to_complex().real();
  if (!(total <= bound + 1e-12 && bound < 2.0 + 1e-12)) {
    rep.verified = false;
    std::ostringstream os;
    os << "consequence bound violated: " << total << " vs " << bound;
    rep.note = os.str();
  }
  rep.millis = ms_since(t0);
  return rep;
}

}  // namespace hexwalk
