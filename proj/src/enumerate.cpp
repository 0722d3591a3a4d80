#include "hexwalk/enumerate.hpp"

#include <set>
#include <utility>

namespace hexwalk {

namespace {

using Counts = std::vector<mpz_class>;

Counts make_counts(int n_max) {
  return Counts(static_cast<std::size_t>(n_max) + 1);
}

void merge_counts(Counts& into, Counts&& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

Counts count_free(Vertex root, std::optional<Vertex> forced_first, int n_max,
                  const EnumOptions& opt) {
  return reduce_free_walks<Counts>(
      root, forced_first, n_max, opt, [&] { return make_counts(n_max); },
      [](Counts& acc, const Walk& w) { ++acc[w.size() - 1]; },
      [](Counts&, const Walk&) {}, merge_counts);
}

}  // namespace

std::vector<mpz_class> count_saws_upto(int n_max, const EnumOptions& opt) {
  return count_free({0, 0}, {}, n_max, opt);
}

mpz_class count_saws(int n, const EnumOptions& opt) {
  return count_saws_upto(n, opt)[static_cast<std::size_t>(n)];
}

std::vector<mpz_class> count_start_saws_upto(int n_max, const EnumOptions& opt) {
  return count_free({0, 0}, Vertex{1, 0}, n_max, opt);
}

std::vector<mpz_class> count_halfplane_saws_upto(int n_max,
                                                 const EnumOptions& opt) {
  const Domain d = halfplane();
  return reduce_domain_walks<Counts>(
      d, n_max, opt, [&] { return make_counts(n_max); },
      [](Counts& acc, const Walk& w, int, long long) { ++acc[w.size() - 1]; },
      [](Counts&, const Walk&, Edge, int, long long) {}, merge_counts);
}

std::vector<mpz_class> count_trapezoidal_saws_upto(int n_max,
                                                   const EnumOptions& opt,
                                                   int range_pad) {
  const int hi = n_max + range_pad;
  std::vector<std::pair<int, int>> sizes;
  for (int r = 2; r <= hi; ++r)
    for (int s = 2; s <= hi; ++s) sizes.emplace_back(r, s);

  detail::BudgetGate gate{opt.budget};
  auto jobs = detail::map_jobs<std::set<Walk>>(
      sizes.size(), opt.threads, [&](std::size_t i) {
        const Domain d = trapezoid(sizes[i].first, sizes[i].second);
        std::set<Walk> walks;
        auto on_saw = [](const Walk&, int, long long) {};
        auto on_exit = [&](const Walk& w, Edge e, int, long long) {
          if (d.far_border(e)) walks.insert(w);
        };
        detail::WalkDfs<decltype(on_saw), decltype(on_exit)> dfs(
            d, n_max, on_saw, on_exit, &gate);
        dfs.run();
        return walks;
      });

  std::set<Walk> all;
  for (auto& job : jobs) all.merge(std::move(*job));

  Counts out = make_counts(n_max);
  for (const Walk& w : all) ++out[w.size() - 1];
  return out;
}

ClosedCensus closed_saw_census(Vertex root, int max_len,
                               const EnumOptions& opt) {
  auto merge = [](ClosedCensus& into, ClosedCensus&& from) {
    for (auto& [len, byr] : from)
      for (auto& [r, c] : byr) into[len][r] += c;
  };
  return reduce_free_walks<ClosedCensus>(
      root, {}, max_len, opt, [] { return ClosedCensus{}; },
      [](ClosedCensus&, const Walk&) {},
      [](ClosedCensus& acc, const Walk& w) {
        ++acc[static_cast<int>(w.size()) - 1][complete_winding(w)];
      },
      merge);
}

}  // namespace hexwalk
