#include "hexwalk/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hexwalk/bounds.hpp"
#include "hexwalk/domain.hpp"
#include "hexwalk/enumerate.hpp"
#include "hexwalk/identity.hpp"

namespace hexwalk::cli {

namespace {

using nlohmann::json;

struct Common {
  int threads = 1;
  std::uint64_t budget = 0;
  std::string format;  // per-command default filled in later
  std::string out_path;
  bool no_meta = false;

  EnumOptions options() const { return {threads, budget}; }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  cmd->add_option("--threads", c.threads, "worker threads")
      ->envname("HEXWALK_THREADS")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget,
                  "abort after this many visited walks (0 = unlimited)");
  c.format = default_format;
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", c.out_path, "write the result to a file");
  cmd->add_flag("--no-meta", c.no_meta,
                "omit wall-clock fields so outputs are reproducible");
}

int parse_int_strict(const std::string& text) {
  std::size_t used = 0;
  const int value = std::stoi(text, &used);
  if (used != text.size())
    throw std::invalid_argument("trailing characters in number: " + text);
  return value;
}

// Domain spec syntax: trapezoid:R,S or slitplane.
Domain parse_domain(const std::string& spec) {
  if (spec == "slitplane") return slit_plane();
  if (spec.rfind("trapezoid:", 0) == 0) {
    const std::string params = spec.substr(10);
    const auto comma = params.find(',');
    if (comma != std::string::npos) {
      try {
        return trapezoid(parse_int_strict(params.substr(0, comma)),
                         parse_int_strict(params.substr(comma + 1)));
      } catch (const std::exception&) {
      }
    }
  }
  throw CLI::ValidationError("--domain",
                             "expected trapezoid:R,S or slitplane, got '" +
                                 spec + "'");
}

int emit(const Common& c, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (c.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) {
    err << "cannot open output file: " << c.out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

std::string dump_reports(const std::vector<VerificationReport>& reports,
                         const Common& c) {
  if (c.format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << r.statement << " " << r.domain << " N=" << r.order << " "
         << (r.verified ? "verified" : "MISMATCH") << " walks=" << r.walks
         << " cycles=" << r.cycles;
      if (!c.no_meta) os << " (" << r.millis << " ms)";
      if (r.mismatch)
        os << "\n  at x^" << r.mismatch->power << ": " << r.mismatch->lhs
           << " != " << r.mismatch->rhs;
      os << "\n";
    }
    return os.str();
  }
  json j = json::array();
  for (const auto& r : reports) j.push_back(r.to_json(!c.no_meta));
  return (reports.size() == 1 ? j[0] : j).dump(2) + "\n";
}

json json_count(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

int cmd_count(const Common& c, int n, const std::string& cls,
              std::ostream& out, std::ostream& err) {
  mpz_class value;
  if (cls == "s") value = count_saws_upto(n, c.options())[n];
  else if (cls == "b") value = count_start_saws_upto(n, c.options())[n];
  else if (cls == "c") value = count_halfplane_saws_upto(n, c.options())[n];
  else value = count_trapezoidal_saws_upto(n, c.options())[n];

  if (c.format == "json") {
    json j{{"class", cls}, {"n", n}, {"count", json_count(value)}};
    return emit(c, j.dump(2) + "\n", out, err);
  }
  return emit(c, value.get_str() + "\n", out, err);
}

int cmd_census(const Common& c, int max_len, std::ostream& out,
               std::ostream& err) {
  const ClosedCensus census = closed_saw_census({0, 0}, max_len, c.options());
  if (c.format == "json") {
    json entries = json::array();
    for (const auto& [len, byr] : census)
      for (const auto& [rstar, count] : byr)
        entries.push_back({{"length", len}, {"rstar", rstar}, {"count", count}});
    json j{{"statement", "census-closed"},
           {"root", {0, 0}},
           {"max_len", max_len},
           {"entries", entries}};
    return emit(c, j.dump(2) + "\n", out, err);
  }
  std::ostringstream os;
  for (const auto& [len, byr] : census) {
    os << "length " << len << ":";
    for (const auto& [rstar, count] : byr)
      os << " r*=" << rstar << " x" << count;
    os << "\n";
  }
  if (census.empty()) os << "no closed SAWs up to length " << max_len << "\n";
  return emit(c, os.str(), out, err);
}

int cmd_bounds(const Common& c, int n_max, std::ostream& out,
               std::ostream& err) {
  const SequenceTable t = build_table(n_max, c.options());
  const auto inequalities = check_inequalities(t);
  const MuReport mu = mu_estimates(t.s);
  bool all_hold = mu.fekete_ok;
  for (const auto& r : inequalities) all_hold = all_hold && r.holds;

  std::string text;
  if (c.format == "csv") {
    text = table_csv(t);
  } else if (c.format == "json") {
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n)
      rows.push_back({{"n", n},
                      {"s", json_count(t.s[n])},
                      {"b", json_count(t.b[n])},
                      {"c", json_count(t.c[n])},
                      {"d", json_count(t.d[n])},
                      {"s_root", mu.s_root[n]},
                      {"ratio", n >= 2 ? json(mu.ratio[n]) : json()}});
    json checks = json::array();
    for (const auto& r : inequalities)
      checks.push_back({{"name", r.name}, {"n", r.n}, {"holds", r.holds},
                        {"slack", r.slack}});
    json j{{"n_max", n_max},
           {"rows", rows},
           {"inequalities", checks},
           {"fekete_ok", mu.fekete_ok},
           {"final_ratio", mu.final_ratio},
           {"all_hold", all_hold}};
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << table_csv(t);
    for (const auto& r : inequalities)
      if (!r.holds)
        os << "FAILED " << r.name << " at n=" << r.n << " slack=" << r.slack
           << "\n";
    os << (all_hold ? "all inequalities hold" : "some inequalities FAILED")
       << "; fekete " << (mu.fekete_ok ? "ok" : "VIOLATED")
       << "; final ratio " << mu.final_ratio << "\n";
    text = os.str();
  }
  const int rc = emit(c, text, out, err);
  if (rc != 0) return rc;
  return all_hold ? 0 : 1;
}

int cmd_export_g(const Common& c, int order, std::ostream& out,
                 std::ostream& err) {
  const GTable table = g_table(order, c.options());
  json entries = json::array();
  for (const auto& [key, coeffs] : table.buckets) {
    json cs = json::array();
    for (int n = 1; n <= order; ++n)
      cs.push_back(json_count(coeffs[static_cast<std::size_t>(n)]));
    entries.push_back({{"l", key.first}, {"k", key.second}, {"coeffs", cs}});
  }
  json j{{"N", order}, {"entries", entries}};
  return emit(c, j.dump(2) + "\n", out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact enumeration and identity checks for self-avoiding "
               "walks on the hexagonal lattice"};
  app.require_subcommand(1);

  // count
  Common count_common, census_common, prop1_common, cor2_common, cor5_common,
      bounds_common, exportg_common;
  auto* count = app.add_subcommand("count", "count walks of one class");
  int count_n = 0;
  std::string count_class = "s";
  count->add_option("--n", count_n, "walk length")->required()
      ->check(CLI::PositiveNumber);
  count->add_option("--class", count_class, "walk class")
      ->check(CLI::IsMember({"s", "b", "c", "d"}));
  add_common(count, count_common, "text");

  // census closed
  auto* census = app.add_subcommand("census", "walk censuses");
  census->require_subcommand(1);
  auto* census_closed =
      census->add_subcommand("closed", "complete windings of closed SAWs");
  int census_len = 0;
  census_closed->add_option("--max-len", census_len, "maximum length")
      ->required()->check(CLI::Range(6, 1 << 20));
  add_common(census_closed, census_common, "text");

  // verify prop1|cor2|cor5
  auto* verify = app.add_subcommand("verify", "exact identity checks");
  verify->require_subcommand(1);
  std::string domain_spec;
  std::optional<int> order;
  auto* prop1 = verify->add_subcommand(
      "prop1", "boundary/interior generating-function identity");
  prop1->add_option("--domain", domain_spec, "trapezoid:R,S or slitplane")
      ->required();
  prop1->add_option("--N", order, "truncation order (defaults to full depth "
                                  "on finite domains)");
  add_common(prop1, prop1_common, "json");
  auto* cor2 = verify->add_subcommand(
      "cor2", "slit-plane specializations, all eight roots");
  int cor2_order = 0;
  cor2->add_option("--N", cor2_order, "truncation order")->required()
      ->check(CLI::PositiveNumber);
  add_common(cor2, cor2_common, "json");
  auto* cor5 = verify->add_subcommand(
      "cor5", "trapezoid critical-point identity");
  cor5->add_option("--domain", domain_spec, "trapezoid:R,S")->required();
  add_common(cor5, cor5_common, "json");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "counting table and inequalities");
  int bounds_n = 0;
  bounds->add_option("--n-max", bounds_n, "table size")->required()
      ->check(CLI::Range(4, 1 << 10));
  add_common(bounds, bounds_common, "text");

  // export-g
  auto* export_g = app.add_subcommand(
      "export-g", "direction/winding bucket table of the slit plane");
  int g_order = 0;
  export_g->add_option("--N", g_order, "truncation order")->required()
      ->check(CLI::PositiveNumber);
  add_common(export_g, exportg_common, "json");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (count->parsed())
      return cmd_count(count_common, count_n, count_class, out, err);
    if (census_closed->parsed())
      return cmd_census(census_common, census_len, out, err);
    if (prop1->parsed()) {
      const Domain d = parse_domain(domain_spec);
      if (!d.finite && !order)
        throw CLI::ValidationError("--N", "required for infinite domains");
      const auto rep = verify_prop1(d, order, prop1_common.options());
      const int rc =
          emit(prop1_common, dump_reports({rep}, prop1_common), out, err);
      return rc != 0 ? rc : (rep.verified ? 0 : 1);
    }
    if (cor2->parsed()) {
      const auto reports = verify_cor2(cor2_order, cor2_common.options());
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.verified;
      const int rc =
          emit(cor2_common, dump_reports(reports, cor2_common), out, err);
      return rc != 0 ? rc : (ok ? 0 : 1);
    }
    if (cor5->parsed()) {
      const Domain d = parse_domain(domain_spec);
      if (d.name.rfind("trapezoid:", 0) != 0)
        throw CLI::ValidationError("--domain", "cor5 needs trapezoid:R,S");
      const std::string params = domain_spec.substr(10);
      const auto comma = params.find(',');
      const int r = parse_int_strict(params.substr(0, comma));
      const int s = parse_int_strict(params.substr(comma + 1));
      const auto rep = verify_cor5(r, s, cor5_common.options());
      const int rc =
          emit(cor5_common, dump_reports({rep}, cor5_common), out, err);
      return rc != 0 ? rc : (rep.verified ? 0 : 1);
    }
    if (bounds->parsed()) return cmd_bounds(bounds_common, bounds_n, out, err);
    if (export_g->parsed())
      return cmd_export_g(exportg_common, g_order, out, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  err << "no subcommand executed\n";
  return 2;
}

}  // namespace hexwalk::cli
