// fdlat: estimates, tables, generating-size decisions and verification
// campaigns from the command line.
//
// Exit status: 0 success, 1 a verification check failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdlat/bigcomb.hpp"
#include "fdlat/campaigns.hpp"
#include "fdlat/estimates.hpp"
#include "fdlat/gmin.hpp"
#include "fdlat/minsearch.hpp"
#include "fdlat/oracle/family.hpp"
#include "fdlat/oracle/lattice.hpp"
#include "fdlat/oracle/sperner.hpp"
#include "fdlat/report.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fdlat;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// "30000", or "1489e1795" for 1489 * 10^1795.  Always exact.
Natural parse_k(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) return parse_natural(text);
  const auto exponent = parse_natural(text.substr(e + 1));
  if (exponent > 1000000) throw ConstraintError("k: exponent too large");
  return parse_natural(text.substr(0, e)) * pow10(static_cast<unsigned>(exponent.get_ui()));
}

std::string outcome_text(const GminOutcome& outcome) {
  if (outcome.exact) return "Exact " + std::to_string(outcome.value);
  return "Ambiguous {" + std::to_string(outcome.value) + ", " + std::to_string(outcome.value + 1) + "}";
}

// Exact when short, correctly rounded scientific otherwise.
std::string short_text(const Natural& x) {
  const auto text = x.get_str();
  return text.size() <= 30 ? text : "~" + format_scientific(x, 13).str();
}

json outcome_json(const GminOutcome& outcome) {
  if (outcome.exact) return {{"exact", outcome.value}};
  return {{"ambiguous", {outcome.value, outcome.value + 1}}};
}

struct Options {
  std::int64_t r = 3;
  std::int64_t n = 0;
  std::int64_t n_max = 0;
  std::int64_t r_max = 0;
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = -1;
  std::string k;
  std::string format = "text";
  unsigned jobs = 0;
  bool extend = false;
  bool exhaustive_fd3 = false;
  std::string table_id;
  std::string campaign;
  std::string oracle_check;
  std::string poset = "crown";
};

int cmd_estimate(const Options& o) {
  const auto format = parse_format(o.format);
  if (format == Format::kCsv) throw ConstraintError("estimate: csv output is only available for tables");
  EstimateParams params{o.r, o.a, o.b < 0 ? o.r : o.b, o.p, o.n};
  params.validate();

  json line;
  line["check"] = "estimate";
  line["r"] = params.r;
  line["a"] = params.a;
  line["b"] = params.b;
  line["p"] = params.p;
  line["n"] = params.n;
  line["f_lower"] = f_lower_general(params).get_str();
  line["f_lower_max"] = f_lower_max(params.r, params.a, params.b, params.n).get_str();
  if (params.a == 0 && params.b == params.r && params.r >= 3) {
    line["flat"] = flat_lower(params.r, params.n).get_str();
    line["g_upper"] = g_upper(params.r, params.n).get_str();
    if (params.r == 3) {
      line["g_doublestar"] = g3_doublestar(params.n).get_str();
      if (params.n <= kCertifiedMinLocationMax || o.extend) {
        if (params.n > kCertifiedMinLocationMax)
          std::cerr << "warning: g_star beyond n = " << kCertifiedMinLocationMax
                    << " is not certified; M_n is recomputed by search\n";
        line["g_star"] = g3_star(params.n, o.extend, o.jobs).get_str();
      }
    }
  }
  if (format == Format::kJson) {
    std::cout << line.dump() << "\n";
  } else {
    for (auto it = line.begin(); it != line.end(); ++it)
      if (it.key() != "check") std::cout << it.key() << " = " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
  return 0;
}

int cmd_table(const Options& o) {
  const auto spec = TableSpec::standard(parse_table_id(o.table_id));
  std::cout << emit_table(spec, parse_format(o.format), o.jobs);
  return 0;
}

int cmd_gmin(const Options& o) {
  const auto format = parse_format(o.format);
  if (format == Format::kCsv) throw ConstraintError("gmin: csv output is only available for tables");
  if (o.k.empty()) throw ConstraintError("gmin: --k is required");
  const auto k = parse_k(o.k);
  const auto pair = EstimatePair::default_for(o.r);
  const auto result = gmin_power(o.r, k, pair);
  if (format == Format::kJson) {
    json line;
    line["check"] = "gmin";
    line["r"] = o.r;
    line["k"] = k.get_str();
    line["outcome"] = outcome_json(result.outcome);
    line["pair"] = result.pair_id;
    line["n"] = result.n;
    line["lower_n"] = result.lower_n.get_str();
    line["upper_n"] = result.upper_n.get_str();
    line["lower_next"] = result.lower_next.get_str();
    std::cout << line.dump() << "\n";
  } else {
    const auto n = std::to_string(result.n);
    const auto next = std::to_string(result.n + 1);
    std::cout << "r = " << o.r << ", k = " << short_text(k) << ": " << outcome_text(result.outcome)
              << "\n"
              << "  " << pair.lower_name() << "(" << n << ") = " << short_text(result.lower_n) << " < k <= " << pair.lower_name()
              << "(" << next << ") = " << short_text(result.lower_next) << "\n"
              << "  " << pair.upper_name() << "(" << n << ") = " << short_text(result.upper_n)
              << (result.outcome.exact ? " < k" : " >= k") << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto campaign = parse_campaign(o.campaign);
  auto config = default_config(campaign);
  config.jobs = o.jobs;
  config.exhaustive_fd3_squared = o.exhaustive_fd3;
  if (o.r_max > 0) config.r_hi = o.r_max;
  if (o.n_max > 0) config.n_hi = o.n_max;
  if (o.n > 0) config.n_lo = o.n;
  const auto report = run_campaign(campaign, config, campaign == Campaign::kMinLocation ? &std::cerr : nullptr);
  for (const auto& line : report.lines) std::cout << line << "\n";
  std::cerr << "campaign " << to_string(campaign) << ": " << (report.pass ? "pass" : "FAIL") << ", " << report.checks
            << " checks, " << report.violations << " violations, " << report.seconds << " s\n";
  return report.pass ? 0 : kExitViolation;
}

int cmd_oracle(const Options& o) {
  using namespace fdlat::oracle;
  json line;
  bool ok = true;
  if (o.oracle_check == "lemma") {
    ok = check_lemma(o.r);
    line = {{"check", "lemma"}, {"r", o.r}, {"pass", ok}, {"fd_size", build_fd(o.r).lattice.size()}};
  } else if (o.oracle_check == "sp") {
    FinitePoset shape;
    if (o.poset == "crown")
      shape = crown();
    else if (o.poset == "singleton")
      shape = FinitePoset(1);
    else if (o.poset == "antichain2")
      shape = FinitePoset(2);
    else
      throw ConstraintError("oracle sp: unknown poset '" + o.poset + "' (crown, singleton, antichain2)");
    line = {{"check", "sp_exact"}, {"poset", o.poset}, {"n", o.n}, {"value", sp_exact(shape, o.n).get_str()}};
  } else if (o.oracle_check == "mingen") {
    const auto power = o.k.empty() ? Natural(1) : parse_k(o.k);
    if (power < 1 || power > 8) throw ConstraintError("oracle mingen: --k must be in 1..8");
    const auto lattice = direct_power(build_fd(o.r).lattice, static_cast<std::int64_t>(power.get_ui()));
    const auto found = min_generating_size(lattice);
    line = {{"check", "min_generating"}, {"lattice", "FD(" + std::to_string(o.r) + ")^" + power.get_str()},
            {"size", lattice.size()},    {"value", found.size},
            {"exact", found.exact},      {"closures", found.closure_calls}};
  } else if (o.oracle_check == "family") {
    EstimateParams params{o.r, o.a, o.b < 0 ? o.r : o.b, o.p, o.n};
    const auto family = build_unrelated_family(params);
    const auto formula = f_lower_general(params);
    const bool unrelated = pairwise_unrelated(family.copies);
    ok = unrelated && formula == Natural(static_cast<unsigned long>(family.copies.size()));
    line = {{"check", "family"}, {"copies", family.copies.size()}, {"formula", formula.get_str()},
            {"unrelated", unrelated}};
  } else {
    throw ConstraintError("oracle: unknown check '" + o.oracle_check + "' (lemma, sp, mingen, family)");
  }
  std::cout << line.dump() << "\n";
  return ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sperner-number estimates for full segment posets and generating sizes of direct powers of free "
               "distributive lattices, in exact arithmetic."};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  };

  auto* estimate = app.add_subcommand("estimate", "Lower and upper estimates at a single (r, n)");
  estimate->add_option("--r", o.r, "Generator count r")->required();
  estimate->add_option("--n", o.n, "Ground set size n")->required();
  estimate->add_option("--p", o.p, "Offset p of the set size, -r..r");
  estimate->add_option("--a", o.a, "Lower segment bound a (default 0)");
  estimate->add_option("--b", o.b, "Upper segment bound b (default r)");
  estimate->add_option("--format", o.format, "text or json");
  estimate->add_flag("--extend-beyond-300", o.extend, "Also compute g_star for n > 300 (uncertified)");
  add_common(estimate);

  auto* table = app.add_subcommand("table", "Reproduce a reference table (t51..t55)");
  table->add_option("id", o.table_id, "t51, t52, t53, t54 or t55")->required();
  table->add_option("--format", o.format, "text, csv or json");
  add_common(table);

  auto* gmin = app.add_subcommand(
      "gmin", "Decide the minimum generating size of FD(r)^k.  k is an exact decimal integer; "
              "'1489e1795' is shorthand for 1489 * 10^1795");
  gmin->add_option("--r", o.r, "Generator count r >= 3")->required();
  gmin->add_option("--k", o.k, "Exponent k >= 2")->required();
  gmin->add_option("--format", o.format, "text or json");

  auto* verify = app.add_subcommand("verify", "Run a verification campaign; JSON lines on stdout");
  verify->add_option("campaign", o.campaign, "separation, best_p, min_location, flat_vs_max or oracle_suite")
      ->required();
  verify->add_option("--r-max", o.r_max, "Last r of the sweep");
  verify->add_option("--n", o.n, "First n of the sweep");
  verify->add_option("--n-max", o.n_max, "Last n of the sweep");
  verify->add_flag("--exhaustive-fd3-squared", o.exhaustive_fd3,
                   "oracle_suite: decide Gmin(FD(3)^2) by closure search (hours)");
  add_common(verify);

  auto* oracle = app.add_subcommand("oracle", "Brute-force checks on tiny instances");
  oracle->add_option("check", o.oracle_check, "lemma, sp, mingen or family")->required();
  oracle->add_option("--r", o.r, "Generator count r");
  oracle->add_option("--n", o.n, "Ground set size n");
  oracle->add_option("--p", o.p, "Offset p (family)");
  oracle->add_option("--a", o.a, "Lower segment bound a (family)");
  oracle->add_option("--b", o.b, "Upper segment bound b (family)");
  oracle->add_option("--k", o.k, "Direct power exponent (mingen)");
  oracle->add_option("--poset", o.poset, "crown, singleton or antichain2 (sp)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*estimate) return cmd_estimate(o);
    if (*table) return cmd_table(o);
    if (*gmin) return cmd_gmin(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const fdlat::oracle::SizeBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstraintError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
