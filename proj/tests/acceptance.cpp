// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Pass "--only N[,M...]" to run a subset.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdlat/bigcomb.hpp"
#include "fdlat/campaigns.hpp"
#include "fdlat/estimates.hpp"
#include "fdlat/gmin.hpp"
#include "fdlat/minsearch.hpp"
#include "fdlat/oracle/lattice.hpp"
#include "fdlat/oracle/sperner.hpp"
#include "fdlat/report.hpp"

namespace {

using fdlat::Natural;
using json = nlohmann::json;

// Wall-clock budgets in seconds, one per criterion.
constexpr std::array<double, 11> kBudget = {0, 1, 1, 10, 60, 120, 600, 3600, 900, 1200, 600};
// Every comparison below is exact; no numeric tolerance is used anywhere.
constexpr std::uint64_t kSeed = 0x5eed'f00d'2024ULL;
constexpr int kRandomPointsPerN = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  Outcome outcome(const std::string& note = "") const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed, first: " << first_;
    if (!note.empty()) out << "; " << note;
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

void compare_rows(Checker& check, const std::string& name, std::int64_t n_lo,
                  const std::function<Natural(std::int64_t)>& fn, const std::vector<long>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto n = n_lo + static_cast<std::int64_t>(i);
    const auto got = fn(n);
    check.expect(got == expected[i], name + "(" + std::to_string(n) + ") = " + got.get_str());
  }
}

Outcome table_51() {
  Checker check;
  compare_rows(check, "flat3", 3, [](std::int64_t n) { return fdlat::flat_lower(3, n); },
               {1, 1, 2, 3, 6, 11, 24, 42, 84, 153, 306, 570, 1146, 2145, 4290, 8100, 16200, 30786});
  const std::vector<long> starred = {1,   1,   2,   4,    7,    13,   26,   46,   92,
                                     168, 333, 616, 1225, 2288, 4558, 8580, 17107, 32413};
  compare_rows(check, "g3**", 3, fdlat::g3_doublestar, starred);
  compare_rows(check, "g3*", 3, [](std::int64_t n) { return fdlat::g3_star(n); }, starred);
  compare_rows(check, "g3", 3, [](std::int64_t n) { return fdlat::g_upper(3, n); },
               {1, 1, 3, 5, 10, 17, 35, 63, 126, 231, 462, 858, 1716, 3217, 6435, 12155, 24310, 46189});
  return check.outcome();
}

const std::vector<long> kChainRow = {1,   1,   3,   5,    10,   17,   35,   63,    126,
                                     231, 462, 858, 1716, 3217, 6435, 12155, 24310, 46189};

Outcome tables_52_53() {
  Checker check;
  compare_rows(check, "flat4", 4, [](std::int64_t n) { return fdlat::flat_lower(4, n); },
               {1, 1, 2, 3, 6, 10, 20, 36, 74, 134, 268, 496, 992, 1856, 3712, 7004, 14014, 26598});
  compare_rows(check, "g4", 4, [](std::int64_t n) { return fdlat::g_upper(4, n); }, kChainRow);
  compare_rows(check, "flat5", 5, [](std::int64_t n) { return fdlat::flat_lower(5, n); },
               {1, 1, 2, 3, 6, 10, 20, 35, 70, 127, 256, 471, 942, 1758, 3516, 6620, 13240, 25095});
  compare_rows(check, "g5", 5, [](std::int64_t n) { return fdlat::g_upper(5, n); }, kChainRow);
  return check.outcome();
}

Outcome table_54() {
  Checker check;
  const std::array<std::int64_t, 3> ns = {298, 299, 300};
  const std::array<const char*, 3> flat = {"3.919720e87", "7.839440e87", "1.562662e88"};
  const std::array<const char*, 3> starred = {"3.932918e87", "7.865747e87", "1.567888e88"};
  const std::array<const char*, 3> ratio = {"1.003367003", "1.003355705", "1.003344482"};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto f = fdlat::flat_lower(3, ns[i]);
    const auto g = fdlat::g3_doublestar(ns[i]);
    const auto fs = fdlat::format_scientific(f, 7).str();
    const auto gs = fdlat::format_scientific(g, 7).str();
    const auto rs = fdlat::format_ratio(g, f, 10).str();
    check.expect(fs == flat[i], "flat3(" + std::to_string(ns[i]) + ") ~ " + fs);
    check.expect(gs == starred[i], "g3**(" + std::to_string(ns[i]) + ") ~ " + gs);
    check.expect(rs == ratio[i], "ratio(" + std::to_string(ns[i]) + ") ~ " + rs);
  }
  return check.outcome();
}

Outcome table_55() {
  Checker check;
  const std::array<std::int64_t, 2> ns = {5999, 6000};
  const std::array<const char*, 2> flat = {"7.445882708069e1797", "1.489176541614e1798"};
  const std::array<const char*, 2> chain = {"1.488924847889e1798", "2.977849695779e1798"};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto fs = fdlat::format_scientific(fdlat::flat_lower(20, ns[i]), 13).str();
    const auto gs = fdlat::format_scientific(fdlat::g_upper(20, ns[i]), 13).str();
    check.expect(fs == flat[i], "flat20(" + std::to_string(ns[i]) + ") ~ " + fs);
    check.expect(gs == chain[i], "g20(" + std::to_string(ns[i]) + ") ~ " + gs);
  }
  return check.outcome();
}

Outcome decisions() {
  Checker check;
  struct Case {
    std::int64_t r;
    Natural k;
    fdlat::GminOutcome expected;
    const char* label;
  };
  const std::vector<Case> cases = {
      {3, Natural(30000), fdlat::GminOutcome::Exact(20), "(3, 30000)"},
      {4, Natural(20000), fdlat::GminOutcome::Ambiguous(20), "(4, 20000)"},
      {5, Natural(25000), fdlat::GminOutcome::Exact(22), "(5, 25000)"},
      {3, fdlat::pow10(88), fdlat::GminOutcome::Exact(300), "(3, 10^88)"},
      {20, Natural(1489) * fdlat::pow10(1795), fdlat::GminOutcome::Exact(6000), "(20, 1489e1795)"},
  };
  for (const auto& c : cases) {
    const auto got = fdlat::gmin_power(c.r, c.k).outcome;
    check.expect(got == c.expected, std::string(c.label) + " gave " + (got.exact ? "Exact " : "Ambiguous ") +
                                        std::to_string(got.value));
  }
  return check.outcome();
}

fdlat::CampaignReport campaign(fdlat::Campaign which) {
  auto config = fdlat::default_config(which);
  config.jobs = 0;
  return fdlat::run_campaign(which, config);
}

std::string campaign_note(const fdlat::CampaignReport& report) {
  return std::to_string(report.checks) + " campaign checks, " + std::to_string(report.violations) + " violations";
}

Outcome separation() {
  Checker check;
  const auto report = campaign(fdlat::Campaign::kSeparation);
  check.expect(report.pass && report.violations == 0, "campaign reported violations");
  bool saw_flat3 = false, saw_r20 = false;
  std::set<std::int64_t> rs;
  std::size_t equalities = 0;
  for (const auto& text : report.lines) {
    const auto line = json::parse(text);
    const auto pair = line["pair"].get<std::string>();
    check.expect(line["violations"].empty(), pair + " has violations");
    equalities += line["equalities"].size();
    if (pair == "flat3/g3**") {
      saw_flat3 = true;
      check.expect(line["n_lo"] == 3 && line["n_hi"] == 299, "flat3/g3** range");
    }
    if (pair.rfind("flat", 0) == 0 && pair.find("/g") != std::string::npos && pair.find('*') == std::string::npos)
      rs.insert(line["r"].get<std::int64_t>());
    if (pair == "flat20/g20") {
      for (const auto& e : line["equalities"])
        if (e["n"] == 56) saw_r20 = e["value"] == "17672631900";
    }
  }
  check.expect(saw_flat3, "flat3/g3** missing");
  check.expect(saw_r20, "equality at (20, 56) with value 17672631900 missing");
  check.expect(rs.size() == 98 && *rs.begin() == 3 && *rs.rbegin() == 100, "r range 3..100 incomplete");
  return check.outcome(campaign_note(report) + ", " + std::to_string(equalities) + " equalities recorded");
}

Outcome min_location() {
  Checker check;
  const auto report = campaign(fdlat::Campaign::kMinLocation);
  check.expect(report.pass && report.violations == 0, "campaign reported violations");
  check.expect(report.lines.size() == 298, "expected 298 values of n");
  for (const auto& text : report.lines) {
    const auto line = json::parse(text);
    const auto n = std::to_string(line["n"].get<std::int64_t>());
    check.expect(line["location_ok"].get<bool>(), "min location at n = " + n);
    check.expect(line["mn_closed_form_ok"].get<bool>(), "closed form at n = " + n);
  }
  return check.outcome(campaign_note(report));
}

Outcome best_p() {
  Checker check;
  const auto report = campaign(fdlat::Campaign::kBestP);
  check.expect(report.pass && report.violations == 0, "campaign reported violations");
  check.expect(report.lines.size() == 58, "expected r = 3..60");
  for (const auto& text : report.lines) {
    const auto line = json::parse(text);
    check.expect(line["violations"].empty(), "p = 0 not optimal at r = " + std::to_string(line["r"].get<int>()));
  }
  return check.outcome(campaign_note(report));
}

Outcome oracles() {
  Checker check;
  const auto report = campaign(fdlat::Campaign::kOracleSuite);
  check.expect(report.pass && report.violations == 0, "oracle suite reported violations");
  check.expect(fdlat::oracle::build_fd(3).lattice.size() == 18, "|FD(3)|");
  check.expect(fdlat::oracle::build_fd(4).lattice.size() == 166, "|FD(4)|");
  check.expect(fdlat::oracle::sp_exact(fdlat::oracle::crown(), 5) == 2, "Sp(crown, 5)");
  const auto six = fdlat::oracle::sp_exact(fdlat::oracle::crown(), 6);
  check.expect(fdlat::flat_lower(3, 6) == 3 && fdlat::g3_doublestar(6) == 4, "bracket values at n = 6");
  check.expect(3 <= six && six <= 4, "Sp(crown, 6) outside [3, 4]");
  return check.outcome(campaign_note(report) + ", Sp(crown, 6) = " + six.get_str());
}

// A point of H4(n) from four sorted cut points in [0, n-3].
fdlat::SimplexPoint4 random_point(std::mt19937_64& rng, std::int64_t n) {
  std::array<std::int64_t, 4> cuts{};
  for (auto& cut : cuts) cut = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n - 2));
  std::sort(cuts.begin(), cuts.end());
  return {cuts[0], cuts[1] - cuts[0] + 1, cuts[2] - cuts[1] + 1, cuts[3] - cuts[2] + 1};
}

void point_identities(Checker& check, std::int64_t n, const fdlat::SimplexPoint4& pt) {
  const std::string where = "n = " + std::to_string(n);
  check.expect(fdlat::decomposition_check(n, pt), "decomposition at " + where);
  const auto base = fdlat::fha_eval(n, pt);
  std::array<std::int64_t, 3> xs = {pt.x1, pt.x2, pt.x3};
  std::sort(xs.begin(), xs.end());
  do {
    check.expect(fdlat::fha_eval(n, {pt.t, xs[0], xs[1], xs[2]}) == base, "fha symmetry at " + where);
  } while (std::next_permutation(xs.begin(), xs.end()));
  if (fdlat::in_h3(n, {pt.t, pt.x1, pt.x2}))
    check.expect(fdlat::fhb_eval(n, {pt.t, pt.x1, pt.x2}) == fdlat::fhb_eval(n, {pt.t, pt.x2, pt.x1}),
                 "fhb symmetry at " + where);
}

Outcome identities() {
  Checker check;
  for (std::int64_t n = 3; n <= 12; ++n)
    for (std::int64_t t = 0; t + 3 <= n; ++t)
      for (std::int64_t a = 1; t + a + 2 <= n; ++a)
        for (std::int64_t b = 1; t + a + b + 1 <= n; ++b)
          for (std::int64_t c = 1; t + a + b + c <= n; ++c) point_identities(check, n, {t, a, b, c});
  std::mt19937_64 rng(kSeed);
  for (std::int64_t n = 13; n <= 100; ++n)
    for (int trial = 0; trial < kRandomPointsPerN; ++trial) point_identities(check, n, random_point(rng, n));

  // Pascal and multinomial invariants.
  for (std::int64_t n = 1; n <= 300; ++n) {
    Natural row = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      check.expect(fdlat::binom(n, k) == fdlat::binom(n - 1, k - 1) + fdlat::binom(n - 1, k), "Pascal rule");
      check.expect(fdlat::binom(n, k) == fdlat::binom(n, n - k), "binomial symmetry");
      row += fdlat::binom(n, k);
    }
    check.expect(row == Natural(1) << static_cast<mp_bitcnt_t>(n), "row sum");
    check.expect(fdlat::fsp(n) == fdlat::binom(n, n / 2), "fsp");
  }
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::int64_t> parts(1 + rng() % 5);
    std::int64_t total = 0;
    for (auto& part : parts) total += part = static_cast<std::int64_t>(rng() % 30);
    Natural product = 1;
    for (auto part : parts) product *= fdlat::factorial(part);
    check.expect(fdlat::multinomial(total, parts) * product == fdlat::factorial(total), "multinomial quotient");
    if (parts.size() == 2)
      check.expect(fdlat::multinomial(total, parts) == fdlat::binom(total, parts[0]), "multinomial vs binom");
  }
  return check.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::array<std::function<Outcome()>, 11> criteria = {
      nullptr,       table_51, tables_52_53, table_54, table_55, decisions,
      separation,    min_location, best_p,   oracles,  identities};
  const std::array<const char*, 11> names = {"",
                                             "table t51 exact",
                                             "tables t52, t53 exact",
                                             "table t54 rounded values and ratios",
                                             "table t55 rounded values",
                                             "gmin decisions",
                                             "separation campaign",
                                             "min-location campaign",
                                             "best_p campaign",
                                             "oracle equivalences",
                                             "identity suite"};

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) selected.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--only N[,M...]]\n";
      return 2;
    }
  }

  bool all = true;
  for (int c = 1; c <= 10; ++c) {
    if (!selected.empty() && !selected.contains(c)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[c]();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < kBudget[c];
    const bool pass = outcome.pass && in_time;
    all = all && pass;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.3f s of %.0f s budget%s", seconds, kBudget[c], in_time ? "" : " EXCEEDED");
    std::cout << "criterion " << c << ": " << (pass ? "PASS" : "FAIL") << "  " << names[c] << " (" << outcome.detail
              << "; " << timing << ")" << std::endl;
  }
  return all ? 0 : 1;
}
