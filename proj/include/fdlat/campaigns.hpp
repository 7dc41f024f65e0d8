#pragma once

// Verification sweeps.  Each campaign produces one JSON line per check on
// its report and passes iff no check recorded a violation.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fdlat {

enum class Campaign { kSeparation, kBestP, kMinLocation, kFlatVsMax, kOracleSuite };

std::string to_string(Campaign campaign);
Campaign parse_campaign(const std::string& text);  // throws ConstraintError

struct CampaignConfig {
  std::int64_t r_lo = 0;
  std::int64_t r_hi = 0;
  std::int64_t n_lo = 0;  // 0: start each sweep at its natural first index
  std::int64_t n_hi = 0;
  unsigned jobs = 1;
  bool exhaustive_fd3_squared = false;  // oracle_suite: decide Gmin(FD(3)^2) by closure search
};

/// separation: r 3..100, n up to 299.  best_p: r 3..60, n up to 300.
/// min_location: n 3..300.  flat_vs_max: r 3..40, n up to 300.
CampaignConfig default_config(Campaign campaign);

/// Throws ConstraintError for ranges outside what the campaign supports.
void validate(Campaign campaign, const CampaignConfig& config);

struct CampaignReport {
  Campaign campaign = Campaign::kSeparation;
  bool pass = true;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> lines;  // JSON lines in deterministic order
  double seconds = 0;
};

/// Validates, then runs.  Per-item progress goes to `telemetry` when given.
CampaignReport run_campaign(Campaign campaign, const CampaignConfig& config, std::ostream* telemetry = nullptr);

}  // namespace fdlat
