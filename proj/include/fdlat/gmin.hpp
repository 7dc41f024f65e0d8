#pragma once

// Deciding the minimum generating size of FD(r)^k from a separated pair of
// estimates (f1, f2) of the Sperner number of J(FD(r)):
//
//   Gmin(FD(r)^k) = min{ n : k <= Sp(J(FD(r)), n) }
//
// With n the unique index such that f1(n) < k <= f1(n+1), the answer is n+1
// when f2(n) < k and one of {n, n+1} otherwise.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdlat/bigcomb.hpp"

namespace fdlat {

enum class LowerEstimate {
  kFlat,  // flat_lower(r, .)
  kMax,   // f_lower_max(r, 0, r, .)
};

enum class UpperEstimate {
  kChain,              // g_upper(r, .)
  kG3Star,             // g3_star, r = 3 and n <= 300 only
  kG3DoubleStar,       // g3_doublestar, r = 3 only
  kG3DoubleStarChain,  // g3_doublestar on 3..300, g_upper(3, .) beyond
};

class EstimatePair {
 public:
  EstimatePair(std::int64_t r, LowerEstimate lower, UpperEstimate upper);

  /// (flat_3, g3** then g3) for r = 3, (flat_r, g_r) otherwise.
  static EstimatePair default_for(std::int64_t r);

  std::int64_t r() const { return r_; }
  /// First n on which both functions are defined.
  std::int64_t domain_start() const { return r_; }
  LowerEstimate lower_kind() const { return lower_; }
  UpperEstimate upper_kind() const { return upper_; }

  Natural lower(std::int64_t n) const;
  Natural upper(std::int64_t n) const;

  std::string lower_name() const;
  std::string upper_name() const;
  std::string id() const { return lower_name() + "/" + upper_name(); }

 private:
  std::int64_t r_;
  LowerEstimate lower_;
  UpperEstimate upper_;
};

struct SeparationReport {
  std::string pair_id;
  std::int64_t r = 0;
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  std::vector<std::int64_t> violations;  // upper(n) > lower(n+1)
  std::vector<std::int64_t> equalities;  // upper(n) == lower(n+1)
  std::vector<Natural> equality_values;

  bool separated() const { return violations.empty(); }
};

/// Checks upper(n) <= lower(n+1) for every n in [n_lo, n_hi].
SeparationReport is_separated(const EstimatePair& pair, std::int64_t n_lo, std::int64_t n_hi,
                              unsigned jobs = 1);

struct GminOutcome {
  bool exact = true;
  std::int64_t value = 0;  // exact answer, or the smaller of the two candidates

  friend bool operator==(const GminOutcome&, const GminOutcome&) = default;
  static GminOutcome Exact(std::int64_t n) { return {true, n}; }
  static GminOutcome Ambiguous(std::int64_t n) { return {false, n}; }
};

struct GminResult {
  std::int64_t r = 0;
  Natural k;
  std::string pair_id;
  std::int64_t n = 0;  // f1(n) < k <= f1(n+1)
  GminOutcome outcome;
  Natural lower_n;       // f1(n)
  Natural upper_n;       // f2(n)
  Natural lower_next;    // f1(n+1)
};

/// First n >= pair.domain_start() with lower(n) < lower(n+1); the plateau
/// lower(r) = lower(r+1) = 1 is skipped this way.
std::int64_t strict_start(const EstimatePair& pair);

/// Throws ConstraintError when k < 2, when k <= lower(strict_start) or when
/// the pair is not separated at the index consulted below the answer.
GminResult gmin_power(std::int64_t r, const Natural& k, const EstimatePair& pair);
GminResult gmin_power(std::int64_t r, const Natural& k);

struct BestP {
  std::vector<std::int64_t> argmax;
  Natural value;
};

/// All p in [-r, r] maximising f_lower_full(p, r, n).
BestP find_best_p(std::int64_t r, std::int64_t n);

/// Smallest n >= r with k <= flat_lower(r, n); an upper bound on the
/// generating size of D^k for every r-generated distributive lattice D.
std::int64_t corollary_upper(std::int64_t r, const Natural& k);

struct StrictIncreaseReport {
  bool pass = true;
  std::vector<std::int64_t> failures;  // n with fn(n) >= fn(n+1)
};

StrictIncreaseReport strict_increase_check(const std::function<Natural(std::int64_t)>& fn,
                                           std::int64_t n_lo, std::int64_t n_hi, unsigned jobs = 1);

}  // namespace fdlat
