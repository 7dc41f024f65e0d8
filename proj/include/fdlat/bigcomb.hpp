#pragma once

// Exact combinatorial primitives over arbitrary-precision naturals.
//
// Binomial coefficients follow the "zero unless" convention: C(n, k) is 0
// whenever n < 0, k < 0 or k > n.  Nothing in here ever rounds.

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fdlat {

/// Nonnegative arbitrary-precision integer.  Every count, factorial and
/// estimate value in the library is a Natural.
using Natural = mpz_class;

/// Raised when an argument violates a documented precondition.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Natural binom(std::int64_t n, std::int64_t k);

/// Central binomial coefficient C(n, floor(n/2)).
Natural fsp(std::int64_t n);

Natural factorial(std::int64_t n);

/// i! / (parts[0]! * ... * parts[m-1]!).  The parts must sum to i.
Natural multinomial(std::int64_t i, std::span<const std::int64_t> parts);

Natural pow10(unsigned exponent);

/// Parses a decimal string of digits into a Natural.
Natural parse_natural(const std::string& text);

// i! for 0 <= i <= n_max, built once and read-only afterwards.
class FactorialTable {
 public:
  explicit FactorialTable(std::int64_t n_max);

  std::int64_t n_max() const { return static_cast<std::int64_t>(table_.size()) - 1; }
  const Natural& operator[](std::int64_t i) const;
  const std::vector<Natural>& values() const { return table_; }

  /// Writes the table in the cache format (see README): magic "FDLATFAC",
  /// u32 version, u64 n_max, then per entry a u64 limb count followed by
  /// that many 64-bit little-endian limbs, least significant first.
  void save(const std::filesystem::path& file) const;
  /// Reads a cache file; throws std::runtime_error on malformed or
  /// inconsistent content.
  static FactorialTable load(const std::filesystem::path& file);

 private:
  explicit FactorialTable(std::vector<Natural> table) : table_(std::move(table)) {}
  std::vector<Natural> table_;
};

inline constexpr std::int64_t kSharedFactorialMax = 6001;

/// Process-wide factorial table covering 0..kSharedFactorialMax.  The first
/// call builds it (or loads it from $FDLAT_FACT_CACHE when that is set).
const FactorialTable& shared_factorials();

// Pascal triangle rows 0..n_max; lookups return references, so the
// estimate loops do not allocate for small arguments.
class BinomialTable {
 public:
  explicit BinomialTable(std::int64_t n_max);

  std::int64_t n_max() const { return n_max_; }
  /// C(n, k) with the zero convention; n must not exceed n_max.
  const Natural& operator()(std::int64_t n, std::int64_t k) const;

 private:
  std::int64_t n_max_;
  std::vector<std::vector<Natural>> rows_;
  Natural zero_{0};
};

inline constexpr std::int64_t kSharedBinomialMax = 512;

const BinomialTable& shared_binomials();

}  // namespace fdlat
