#pragma once

// Reference implementations used only by the tests.  They are deliberately
// naive (Pascal rows, running products) and share no code with the library.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace testref {

inline constexpr std::uint64_t kSeed = 0x5eed'f00d'2024ULL;

// Pascal triangle rows 0..n_max built by addition only.
class Pascal {
 public:
  explicit Pascal(int n_max) : rows_(static_cast<std::size_t>(n_max) + 1) {
    for (int n = 0; n <= n_max; ++n) {
      rows_[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
  mpz_class operator()(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

inline mpz_class fact(std::int64_t n) {
  mpz_class f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// Direct transcription of the p = 0 lower estimate with Pascal binomials.
inline mpz_class flat_ref(const Pascal& c, std::int64_t r, std::int64_t n) {
  const std::int64_t h = (n - r) / 2;
  mpz_class s = 0;
  for (std::int64_t i = 0; i < n / r; ++i)
    for (std::int64_t j = 0; j <= i; ++j) s += c(i, j) * c(n - (i + 1) * r, h - j * r);
  return s;
}

inline mpz_class fha_ref(std::int64_t n, std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
  // Inclusion-exclusion over the six members of the crown copy.  Only
  // comparable members have intersecting permutation sets, and no three
  // members share a permutation.
  auto f = [](std::int64_t m) { return fact(m); };
  const std::int64_t xs[3] = {a, b, c};
  mpz_class total = 0;
  for (int i = 0; i < 3; ++i) total += f(t + xs[i]) * f(n - t - xs[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) total += f(t + xs[i] + xs[j]) * f(n - t - xs[i] - xs[j]);
  // Chains T u X < T u X u Y are counted twice above.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) total -= f(t + xs[i]) * f(xs[j]) * f(n - t - xs[i] - xs[j]);
  return total;
}

}  // namespace testref
