#include "fdlat/estimates.hpp"

#include <climits>
#include <string>

#include "fdlat/minsearch.hpp"

namespace fdlat {

void EstimateParams::validate() const {
  if (!(0 <= a && a < b && b <= r && a + 2 <= b))
    throw ConstraintError("estimate: need 0 <= a < b <= r and a + 2 <= b (r=" + std::to_string(r) +
                          ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  if (p < -r || p > r) throw ConstraintError("estimate: need -r <= p <= r (p=" + std::to_string(p) + ")");
  if (n < r) throw ConstraintError("estimate: need n >= r (n=" + std::to_string(n) + ")");
}

std::vector<std::int64_t> extremal_sizes(std::int64_t r, std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> sizes;
  for (std::int64_t j = 0; j <= a; ++j) sizes.push_back(j);
  for (std::int64_t j = b; j <= r; ++j) sizes.push_back(j);
  return sizes;
}

void for_each_composition(std::size_t parts, std::int64_t weight,
                          const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (weight < 0) return;
  if (parts == 0) {
    if (weight == 0) visit({});
    return;
  }
  std::vector<std::int64_t> v(parts, 0);
  // Fill position `at` with every feasible value in ascending order; the last
  // coordinate absorbs whatever weight is left.
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t at, std::int64_t left) {
    if (at + 1 == parts) {
      v[at] = left;
      visit(v);
      return;
    }
    for (std::int64_t value = 0; value <= left; ++value) {
      v[at] = value;
      fill(at + 1, left - value);
    }
  };
  fill(0, weight);
}

Natural f_lower_general(const EstimateParams& params) {
  params.validate();
  const auto [r, a, b, p, n] = params;
  const auto sizes = extremal_sizes(r, a, b);
  const std::int64_t h = params.target_size();

  std::vector<Natural> block_choices;  // C(r, j) for j in sizes
  for (auto j : sizes) block_choices.push_back(binom(r, j));

  Natural total = 0;
  Natural term;
  for (std::int64_t i = 0; i < n / r; ++i) {
    const std::int64_t rest = n - (i + 1) * r;
    for_each_composition(sizes.size(), i, [&](std::span<const std::int64_t> v) {
      std::int64_t used = 0;
      for (std::size_t s = 0; s < v.size(); ++s) used += sizes[s] * v[s];
      const std::int64_t k = h - used;
      if (k < 0 || k > rest) return;  // middle binomial vanishes
      term = multinomial(i, v) * binom(rest, k);
      for (std::size_t s = 0; s < v.size(); ++s) {
        if (v[s] == 0 || block_choices[s] == 1) continue;
        Natural power;
        mpz_pow_ui(power.get_mpz_t(), block_choices[s].get_mpz_t(), static_cast<unsigned long>(v[s]));
        term *= power;
      }
      total += term;
    });
  }
  return total;
}

Natural f_lower_max(std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t n) {
  EstimateParams params{r, a, b, -r, n};
  params.validate();
  Natural best = f_lower_general(params);
  for (std::int64_t p = -r + 1; p <= r; ++p) {
    params.p = p;
    Natural value = f_lower_general(params);
    if (value > best) best = std::move(value);
  }
  return best;
}

namespace {

// value <- value * prod(factors) / prod(divisors), where the exact quotient is
// known to be an integer.  Factors are grouped into machine words first.
void scale_exact(mpz_class& value, std::span<const unsigned long> factors,
                 std::span<const unsigned long> divisors) {
  auto grouped = [](std::span<const unsigned long> xs, auto&& apply) {
    unsigned long word = 1;
    for (auto x : xs) {
      if (x != 0 && word > ULONG_MAX / x) {
        apply(word);
        word = 1;
      }
      word *= x;
    }
    if (word != 1) apply(word);
  };
  grouped(factors, [&](unsigned long w) { mpz_mul_ui(value.get_mpz_t(), value.get_mpz_t(), w); });
  grouped(divisors, [&](unsigned long w) { mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), w); });
}

}  // namespace

Natural f_lower_full(std::int64_t p, std::int64_t r, std::int64_t n) {
  if (r < 3 || n < r) throw ConstraintError("f_lower_full: need 3 <= r <= n");
  if (p < -r || p > r) throw ConstraintError("f_lower_full: need -r <= p <= r");

  const auto& small = shared_binomials();
  const std::int64_t h = p + (n - r) / 2;
  Natural total = 0;
  mpz_class outer;  // C(i, j)
  mpz_class inner;  // C(rest, h - j r)
  std::vector<unsigned long> up, down;

  for (std::int64_t i = 0; i < n / r; ++i) {
    const std::int64_t rest = n - (i + 1) * r;
    // k = h - j r must lie in [0, rest]; j runs over [j_lo, j_hi].
    std::int64_t j_lo = 0;
    if (h > rest) j_lo = (h - rest + r - 1) / r;
    const std::int64_t j_hi = std::min(i, h >= 0 ? h / r : -1);
    if (j_lo > j_hi) continue;

    if (rest <= small.n_max() && i <= small.n_max()) {
      for (std::int64_t j = j_lo; j <= j_hi; ++j)
        mpz_addmul(total.get_mpz_t(), small(i, j).get_mpz_t(), small(rest, h - j * r).get_mpz_t());
      continue;
    }

    // Large arguments: walk both binomials along j with exact ratio updates.
    mpz_bin_uiui(outer.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j_lo));
    mpz_bin_uiui(inner.get_mpz_t(), static_cast<unsigned long>(rest), static_cast<unsigned long>(h - j_lo * r));
    for (std::int64_t j = j_lo;; ++j) {
      mpz_addmul(total.get_mpz_t(), outer.get_mpz_t(), inner.get_mpz_t());
      if (j == j_hi) break;
      // C(i, j+1) = C(i, j) (i - j) / (j + 1)
      mpz_mul_ui(outer.get_mpz_t(), outer.get_mpz_t(), static_cast<unsigned long>(i - j));
      mpz_divexact_ui(outer.get_mpz_t(), outer.get_mpz_t(), static_cast<unsigned long>(j + 1));
      // C(rest, k - r) = C(rest, k) k (k-1) ... (k-r+1) / ((rest-k+1) ... (rest-k+r))
      const std::int64_t k = h - j * r;
      up.clear();
      down.clear();
      for (std::int64_t s = 0; s < r; ++s) {
        up.push_back(static_cast<unsigned long>(k - s));
        down.push_back(static_cast<unsigned long>(rest - k + 1 + s));
      }
      scale_exact(inner, up, down);
    }
  }
  return total;
}

Natural flat_lower(std::int64_t r, std::int64_t n) { return f_lower_full(0, r, n); }

Natural g_upper(std::int64_t r, std::int64_t n) {
  if (r < 2 || r > n) throw ConstraintError("g_upper: need 2 <= r <= n");
  Natural value = fsp(n + 2 - r);
  mpz_fdiv_q_2exp(value.get_mpz_t(), value.get_mpz_t(), 1);
  return value;
}

Natural g3_star(std::int64_t n, bool allow_uncertified, unsigned jobs) {
  if (n < 3) throw ConstraintError("g3_star: need n >= 3");
  Natural mn;
  if (n <= kCertifiedMinLocationMax) {
    mn = compute_mn(n, MnMode::kCertifiedClosedForm, jobs);
  } else {
    if (!allow_uncertified)
      throw ConstraintError("g3_star: n = " + std::to_string(n) +
                            " is outside the certified range 3..300 (use the extension flag)");
    mn = compute_mn(n, MnMode::kViaH3, jobs);
  }
  return factorial(n) / mn;
}

Natural g3_doublestar(std::int64_t n) {
  if (n < 3) throw ConstraintError("g3_doublestar: need n >= 3");
  return factorial(n) / mn_closed_form(n);
}

Natural g2(std::int64_t n) {
  if (n < 2) throw ConstraintError("g2: need n >= 2");
  Natural value = fsp(n);
  mpz_fdiv_q_2exp(value.get_mpz_t(), value.get_mpz_t(), 1);
  return value;
}

}  // namespace fdlat
