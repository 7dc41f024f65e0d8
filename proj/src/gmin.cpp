#include "fdlat/gmin.hpp"

#include <map>

#include "fdlat/estimates.hpp"
#include "fdlat/minsearch.hpp"
#include "fdlat/parallel.hpp"

namespace fdlat {

EstimatePair::EstimatePair(std::int64_t r, LowerEstimate lower, UpperEstimate upper)
    : r_(r), lower_(lower), upper_(upper) {
  if (r < 3) throw ConstraintError("EstimatePair: need r >= 3");
  if (upper != UpperEstimate::kChain && r != 3)
    throw ConstraintError("EstimatePair: the g3 upper estimates exist only for r = 3");
}

EstimatePair EstimatePair::default_for(std::int64_t r) {
  if (r == 3) return EstimatePair(3, LowerEstimate::kFlat, UpperEstimate::kG3DoubleStarChain);
  return EstimatePair(r, LowerEstimate::kFlat, UpperEstimate::kChain);
}

Natural EstimatePair::lower(std::int64_t n) const {
  switch (lower_) {
    case LowerEstimate::kFlat: return flat_lower(r_, n);
    case LowerEstimate::kMax: return f_lower_max(r_, 0, r_, n);
  }
  throw ConstraintError("EstimatePair: unknown lower estimate");
}

Natural EstimatePair::upper(std::int64_t n) const {
  switch (upper_) {
    case UpperEstimate::kChain: return g_upper(r_, n);
    case UpperEstimate::kG3Star: return g3_star(n);
    case UpperEstimate::kG3DoubleStar: return g3_doublestar(n);
    case UpperEstimate::kG3DoubleStarChain:
      return n <= kCertifiedMinLocationMax ? g3_doublestar(n) : g_upper(3, n);
  }
  throw ConstraintError("EstimatePair: unknown upper estimate");
}

std::string EstimatePair::lower_name() const {
  const auto r = std::to_string(r_);
  return lower_ == LowerEstimate::kFlat ? "flat" + r : "fmax" + r;
}

std::string EstimatePair::upper_name() const {
  switch (upper_) {
    case UpperEstimate::kChain: return "g" + std::to_string(r_);
    case UpperEstimate::kG3Star: return "g3*";
    case UpperEstimate::kG3DoubleStar: return "g3**";
    case UpperEstimate::kG3DoubleStarChain: return "g3**|g3";
  }
  return "?";
}

SeparationReport is_separated(const EstimatePair& pair, std::int64_t n_lo, std::int64_t n_hi, unsigned jobs) {
  if (n_lo < pair.domain_start())
    throw ConstraintError("is_separated: range starts below the domain of " + pair.id());
  SeparationReport report;
  report.pair_id = pair.id();
  report.r = pair.r();
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  if (n_hi < n_lo) return report;

  struct Probe {
    int order = 0;
    Natural upper;
  };
  auto probes = parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), jobs, [&](std::size_t offset) {
    const auto n = n_lo + static_cast<std::int64_t>(offset);
    Probe probe;
    probe.upper = pair.upper(n);
    probe.order = cmp(probe.upper, pair.lower(n + 1));
    return probe;
  });
  for (std::size_t offset = 0; offset < probes.size(); ++offset) {
    const auto n = n_lo + static_cast<std::int64_t>(offset);
    if (probes[offset].order > 0) {
      report.violations.push_back(n);
    } else if (probes[offset].order == 0) {
      report.equalities.push_back(n);
      report.equality_values.push_back(probes[offset].upper);
    }
  }
  return report;
}

std::int64_t strict_start(const EstimatePair& pair) {
  std::int64_t s = pair.domain_start();
  Natural current = pair.lower(s);
  for (;; ++s) {
    Natural next = pair.lower(s + 1);
    if (current < next) return s;
    current = std::move(next);
  }
}

GminResult gmin_power(std::int64_t r, const Natural& k, const EstimatePair& pair) {
  if (pair.r() != r) throw ConstraintError("gmin_power: pair belongs to a different r");
  if (k < 2) throw ConstraintError("gmin_power: need k >= 2");

  std::map<std::int64_t, Natural> memo;
  auto lower = [&](std::int64_t n) -> const Natural& {
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, pair.lower(n)).first;
    return it->second;
  };

  const std::int64_t s = strict_start(pair);
  if (lower(s) >= k)
    throw ConstraintError("gmin_power: k must exceed the lower estimate at the strict start n = " +
                          std::to_string(s));

  // Invariant: lower(lo) < k.  Grow hi until k <= lower(hi), then bisect.
  std::int64_t lo = s;
  std::int64_t step = 1;
  std::int64_t hi = s + 1;
  while (lower(hi) < k) {
    lo = hi;
    step *= 2;
    hi = s + step;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (lower(mid) < k)
      lo = mid;
    else
      hi = mid;
  }
  const std::int64_t n = lo;

  // Sp(n-1) <= upper(n-1) <= lower(n) < k is what rules out n-1 generators.
  if (n - 1 >= pair.domain_start() && pair.upper(n - 1) > lower(n))
    throw ConstraintError("gmin_power: pair " + pair.id() + " is not separated at n = " + std::to_string(n - 1));

  GminResult result;
  result.r = r;
  result.k = k;
  result.pair_id = pair.id();
  result.n = n;
  result.lower_n = lower(n);
  result.upper_n = pair.upper(n);
  result.lower_next = lower(n + 1);
  result.outcome = result.upper_n < k ? GminOutcome::Exact(n + 1) : GminOutcome::Ambiguous(n);
  return result;
}

GminResult gmin_power(std::int64_t r, const Natural& k) { return gmin_power(r, k, EstimatePair::default_for(r)); }

BestP find_best_p(std::int64_t r, std::int64_t n) {
  if (r < 3 || n < r) throw ConstraintError("find_best_p: need 3 <= r <= n");
  BestP best;
  for (std::int64_t p = -r; p <= r; ++p) {
    Natural value = f_lower_full(p, r, n);
    if (best.argmax.empty() || value > best.value) {
      best.value = std::move(value);
      best.argmax.assign(1, p);
    } else if (value == best.value) {
      best.argmax.push_back(p);
    }
  }
  return best;
}

std::int64_t corollary_upper(std::int64_t r, const Natural& k) {
  if (r < 3) throw ConstraintError("corollary_upper: need r >= 3");
  if (k <= flat_lower(r, r)) return r;
  // flat_lower(r, .) is nondecreasing; keep lower(lo) < k <= lower(hi).
  std::int64_t lo = r;
  std::int64_t step = 1;
  std::int64_t hi = r + 1;
  while (flat_lower(r, hi) < k) {
    lo = hi;
    step *= 2;
    hi = r + step;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (flat_lower(r, mid) < k)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

StrictIncreaseReport strict_increase_check(const std::function<Natural(std::int64_t)>& fn, std::int64_t n_lo,
                                           std::int64_t n_hi, unsigned jobs) {
  StrictIncreaseReport report;
  if (n_hi < n_lo) return report;
  auto values = parallel_map(static_cast<std::size_t>(n_hi - n_lo + 2), jobs,
                             [&](std::size_t offset) { return fn(n_lo + static_cast<std::int64_t>(offset)); });
  for (std::size_t offset = 0; offset + 1 < values.size(); ++offset) {
    if (!(values[offset] < values[offset + 1])) report.failures.push_back(n_lo + static_cast<std::int64_t>(offset));
  }
  report.pass = report.failures.empty();
  return report;
}

}  // namespace fdlat
