#pragma once

// Exhaustive minimisation of the permutation-count expressions over the
// discrete simplices
//
//   H4(n)  = {(t, x1, x2, x3) : t >= 0, xi >= 1, t + x1 + x2 + x3 <= n}
//   H3(n)  = {(t, x, y)       : t >= 0, x, y >= 1, t + x + y <= n - 1}
//   H3'(n) = {(t, x, y) in H3(n) : x <= y}
//
// fha(t, x1, x2, x3) counts the permutations of [n] whose initial segments
// hit a normalised crown copy with parts of sizes (t, x1, x2, x3); fhb is the
// pairwise piece with 2 fha = fhb(t,x1,x2) + fhb(t,x2,x3) + fhb(t,x1,x3).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdlat/bigcomb.hpp"

namespace fdlat {

struct SimplexPoint4 {
  std::int64_t t = 0;
  std::int64_t x1 = 1;
  std::int64_t x2 = 1;
  std::int64_t x3 = 1;

  friend auto operator<=>(const SimplexPoint4&, const SimplexPoint4&) = default;
};

struct SimplexPoint3 {
  std::int64_t t = 0;
  std::int64_t x = 1;
  std::int64_t y = 1;

  friend auto operator<=>(const SimplexPoint3&, const SimplexPoint3&) = default;
};

bool in_h4(std::int64_t n, const SimplexPoint4& pt);
bool in_h3(std::int64_t n, const SimplexPoint3& pt);
bool in_h3_half(std::int64_t n, const SimplexPoint3& pt);

/// Minimum value together with every point of the searched domain attaining
/// it, sorted lexicographically.
template <typename Point>
struct MinResult {
  std::int64_t n = 0;
  Natural value;
  std::vector<Point> argmin;
};

using MinResult3 = MinResult<SimplexPoint3>;
using MinResult4 = MinResult<SimplexPoint4>;

Natural fha_eval(std::int64_t n, const SimplexPoint4& pt);
Natural fhb_eval(std::int64_t n, const SimplexPoint3& pt);

/// Minimum of fhb over H3(n).  Searches H3'(n) in (t, x, y) ascending order,
/// split into t-slices over `jobs` workers, and reflects (t,x,y) -> (t,y,x)
/// so the argmin covers all of H3(n).
MinResult3 min_fhb(std::int64_t n, unsigned jobs = 1);

/// Minimum of fha over all of H4(n) by brute force.  Independent oracle;
/// only accepted for n <= kFullH4SearchMax.
MinResult4 min_fha_full(std::int64_t n);

inline constexpr std::int64_t kFullH4SearchMax = 40;
inline constexpr std::int64_t kCertifiedMinLocationMax = 300;

/// The point (floor((n-2)/2), 1, 1) where fhb is expected to be minimal.
SimplexPoint3 expected_fhb_minimizer(std::int64_t n);

struct MinLocationReport {
  bool pass = false;
  MinResult3 result;
};

/// True iff (floor((n-2)/2), 1, 1) is among the minimisers of fhb on H3(n).
MinLocationReport verify_min_location(std::int64_t n, unsigned jobs = 1);

/// fha(floor((n-2)/2), 1, 1, 1) written out with floors and ceilings.
Natural mn_closed_form(std::int64_t n);

enum class MnMode { kCertifiedClosedForm, kFullH4Search, kViaH3 };

std::string to_string(MnMode mode);

/// M_n = min fha over H4(n).
///  - kCertifiedClosedForm: the closed form; for n > 300 the minimum location
///    is re-verified by search first and a failure raises ConstraintError.
///  - kFullH4Search: brute force over H4(n), n <= kFullH4SearchMax.
///  - kViaH3: 3/2 times the H3 minimum, which is exact when that minimum is
///    attained at a point (t, x, x) extendable to (t, x, x, x) in H4(n).
Natural compute_mn(std::int64_t n, MnMode mode, unsigned jobs = 1);

/// 3/2 times the H3 minimum when some minimiser (t, x, x) has t + 3x <= n,
/// which then equals M_n; nullopt otherwise.
std::optional<Natural> mn_from_h3(const MinResult3& result);

/// Checks 2 fha(t,x1,x2,x3) = fhb(t,x1,x2) + fhb(t,x2,x3) + fhb(t,x1,x3).
bool decomposition_check(std::int64_t n, const SimplexPoint4& pt);

std::string format_point(const SimplexPoint3& pt);

}  // namespace fdlat
