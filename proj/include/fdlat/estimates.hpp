#pragma once

// Lower and upper estimates for the number of pairwise unrelated copies of
// the full segment poset FSP(r, a, b) in the subset lattice of [n].

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fdlat/bigcomb.hpp"

namespace fdlat {

struct EstimateParams {
  std::int64_t r = 3;
  std::int64_t a = 0;
  std::int64_t b = 3;
  std::int64_t p = 0;
  std::int64_t n = 3;

  /// Throws ConstraintError unless 0 <= a < b <= r, a + 2 <= b,
  /// -r <= p <= r and n >= r.
  void validate() const;

  /// Size h of the set component of a fundamental pair: p + floor((n-r)/2).
  std::int64_t target_size() const { return p + (n - r) / 2; }
};

/// Indices {0..a} u {b..r} of the extremal (small or large) block sizes.
std::vector<std::int64_t> extremal_sizes(std::int64_t r, std::int64_t a, std::int64_t b);

/// Calls visit(v) for every v in N^parts with v[0] + ... + v[parts-1] = weight,
/// in lexicographic order.
void for_each_composition(std::size_t parts, std::int64_t weight,
                          const std::function<void(std::span<const std::int64_t>)>& visit);

/// The general lower estimate f<p,r,a,b>(n): a sum over block index i and
/// compositions of i over the extremal sizes of
///   multinomial(i; v) * C(n-(i+1)r, h - sum j v_j) * prod C(r, j)^v_j.
Natural f_lower_general(const EstimateParams& params);

/// max over p in [-r, r] of f_lower_general.
Natural f_lower_max(std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t n);

/// Specialisation to a = 0, b = r:
///   sum_{i < floor(n/r)} sum_{j <= i} C(i, j) C(n-(i+1)r, p + floor((n-r)/2) - j r).
/// Requires 3 <= r <= n and -r <= p <= r.
Natural f_lower_full(std::int64_t p, std::int64_t r, std::int64_t n);

/// f_lower_full with p = 0; the lower estimate used throughout.
Natural flat_lower(std::int64_t r, std::int64_t n);

/// floor(fsp(n + 2 - r) / 2), from the two unrelated chains inside FSP(r,0,r).
Natural g_upper(std::int64_t r, std::int64_t n);

/// floor(n! / M_n) with M_n from the minimum search.  For n > 300 the value
/// is only produced when allow_uncertified is set, and then M_n is
/// recomputed by search instead of taken from the closed form.
Natural g3_star(std::int64_t n, bool allow_uncertified = false, unsigned jobs = 1);

/// floor(n! / (3 fl(n/2)! ce(n/2)! + 3 fl((n+2)/2)! ce((n-2)/2)! - 6 fl(n/2)! ce((n-2)/2)!)).
Natural g3_doublestar(std::int64_t n);

/// floor(fsp(n) / 2): the exact Sperner number of the 2-antichain.
Natural g2(std::int64_t n);

}  // namespace fdlat
