#pragma once

// Explicit construction of pairwise unrelated copies of FSP(r, a, b) in the
// subset lattice of [n] from fundamental pairs (i, B).
//
// [n] is cut into q = floor(n/r) blocks M_0..M_{q-1} of r consecutive
// elements plus a remainder block M_q.  (i, B) is fundamental when |B| = h,
// B misses M_i, and B meets each earlier block M_j (j < i) in at most a or at
// least b elements.  Each such pair yields the copy
//   U(i, B) = { B u X : X subset of M_i, a < |X| < b }.

#include <cstdint>
#include <vector>

#include "fdlat/estimates.hpp"
#include "fdlat/oracle/poset.hpp"

namespace fdlat::oracle {

struct BlockPartition {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::vector<SubsetMask> blocks;  // M_0..M_{q-1}, then the remainder M_q

  std::int64_t q() const { return static_cast<std::int64_t>(blocks.size()) - 1; }

  /// M_j = {j r + 1, ..., j r + r}; the remainder holds the last n - q r elements.
  static BlockPartition canonical(std::int64_t n, std::int64_t r);
};

struct FundamentalPair {
  std::int64_t index = 0;
  SubsetMask set = 0;
};

struct UnrelatedFamily {
  BlockPartition partition;
  std::vector<FundamentalPair> pairs;
  std::vector<std::vector<SubsetMask>> copies;  // copies[c] = U(pairs[c])
};

inline constexpr std::int64_t kFamilyMaxN = 16;

/// Every fundamental pair for the canonical partition, ordered by (i, B),
/// with its copy.  Requires valid estimate parameters and n <= kFamilyMaxN.
UnrelatedFamily build_unrelated_family(const EstimateParams& params);

/// True when every member of one copy is incomparable with every member of
/// the other, for all pairs of distinct copies.
bool pairwise_unrelated(const std::vector<std::vector<SubsetMask>>& copies);

}  // namespace fdlat::oracle
