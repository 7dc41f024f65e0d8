#include "fdlat/oracle/family.hpp"

#include <bit>
#include <string>

namespace fdlat::oracle {

BlockPartition BlockPartition::canonical(std::int64_t n, std::int64_t r) {
  if (r < 1 || n < r || n > 63) throw ConstraintError("BlockPartition: need 1 <= r <= n <= 63");
  BlockPartition partition;
  partition.n = n;
  partition.r = r;
  const std::int64_t q = n / r;
  const SubsetMask block = (SubsetMask{1} << r) - 1;
  SubsetMask used = 0;
  for (std::int64_t j = 0; j < q; ++j) {
    partition.blocks.push_back(block << (j * r));
    used |= partition.blocks.back();
  }
  partition.blocks.push_back(((SubsetMask{1} << n) - 1) & ~used);
  return partition;
}

UnrelatedFamily build_unrelated_family(const EstimateParams& params) {
  params.validate();
  if (params.n > kFamilyMaxN)
    throw ConstraintError("build_unrelated_family: n = " + std::to_string(params.n) + " exceeds " +
                          std::to_string(kFamilyMaxN));
  const auto [r, a, b, p, n] = params;
  const std::int64_t h = params.target_size();

  UnrelatedFamily family;
  family.partition = BlockPartition::canonical(n, r);
  const auto& blocks = family.partition.blocks;

  std::vector<SubsetMask> middles;  // X subset of M_0 with a < |X| < b, shifted per block below
  for (SubsetMask x = 0; x < (SubsetMask{1} << r); ++x) {
    const auto size = std::popcount(x);
    if (a < size && size < b) middles.push_back(x);
  }

  if (h < 0 || h > n) return family;
  const SubsetMask all = (SubsetMask{1} << n) - 1;
  for (std::int64_t i = 0; i < family.partition.q(); ++i) {
    for (SubsetMask set = 0; set <= all; ++set) {
      if (std::popcount(set) != h || (set & blocks[i]) != 0) continue;
      bool extremal = true;
      for (std::int64_t j = 0; j < i && extremal; ++j) {
        const auto meet = std::popcount(set & blocks[j]);
        extremal = meet <= a || meet >= b;
      }
      if (!extremal) continue;
      family.pairs.push_back({i, set});
      std::vector<SubsetMask> copy;
      copy.reserve(middles.size());
      for (auto x : middles) copy.push_back(set | (x << (i * r)));
      family.copies.push_back(std::move(copy));
    }
  }
  return family;
}

bool pairwise_unrelated(const std::vector<std::vector<SubsetMask>>& copies) {
  for (std::size_t c = 0; c < copies.size(); ++c)
    for (std::size_t d = c + 1; d < copies.size(); ++d)
      for (auto x : copies[c])
        for (auto y : copies[d])
          if (!incomparable(x, y)) return false;
  return true;
}

}  // namespace fdlat::oracle
