#pragma once

// Small explicit posets for brute-force cross-checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "fdlat/bigcomb.hpp"

namespace fdlat::oracle {

/// A subset of [n] encoded as a bitmask; bit e stands for element e + 1.
using SubsetMask = std::uint64_t;

inline bool is_subset(SubsetMask x, SubsetMask y) { return (x & ~y) == 0; }
inline bool incomparable(SubsetMask x, SubsetMask y) { return !is_subset(x, y) && !is_subset(y, x); }

class FinitePoset {
 public:
  FinitePoset() = default;
  /// The discrete order (antichain) on `size` elements.
  explicit FinitePoset(std::size_t size);

  /// Subsets ordered by inclusion, in the given order.
  static FinitePoset from_subsets(const std::vector<SubsetMask>& members);

  std::size_t size() const { return size_; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size_ + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool parallel(std::size_t x, std::size_t y) const { return !leq(x, y) && !leq(y, x); }
  void set_leq(std::size_t x, std::size_t y, bool value = true) { leq_[x * size_ + y] = value ? 1 : 0; }

  /// Reflexive, antisymmetric and transitive.
  bool is_partial_order() const;

  /// The subposet induced on `elements`, in that order.
  FinitePoset induced(const std::vector<std::size_t>& elements) const;

  std::size_t down_count(std::size_t x) const;
  std::size_t up_count(std::size_t x) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> leq_;
};

/// Members of {X subset of [r] : a < |X| < b} in increasing mask order.
std::vector<SubsetMask> fsp_members(std::int64_t r, std::int64_t a, std::int64_t b);

/// The full segment poset FSP(r, a, b) under inclusion.
FinitePoset build_fsp(std::int64_t r, std::int64_t a, std::int64_t b);

/// The 6-element 3-crown, FSP(3, 0, 3).
FinitePoset crown();

/// An order isomorphism from `left` onto `right` (mapping[i] is the image of
/// element i), or nullopt.  Backtracking pruned by up/down-set sizes.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& left, const FinitePoset& right);

inline bool isomorphic(const FinitePoset& left, const FinitePoset& right) {
  return find_isomorphism(left, right).has_value();
}

}  // namespace fdlat::oracle
