#pragma once

// Finite distributive lattices realised as families of bitmasks closed under
// OR and AND.  FD(r) is the family of nonconstant monotone Boolean functions
// of r variables, each stored as its 2^r-bit truth table.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fdlat/oracle/poset.hpp"

namespace fdlat::oracle {

using Element = std::uint32_t;

class LatticeTable {
 public:
  /// `members` must be closed under | and &; `width` is the number of mask
  /// bits in use (needed to form direct powers).
  LatticeTable(std::vector<std::uint64_t> members, unsigned width);

  std::size_t size() const { return masks_.size(); }
  unsigned width() const { return width_; }
  std::uint64_t mask(Element e) const { return masks_[e]; }
  std::optional<Element> find(std::uint64_t mask) const;

  Element join(Element x, Element y) const;
  Element meet(Element x, Element y) const;
  bool leq(Element x, Element y) const { return (masks_[x] & ~masks_[y]) == 0; }

  /// Exhaustive check of the lattice and distributive laws on the tables.
  bool satisfies_lattice_axioms(bool check_distributive = true) const;

  /// Dense join/meet tables are kept for lattices up to this size.
  static constexpr std::size_t kDenseLimit = 1024;

 private:
  Element index_of(std::uint64_t mask) const;

  std::vector<std::uint64_t> masks_;
  unsigned width_;
  std::unordered_map<std::uint64_t, Element> index_;
  std::vector<std::uint16_t> join_table_;
  std::vector<std::uint16_t> meet_table_;
};

struct FreeDistributiveLattice {
  LatticeTable lattice;
  std::vector<Element> generators;  // the projections x_1..x_r
};

/// FD(r) for 2 <= r <= 5.
FreeDistributiveLattice build_fd(std::int64_t r);

/// The powerset lattice of [n], n <= 16.
LatticeTable powerset_lattice(std::int64_t n);

/// L^k with componentwise operations; needs k * width <= 64.
LatticeTable direct_power(const LatticeTable& lattice, std::int64_t k);

struct JoinIrreducibles {
  std::vector<Element> elements;
  FinitePoset poset;
};

/// Elements with exactly one lower cover, with the induced order.
JoinIrreducibles join_irreducibles(const LatticeTable& lattice);

/// Number of lower covers of every element (quadratic-cubic brute force,
/// small lattices only).
std::vector<std::size_t> lower_cover_counts(const LatticeTable& lattice);

/// Least subset closed under join and meet containing `seed`; sorted.
std::vector<Element> closure(const LatticeTable& lattice, const std::vector<Element>& seed);

struct MinGenerating {
  std::size_t size = 0;
  bool exact = true;               // false: `size` is only a certified lower bound
  std::vector<Element> witness;    // a generating set of that size when exact
  std::uint64_t closure_calls = 0;
};

inline constexpr std::uint64_t kDefaultClosureCap = 100'000'000;

/// Smallest m such that some m-subset generates the lattice, trying sizes
/// 1, 2, ... and subsets in colexicographic order.  When the closure budget
/// runs out the result is downgraded to a lower bound.
MinGenerating min_generating_size(const LatticeTable& lattice, std::uint64_t closure_cap = kDefaultClosureCap);

/// J(FD(r)) is order-isomorphic to FSP(r, 0, r).
bool check_lemma(std::int64_t r);

}  // namespace fdlat::oracle
