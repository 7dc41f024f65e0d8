#pragma once

// Exact Sperner numbers Sp(U, n) for tiny instances, and the permutation
// counting that bounds them from above.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fdlat/bigcomb.hpp"
#include "fdlat/oracle/poset.hpp"

namespace fdlat::oracle {

/// Raised when an oracle instance is beyond the supported size.
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A crown copy in normal form: T and three pairwise disjoint nonempty parts
// A, B, C disjoint from T.  Its members are T u A, T u B, T u C (bottom) and
// T u A u B, T u A u C, T u B u C (top).
struct CrownCopy {
  SubsetMask t = 0;
  SubsetMask a = 0;
  SubsetMask b = 0;
  SubsetMask c = 0;

  bool valid() const;
  std::array<SubsetMask, 6> members() const;
};

/// Every normal-form crown copy in the subset lattice of [n], one per
/// member set (A, B, C taken in increasing mask order).
std::vector<CrownCopy> normalized_crowns(std::int64_t n);

/// Undirected graph on vertices 0..size-1 stored as adjacency bitsets.
class Graph {
 public:
  explicit Graph(std::size_t size);
  std::size_t size() const { return size_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return (rows_[u][v / 64] >> (v % 64)) & 1u; }
  const std::vector<std::uint64_t>& row(std::size_t u) const { return rows_[u]; }

 private:
  std::size_t size_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// A maximum clique (vertex list, ascending), by branch and bound with a
/// greedy colouring bound.
std::vector<std::size_t> max_clique(const Graph& graph);

inline constexpr std::int64_t kSpExactMaxN = 6;
inline constexpr std::size_t kSpExactMaxPoset = 8;
inline constexpr std::size_t kSpExactMaxCopies = 20000;

/// All copies of `shape` in the subset lattice of [n], as sorted member lists.
std::vector<std::vector<SubsetMask>> enumerate_copies(const FinitePoset& shape, std::int64_t n);

/// Max number of pairwise unrelated copies of `shape` in the subset lattice
/// of [n].  Crown-shaped input takes the normal-form path.  Throws
/// SizeBoundError beyond n = 6, |shape| = 8 or too many copies.
Natural sp_exact(const FinitePoset& shape, std::int64_t n);

/// Permutations of [n] having some member of `copy` as an initial segment,
/// counted by enumerating all n! permutations (n <= 8).
Natural gset_size_bruteforce(std::int64_t n, const CrownCopy& copy);

/// The normal-form crown with |T| = t, |A| = x1, |B| = x2, |C| = x3 laid out
/// on consecutive elements.
CrownCopy crown_with_shape(std::int64_t t, std::int64_t x1, std::int64_t x2, std::int64_t x3);

/// Bitset over the n! permutations (in lexicographic order) of those whose
/// first |X| entries form X.
std::vector<std::uint64_t> permutation_set(std::int64_t n, SubsetMask subset);

}  // namespace fdlat::oracle
