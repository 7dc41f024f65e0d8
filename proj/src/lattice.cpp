#include "fdlat/oracle/lattice.hpp"

#include <algorithm>
#include <string>

namespace fdlat::oracle {

LatticeTable::LatticeTable(std::vector<std::uint64_t> members, unsigned width)
    : masks_(std::move(members)), width_(width) {
  if (width_ > 64) throw ConstraintError("LatticeTable: masks wider than 64 bits");
  if (masks_.size() > 0xFFFFFFFEu) throw ConstraintError("LatticeTable: too many elements");
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  index_.reserve(masks_.size());
  for (Element e = 0; e < masks_.size(); ++e) index_.emplace(masks_[e], e);

  for (std::size_t x = 0; x < masks_.size(); ++x)
    for (std::size_t y = x; y < masks_.size(); ++y)
      if (!index_.contains(masks_[x] | masks_[y]) || !index_.contains(masks_[x] & masks_[y]))
        throw ConstraintError("LatticeTable: family not closed under | and &");

  if (masks_.size() <= kDenseLimit) {
    const auto n = masks_.size();
    join_table_.resize(n * n);
    meet_table_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        join_table_[x * n + y] = static_cast<std::uint16_t>(index_of(masks_[x] | masks_[y]));
        meet_table_[x * n + y] = static_cast<std::uint16_t>(index_of(masks_[x] & masks_[y]));
      }
  }
}

std::optional<Element> LatticeTable::find(std::uint64_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element LatticeTable::index_of(std::uint64_t mask) const { return index_.at(mask); }

Element LatticeTable::join(Element x, Element y) const {
  if (!join_table_.empty()) return join_table_[x * masks_.size() + y];
  return index_of(masks_[x] | masks_[y]);
}

Element LatticeTable::meet(Element x, Element y) const {
  if (!meet_table_.empty()) return meet_table_[x * masks_.size() + y];
  return index_of(masks_[x] & masks_[y]);
}

bool LatticeTable::satisfies_lattice_axioms(bool check_distributive) const {
  const auto n = static_cast<Element>(size());
  for (Element x = 0; x < n; ++x) {
    if (join(x, x) != x || meet(x, x) != x) return false;
    for (Element y = 0; y < n; ++y) {
      if (join(x, y) != join(y, x) || meet(x, y) != meet(y, x)) return false;
      if (join(x, meet(x, y)) != x || meet(x, join(x, y)) != x) return false;
      if (leq(x, y) != (meet(x, y) == x)) return false;
      for (Element z = 0; z < n; ++z) {
        if (join(join(x, y), z) != join(x, join(y, z))) return false;
        if (meet(meet(x, y), z) != meet(x, meet(y, z))) return false;
        if (check_distributive && meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

FreeDistributiveLattice build_fd(std::int64_t r) {
  if (r < 2 || r > 5) throw ConstraintError("build_fd: need 2 <= r <= 5, got " + std::to_string(r));

  // Monotone functions of m + 1 variables are pairs f0 <= f1 of monotone
  // functions of m variables (x_{m+1} = 0 and x_{m+1} = 1 halves).
  std::vector<std::uint64_t> monotone = {0, 1};
  for (std::int64_t m = 0; m < r; ++m) {
    const unsigned half = 1u << m;
    std::vector<std::uint64_t> next;
    for (auto low : monotone)
      for (auto high : monotone)
        if (is_subset(low, high)) next.push_back(low | (high << half));
    monotone = std::move(next);
  }
  const unsigned width = 1u << r;
  const std::uint64_t ones = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  std::erase_if(monotone, [&](std::uint64_t f) { return f == 0 || f == ones; });

  LatticeTable lattice(std::move(monotone), width);
  std::vector<Element> generators;
  for (std::int64_t i = 0; i < r; ++i) {
    std::uint64_t projection = 0;
    for (unsigned y = 0; y < width; ++y)
      if ((y >> i) & 1u) projection |= std::uint64_t{1} << y;
    generators.push_back(*lattice.find(projection));
  }
  return {std::move(lattice), std::move(generators)};
}

LatticeTable powerset_lattice(std::int64_t n) {
  if (n < 0 || n > 16) throw ConstraintError("powerset_lattice: need 0 <= n <= 16");
  std::vector<std::uint64_t> members;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) members.push_back(x);
  return LatticeTable(std::move(members), static_cast<unsigned>(n));
}

LatticeTable direct_power(const LatticeTable& lattice, std::int64_t k) {
  if (k < 1) throw ConstraintError("direct_power: need k >= 1");
  if (static_cast<std::uint64_t>(k) * lattice.width() > 64) throw ConstraintError("direct_power: masks would exceed 64 bits");
  std::vector<std::uint64_t> members = {0};
  for (std::int64_t c = 0; c < k; ++c) {
    std::vector<std::uint64_t> next;
    next.reserve(members.size() * lattice.size());
    for (auto prefix : members)
      for (Element e = 0; e < lattice.size(); ++e) next.push_back(prefix | (lattice.mask(e) << (c * lattice.width())));
    members = std::move(next);
  }
  return LatticeTable(std::move(members), static_cast<unsigned>(k * lattice.width()));
}

JoinIrreducibles join_irreducibles(const LatticeTable& lattice) {
  // x has exactly one lower cover iff the join of everything strictly below
  // x exists and differs from x (that join is then the unique cover).
  JoinIrreducibles out;
  const auto n = static_cast<Element>(lattice.size());
  for (Element x = 0; x < n; ++x) {
    bool any_below = false;
    std::uint64_t below = 0;
    for (Element y = 0; y < n; ++y) {
      if (y != x && lattice.leq(y, x)) {
        any_below = true;
        below |= lattice.mask(y);
      }
    }
    if (any_below && below != lattice.mask(x)) out.elements.push_back(x);
  }
  std::vector<SubsetMask> members;
  for (auto e : out.elements) members.push_back(lattice.mask(e));
  out.poset = FinitePoset::from_subsets(members);
  return out;
}

std::vector<std::size_t> lower_cover_counts(const LatticeTable& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  std::vector<std::size_t> counts(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (y == x || !lattice.leq(y, x)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z)
        cover = !(z != x && z != y && lattice.leq(y, z) && lattice.leq(z, x));
      if (cover) ++counts[x];
    }
  return counts;
}

namespace {

// Closure size of `seed`, stopping early once the whole lattice is reached.
std::size_t closure_into(const LatticeTable& lattice, const std::vector<Element>& seed, std::vector<char>& in,
                         std::vector<Element>& members) {
  std::fill(in.begin(), in.end(), 0);
  members.clear();
  for (auto e : seed) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  }
  for (std::size_t next = 0; next < members.size() && members.size() < lattice.size(); ++next) {
    const Element e = members[next];
    for (std::size_t i = 0; i <= next; ++i) {
      const Element f = members[i];
      for (Element g : {lattice.join(e, f), lattice.meet(e, f)}) {
        if (!in[g]) {
          in[g] = 1;
          members.push_back(g);
        }
      }
    }
  }
  return members.size();
}

}  // namespace

std::vector<Element> closure(const LatticeTable& lattice, const std::vector<Element>& seed) {
  if (seed.empty()) throw ConstraintError("closure: seed must be nonempty");
  std::vector<char> in(lattice.size(), 0);
  std::vector<Element> members;
  closure_into(lattice, seed, in, members);
  std::sort(members.begin(), members.end());
  return members;
}

MinGenerating min_generating_size(const LatticeTable& lattice, std::uint64_t closure_cap) {
  MinGenerating out;
  const std::size_t n = lattice.size();
  std::vector<char> in(n, 0);
  std::vector<Element> members;
  std::vector<Element> subset;

  for (std::size_t m = 1; m <= n; ++m) {
    // Colexicographic order: the last index grows slowest.
    subset.resize(m);
    for (std::size_t i = 0; i < m; ++i) subset[i] = static_cast<Element>(i);
    for (;;) {
      if (out.closure_calls >= closure_cap) {
        out.size = m;
        out.exact = false;
        return out;
      }
      ++out.closure_calls;
      if (closure_into(lattice, subset, in, members) == n) {
        out.size = m;
        out.witness = subset;
        return out;
      }
      std::size_t i = 0;
      while (i + 1 < m && subset[i] + 1 == subset[i + 1]) ++i;
      if (subset[i] + 1 >= n) break;
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<Element>(j);
    }
  }
  out.size = n;
  return out;
}

bool check_lemma(std::int64_t r) {
  const auto fd = build_fd(r);
  const auto irreducibles = join_irreducibles(fd.lattice);
  return isomorphic(irreducibles.poset, build_fsp(r, 0, r));
}

}  // namespace fdlat::oracle
