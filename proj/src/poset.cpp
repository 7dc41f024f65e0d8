#include "fdlat/oracle/poset.hpp"

#include <algorithm>
#include <bit>

namespace fdlat::oracle {

FinitePoset::FinitePoset(std::size_t size) : size_(size), leq_(size * size, 0) {
  for (std::size_t i = 0; i < size; ++i) set_leq(i, i);
}

FinitePoset FinitePoset::from_subsets(const std::vector<SubsetMask>& members) {
  FinitePoset poset(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (is_subset(members[i], members[j])) poset.set_leq(i, j);
  return poset;
}

bool FinitePoset::is_partial_order() const {
  for (std::size_t x = 0; x < size_; ++x) {
    if (!leq(x, x)) return false;
    for (std::size_t y = 0; y < size_; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) return false;
      if (!leq(x, y)) continue;
      for (std::size_t z = 0; z < size_; ++z)
        if (leq(y, z) && !leq(x, z)) return false;
    }
  }
  return true;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& elements) const {
  FinitePoset sub(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) sub.set_leq(i, j, leq(elements[i], elements[j]));
  return sub;
}

std::size_t FinitePoset::down_count(std::size_t x) const {
  std::size_t count = 0;
  for (std::size_t y = 0; y < size_; ++y) count += leq(y, x) ? 1 : 0;
  return count;
}

std::size_t FinitePoset::up_count(std::size_t x) const {
  std::size_t count = 0;
  for (std::size_t y = 0; y < size_; ++y) count += leq(x, y) ? 1 : 0;
  return count;
}

std::vector<SubsetMask> fsp_members(std::int64_t r, std::int64_t a, std::int64_t b) {
  if (!(0 <= a && a < b && b <= r && a + 2 <= b)) throw ConstraintError("fsp: need 0 <= a < b <= r, a + 2 <= b");
  if (r > 20) throw ConstraintError("fsp: r too large to materialise");
  std::vector<SubsetMask> members;
  for (SubsetMask x = 0; x < (SubsetMask{1} << r); ++x) {
    const auto size = std::popcount(x);
    if (a < size && size < b) members.push_back(x);
  }
  return members;
}

FinitePoset build_fsp(std::int64_t r, std::int64_t a, std::int64_t b) {
  return FinitePoset::from_subsets(fsp_members(r, a, b));
}

FinitePoset crown() { return build_fsp(3, 0, 3); }

namespace {

struct Signature {
  std::size_t down = 0;
  std::size_t up = 0;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

class IsoSearch {
 public:
  IsoSearch(const FinitePoset& left, const FinitePoset& right) : left_(left), right_(right) {
    for (std::size_t x = 0; x < left.size(); ++x) left_sig_.push_back({left.down_count(x), left.up_count(x)});
    for (std::size_t x = 0; x < right.size(); ++x) right_sig_.push_back({right.down_count(x), right.up_count(x)});
    // Most constrained (largest comparability) elements first.
    order_.resize(left.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return left_sig_[x].down + left_sig_[x].up > left_sig_[y].down + left_sig_[y].up;
    });
  }

  std::optional<std::vector<std::size_t>> run() {
    if (left_.size() != right_.size()) return std::nullopt;
    auto a = left_sig_, b = right_sig_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    image_.assign(left_.size(), kUnset);
    used_.assign(right_.size(), false);
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t x = order_[depth];
    for (std::size_t candidate = 0; candidate < right_.size(); ++candidate) {
      if (used_[candidate] || right_sig_[candidate] != left_sig_[x]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t y = order_[d];
        consistent = left_.leq(x, y) == right_.leq(candidate, image_[y]) &&
                     left_.leq(y, x) == right_.leq(image_[y], candidate);
      }
      if (!consistent) continue;
      image_[x] = candidate;
      used_[candidate] = true;
      if (extend(depth + 1)) return true;
      used_[candidate] = false;
      image_[x] = kUnset;
    }
    return false;
  }

  const FinitePoset& left_;
  const FinitePoset& right_;
  std::vector<Signature> left_sig_, right_sig_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& left, const FinitePoset& right) {
  return IsoSearch(left, right).run();
}

}  // namespace fdlat::oracle
