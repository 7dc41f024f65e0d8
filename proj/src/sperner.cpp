#include "fdlat/oracle/sperner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace fdlat::oracle {

bool CrownCopy::valid() const {
  const bool nonempty = a != 0 && b != 0 && c != 0;
  const bool disjoint = (t & a) == 0 && (t & b) == 0 && (t & c) == 0 && (a & b) == 0 && (a & c) == 0 && (b & c) == 0;
  return nonempty && disjoint;
}

std::array<SubsetMask, 6> CrownCopy::members() const {
  return {t | a, t | b, t | c, t | a | b, t | a | c, t | b | c};
}

std::vector<CrownCopy> normalized_crowns(std::int64_t n) {
  if (n < 0 || n > 10) throw SizeBoundError("normalized_crowns: n must be at most 10");
  std::vector<CrownCopy> crowns;
  // Label every element with one of: unused, T, A, B, C.
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  for (;;) {
    CrownCopy copy;
    for (std::int64_t e = 0; e < n; ++e) {
      const SubsetMask bit = SubsetMask{1} << e;
      switch (label[e]) {
        case 1: copy.t |= bit; break;
        case 2: copy.a |= bit; break;
        case 3: copy.b |= bit; break;
        case 4: copy.c |= bit; break;
        default: break;
      }
    }
    if (copy.valid() && copy.a < copy.b && copy.b < copy.c) crowns.push_back(copy);

    std::int64_t e = 0;
    while (e < n && label[e] == 4) label[e++] = 0;
    if (e == n) break;
    ++label[e];
  }
  std::sort(crowns.begin(), crowns.end(), [](const CrownCopy& x, const CrownCopy& y) {
    return std::tie(x.t, x.a, x.b, x.c) < std::tie(y.t, y.a, y.b, y.c);
  });
  return crowns;
}

Graph::Graph(std::size_t size) : size_(size), rows_(size, std::vector<std::uint64_t>((size + 63) / 64, 0)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  rows_[u][v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v][u / 64] |= std::uint64_t{1} << (u % 64);
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& graph) : graph_(graph) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> candidates(graph_.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    // Higher degree first tends to find large cliques early.
    std::vector<std::size_t> degree(graph_.size(), 0);
    for (std::size_t v = 0; v < graph_.size(); ++v)
      for (auto word : graph_.row(v)) degree[v] += static_cast<std::size_t>(std::popcount(word));
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });
    expand(candidates);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy colouring of `candidates`; returns vertices ordered by colour
  // class together with the running colour number (an upper bound on the
  // clique size within the prefix).
  void colour_sort(const std::vector<std::size_t>& candidates, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& bound) const {
    std::vector<std::vector<std::size_t>> classes;
    for (auto v : candidates) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (auto u : classes[k])
          if (graph_.adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    order.clear();
    bound.clear();
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (auto v : classes[k]) {
        order.push_back(v);
        bound.push_back(k + 1);
      }
  }

  void expand(std::vector<std::size_t> candidates) {
    std::vector<std::size_t> order, bound;
    colour_sort(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < i; ++j)
        if (graph_.adjacent(v, order[j])) next.push_back(order[j]);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
    }
  }

  const Graph& graph_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> max_clique(const Graph& graph) {
  if (graph.size() == 0) return {};
  return CliqueSearch(graph).run();
}

std::vector<std::vector<SubsetMask>> enumerate_copies(const FinitePoset& shape, std::int64_t n) {
  if (n < 0 || n > kSpExactMaxN) throw SizeBoundError("enumerate_copies: n must be at most " + std::to_string(kSpExactMaxN));
  if (shape.size() == 0 || shape.size() > kSpExactMaxPoset)
    throw SizeBoundError("enumerate_copies: poset size must be in 1.." + std::to_string(kSpExactMaxPoset));

  const std::size_t k = shape.size();
  const SubsetMask universe = SubsetMask{1} << n;
  std::set<std::vector<SubsetMask>> copies;
  std::vector<SubsetMask> image(k, 0);

  auto place = [&](auto&& self, std::size_t at) -> void {
    if (at == k) {
      std::vector<SubsetMask> key(image);
      std::sort(key.begin(), key.end());
      copies.insert(std::move(key));
      if (copies.size() > kSpExactMaxCopies) throw SizeBoundError("enumerate_copies: too many copies");
      return;
    }
    for (SubsetMask x = 0; x < universe; ++x) {
      bool ok = true;
      for (std::size_t d = 0; d < at && ok; ++d)
        ok = image[d] != x && shape.leq(d, at) == is_subset(image[d], x) && shape.leq(at, d) == is_subset(x, image[d]);
      if (!ok) continue;
      image[at] = x;
      self(self, at + 1);
    }
  };
  place(place, 0);
  return {copies.begin(), copies.end()};
}

Natural sp_exact(const FinitePoset& shape, std::int64_t n) {
  if (n < 0 || n > kSpExactMaxN) throw SizeBoundError("sp_exact: n must be at most " + std::to_string(kSpExactMaxN));
  if (shape.size() == 0 || shape.size() > kSpExactMaxPoset)
    throw SizeBoundError("sp_exact: poset size must be in 1.." + std::to_string(kSpExactMaxPoset));

  std::vector<std::vector<SubsetMask>> copies;
  if (shape.size() == 6 && isomorphic(shape, crown())) {
    for (const auto& c : normalized_crowns(n)) {
      auto members = c.members();
      copies.emplace_back(members.begin(), members.end());
    }
  } else {
    copies = enumerate_copies(shape, n);
  }

  Graph graph(copies.size());
  for (std::size_t u = 0; u < copies.size(); ++u)
    for (std::size_t v = u + 1; v < copies.size(); ++v) {
      bool unrelated = true;
      for (auto x : copies[u]) {
        for (auto y : copies[v])
          if (!incomparable(x, y)) {
            unrelated = false;
            break;
          }
        if (!unrelated) break;
      }
      if (unrelated) graph.add_edge(u, v);
    }
  return static_cast<unsigned long>(max_clique(graph).size());
}

namespace {

std::uint64_t factorial_small(std::int64_t n) {
  std::uint64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

Natural gset_size_bruteforce(std::int64_t n, const CrownCopy& copy) {
  if (n < 0 || n > 8) throw SizeBoundError("gset_size_bruteforce: n must be at most 8");
  if (!copy.valid()) throw ConstraintError("gset_size_bruteforce: not a normal-form crown");
  if (((copy.t | copy.a | copy.b | copy.c) >> n) != 0) throw ConstraintError("gset_size_bruteforce: crown outside [n]");

  const auto members = copy.members();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  unsigned long count = 0;
  do {
    SubsetMask prefix = 0;
    bool hit = false;
    for (std::int64_t len = 0; len < n && !hit; ++len) {
      prefix |= SubsetMask{1} << perm[len];
      hit = std::find(members.begin(), members.end(), prefix) != members.end();
    }
    count += hit ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

CrownCopy crown_with_shape(std::int64_t t, std::int64_t x1, std::int64_t x2, std::int64_t x3) {
  if (t < 0 || x1 < 1 || x2 < 1 || x3 < 1 || t + x1 + x2 + x3 > 63) throw ConstraintError("crown_with_shape: bad shape");
  auto run = [](std::int64_t from, std::int64_t length) { return ((SubsetMask{1} << length) - 1) << from; };
  return CrownCopy{run(0, t), run(t, x1), run(t + x1, x2), run(t + x1 + x2, x3)};
}

std::vector<std::uint64_t> permutation_set(std::int64_t n, SubsetMask subset) {
  if (n < 0 || n > 8) throw SizeBoundError("permutation_set: n must be at most 8");
  const auto total = factorial_small(n);
  std::vector<std::uint64_t> bits((total + 63) / 64, 0);
  const auto size = std::popcount(subset);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t index = 0;
  do {
    SubsetMask prefix = 0;
    for (int len = 0; len < size; ++len) prefix |= SubsetMask{1} << perm[len];
    if (prefix == subset) bits[index / 64] |= std::uint64_t{1} << (index % 64);
    ++index;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return bits;
}

}  // namespace fdlat::oracle
