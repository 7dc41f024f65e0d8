#include "fdlat/minsearch.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "fdlat/parallel.hpp"

namespace fdlat {

bool in_h4(std::int64_t n, const SimplexPoint4& pt) {
  return pt.t >= 0 && pt.x1 >= 1 && pt.x2 >= 1 && pt.x3 >= 1 && pt.t + pt.x1 + pt.x2 + pt.x3 <= n;
}

bool in_h3(std::int64_t n, const SimplexPoint3& pt) {
  return pt.t >= 0 && pt.x >= 1 && pt.y >= 1 && pt.t + pt.x + pt.y <= n - 1;
}

bool in_h3_half(std::int64_t n, const SimplexPoint3& pt) { return in_h3(n, pt) && pt.x <= pt.y; }

namespace {

// Factorials 0..n, borrowed from the shared table when it is large enough.
class Factorials {
 public:
  explicit Factorials(std::int64_t n) {
    if (n > kSharedFactorialMax) own_.emplace(n);
  }
  const Natural& operator[](std::int64_t i) const { return own_ ? (*own_)[i] : shared_factorials()[i]; }

 private:
  std::optional<FactorialTable> own_;
};

// (a)! (n - a)!
Natural split(const Factorials& f, std::int64_t n, std::int64_t a) { return f[a] * f[n - a]; }

// (a)! b! (n - a - b)!
Natural chain(const Factorials& f, std::int64_t n, std::int64_t a, std::int64_t b) {
  return f[a] * f[b] * f[n - a - b];
}

}  // namespace

Natural fha_eval(std::int64_t n, const SimplexPoint4& pt) {
  if (!in_h4(n, pt)) throw ConstraintError("fha_eval: point outside H4(n)");
  Factorials f(n);
  const std::int64_t t = pt.t;
  const std::int64_t x[3] = {pt.x1, pt.x2, pt.x3};

  Natural plus = 0;
  Natural minus = 0;
  for (int j = 0; j < 3; ++j) plus += split(f, n, t + x[j]);
  for (int j = 0; j < 3; ++j)
    for (int u = j + 1; u < 3; ++u) plus += split(f, n, t + x[j] + x[u]);
  for (int j = 0; j < 3; ++j)
    for (int u = 0; u < 3; ++u)
      if (j != u) minus += chain(f, n, t + x[j], x[u]);
  return plus - minus;
}

Natural fhb_eval(std::int64_t n, const SimplexPoint3& pt) {
  if (!in_h3(n, pt)) throw ConstraintError("fhb_eval: point outside H3(n)");
  Factorials f(n);
  const auto [t, x, y] = pt;
  Natural value = split(f, n, t + x) + split(f, n, t + y) + 2 * split(f, n, t + x + y);
  value -= 2 * chain(f, n, t + x, y);
  value -= 2 * chain(f, n, t + y, x);
  return value;
}

namespace {

struct SliceMin {
  bool found = false;
  Natural value;
  std::vector<SimplexPoint3> points;
};

// Minimum of fhb on the slice {(t, x, y) in H3'(n)} for one fixed t.
SliceMin min_fhb_slice(std::int64_t n, std::int64_t t, const Factorials& f,
                       const std::vector<Natural>& splits) {
  SliceMin out;
  mpz_class cross, value;
  for (std::int64_t x = 1; t + 2 * x <= n - 1; ++x) {
    for (std::int64_t y = x; t + x + y <= n - 1; ++y) {
      // value = S(t+x) + S(t+y) + 2 S(t+x+y) - 2 (n-t-x-y)! ((t+x)! y! + (t+y)! x!)
      mpz_mul(cross.get_mpz_t(), f[t + x].get_mpz_t(), f[y].get_mpz_t());
      mpz_addmul(cross.get_mpz_t(), f[t + y].get_mpz_t(), f[x].get_mpz_t());
      mpz_add(value.get_mpz_t(), splits[t + x].get_mpz_t(), splits[t + y].get_mpz_t());
      mpz_addmul_ui(value.get_mpz_t(), splits[t + x + y].get_mpz_t(), 2);
      mpz_mul(cross.get_mpz_t(), cross.get_mpz_t(), f[n - t - x - y].get_mpz_t());
      mpz_submul_ui(value.get_mpz_t(), cross.get_mpz_t(), 2);

      int order = out.found ? mpz_cmp(value.get_mpz_t(), out.value.get_mpz_t()) : -1;
      if (order < 0) {
        out.found = true;
        out.value = value;
        out.points.assign(1, SimplexPoint3{t, x, y});
      } else if (order == 0) {
        out.points.push_back(SimplexPoint3{t, x, y});
      }
    }
  }
  return out;
}

}  // namespace

MinResult3 min_fhb(std::int64_t n, unsigned jobs) {
  if (n < 3) throw ConstraintError("min_fhb: n must be at least 3");
  Factorials f(n);
  std::vector<Natural> splits(static_cast<std::size_t>(n) + 1);
  for (std::int64_t a = 0; a <= n; ++a) splits[a] = split(f, n, a);

  // t ranges over 0..n-3 (x = y = 1 needs t <= n - 3).
  auto slices = parallel_map(static_cast<std::size_t>(n - 2), jobs, [&](std::size_t t) {
    return min_fhb_slice(n, static_cast<std::int64_t>(t), f, splits);
  });

  MinResult3 result;
  result.n = n;
  bool found = false;
  for (auto& slice : slices) {
    if (!slice.found) continue;
    int order = found ? cmp(slice.value, result.value) : -1;
    if (order < 0) {
      found = true;
      result.value = slice.value;
      result.argmin = std::move(slice.points);
    } else if (order == 0) {
      result.argmin.insert(result.argmin.end(), slice.points.begin(), slice.points.end());
    }
  }
  const auto half = result.argmin.size();
  for (std::size_t i = 0; i < half; ++i) {
    const auto& pt = result.argmin[i];
    if (pt.x != pt.y) result.argmin.push_back(SimplexPoint3{pt.t, pt.y, pt.x});
  }
  std::sort(result.argmin.begin(), result.argmin.end());
  return result;
}

MinResult4 min_fha_full(std::int64_t n) {
  if (n < 3 || n > kFullH4SearchMax)
    throw ConstraintError("min_fha_full: exhaustive H4 search needs 3 <= n <= " +
                          std::to_string(kFullH4SearchMax));
  MinResult4 result;
  result.n = n;
  bool found = false;
  for (std::int64_t t = 0; t + 3 <= n; ++t)
    for (std::int64_t x1 = 1; t + x1 + 2 <= n; ++x1)
      for (std::int64_t x2 = 1; t + x1 + x2 + 1 <= n; ++x2)
        for (std::int64_t x3 = 1; t + x1 + x2 + x3 <= n; ++x3) {
          SimplexPoint4 pt{t, x1, x2, x3};
          Natural value = fha_eval(n, pt);
          int order = found ? cmp(value, result.value) : -1;
          if (order < 0) {
            found = true;
            result.value = std::move(value);
            result.argmin.assign(1, pt);
          } else if (order == 0) {
            result.argmin.push_back(pt);
          }
        }
  return result;
}

SimplexPoint3 expected_fhb_minimizer(std::int64_t n) { return SimplexPoint3{(n - 2) / 2, 1, 1}; }

MinLocationReport verify_min_location(std::int64_t n, unsigned jobs) {
  MinLocationReport report;
  report.result = min_fhb(n, jobs);
  const auto expected = expected_fhb_minimizer(n);
  report.pass = std::binary_search(report.result.argmin.begin(), report.result.argmin.end(), expected);
  return report;
}

Natural mn_closed_form(std::int64_t n) {
  if (n < 3) throw ConstraintError("mn_closed_form: n must be at least 3");
  Factorials f(n);
  const std::int64_t lo = n / 2;            // floor(n/2)
  const std::int64_t hi = (n + 1) / 2;      // ceil(n/2)
  const std::int64_t lo2 = (n + 2) / 2;     // floor((n+2)/2)
  const std::int64_t hi2 = (n - 1) / 2;     // ceil((n-2)/2)
  return 3 * f[lo] * f[hi] + 3 * f[lo2] * f[hi2] - 6 * f[lo] * f[hi2];
}

std::string to_string(MnMode mode) {
  switch (mode) {
    case MnMode::kCertifiedClosedForm: return "certified-closed-form";
    case MnMode::kFullH4Search: return "full-H4-search";
    case MnMode::kViaH3: return "via-H3";
  }
  return "?";
}

std::optional<Natural> mn_from_h3(const MinResult3& result) {
  for (const auto& pt : result.argmin) {
    if (pt.x == pt.y && pt.t + 3 * pt.x <= result.n) {
      Natural tripled = 3 * result.value;
      if (mpz_divisible_ui_p(tripled.get_mpz_t(), 2) == 0) throw ConstraintError("mn_from_h3: odd 3 * min fhb");
      return Natural(tripled / 2);
    }
  }
  return std::nullopt;
}

Natural compute_mn(std::int64_t n, MnMode mode, unsigned jobs) {
  if (n < 3) throw ConstraintError("compute_mn: n must be at least 3");
  switch (mode) {
    case MnMode::kCertifiedClosedForm:
      if (n > kCertifiedMinLocationMax && !verify_min_location(n, jobs).pass)
        throw ConstraintError("compute_mn: minimum location fails for n = " + std::to_string(n) +
                              "; the closed form does not apply");
      return mn_closed_form(n);
    case MnMode::kFullH4Search:
      return min_fha_full(n).value;
    case MnMode::kViaH3: {
      auto value = mn_from_h3(min_fhb(n, jobs));
      if (!value) throw ConstraintError("compute_mn: H3 minimum has no symmetric minimiser for n = " + std::to_string(n));
      return *value;
    }
  }
  throw ConstraintError("compute_mn: unknown mode");
}

bool decomposition_check(std::int64_t n, const SimplexPoint4& pt) {
  if (!in_h4(n, pt)) return false;
  Natural lhs = 2 * fha_eval(n, pt);
  Natural rhs = fhb_eval(n, {pt.t, pt.x1, pt.x2}) + fhb_eval(n, {pt.t, pt.x2, pt.x3}) +
                fhb_eval(n, {pt.t, pt.x1, pt.x3});
  return lhs == rhs;
}

std::string format_point(const SimplexPoint3& pt) {
  std::ostringstream out;
  out << '(' << pt.t << ',' << pt.x << ',' << pt.y << ')';
  return out.str();
}

}  // namespace fdlat
