#include <doctest.h>

#include "fdlat/estimates.hpp"
#include "fdlat/minsearch.hpp"
#include "oracles.hpp"

using fdlat::EstimateParams;
using fdlat::Natural;

TEST_CASE("f_lower_general examples") {
  CHECK(fdlat::f_lower_general({3, 0, 3, 0, 8}) == 11);
  CHECK(fdlat::f_lower_general({4, 0, 4, 0, 12}) == 74);
  CHECK(fdlat::f_lower_general({3, 0, 3, 0, 3}) == 1);
  CHECK(fdlat::f_lower_general({5, 0, 5, 0, 22}) == 25095);
}

TEST_CASE("estimate parameters are validated") {
  CHECK_THROWS_AS(fdlat::f_lower_general({3, 1, 2, 0, 8}), fdlat::ConstraintError);   // a + 2 > b
  CHECK_THROWS_AS(fdlat::f_lower_general({3, 0, 4, 0, 8}), fdlat::ConstraintError);   // b > r
  CHECK_THROWS_AS(fdlat::f_lower_general({3, 0, 3, 4, 8}), fdlat::ConstraintError);   // p > r
  CHECK_THROWS_AS(fdlat::f_lower_general({3, 0, 3, -4, 8}), fdlat::ConstraintError);  // p < -r
  CHECK_THROWS_AS(fdlat::f_lower_general({3, 0, 3, 0, 2}), fdlat::ConstraintError);   // n < r
  CHECK_THROWS_AS(fdlat::f_lower_general({3, -1, 3, 0, 5}), fdlat::ConstraintError);
  CHECK_THROWS_AS(fdlat::f_lower_full(0, 2, 5), fdlat::ConstraintError);
  CHECK_THROWS_AS(fdlat::f_lower_full(0, 5, 4), fdlat::ConstraintError);
  CHECK_THROWS_AS(fdlat::f_lower_full(6, 5, 9), fdlat::ConstraintError);
  CHECK_THROWS_AS(fdlat::g_upper(5, 4), fdlat::ConstraintError);
  CHECK_THROWS_AS(fdlat::g3_doublestar(2), fdlat::ConstraintError);
  CHECK_THROWS_AS(fdlat::g2(1), fdlat::ConstraintError);
  CHECK_THROWS_AS(fdlat::g3_star(2), fdlat::ConstraintError);
}

TEST_CASE("f_lower_max examples") {
  CHECK(fdlat::f_lower_max(3, 0, 3, 8) == 11);
  CHECK(fdlat::f_lower_max(3, 0, 3, 3) == 1);
  CHECK(fdlat::f_lower_max(4, 0, 4, 12) == 74);
}

TEST_CASE("f_lower_full and flat_lower examples") {
  CHECK(fdlat::f_lower_full(0, 3, 20) == 30786);
  CHECK(fdlat::f_lower_full(0, 5, 13) == 70);
  CHECK(fdlat::f_lower_full(0, 20, 57) == Natural("17672631900"));
  CHECK(fdlat::flat_lower(3, 5) == 2);
  CHECK(fdlat::flat_lower(4, 21) == 26598);
  CHECK(fdlat::flat_lower(3, 300).get_str().substr(0, 7) == "1562661");
  CHECK(fdlat::flat_lower(3, 300).get_str().size() == 89);
}

TEST_CASE("upper estimate examples") {
  CHECK(fdlat::g_upper(3, 8) == 17);
  CHECK(fdlat::g_upper(20, 56) == Natural("17672631900"));
  for (std::int64_t r = 2; r <= 40; ++r) CHECK(fdlat::g_upper(r, r) == 1);
  CHECK(fdlat::g3_star(8) == 13);
  CHECK(fdlat::g3_star(3) == 1);
  CHECK(fdlat::g3_star(20) == 32413);
  CHECK(fdlat::g3_doublestar(6) == 4);
  CHECK(fdlat::g3_doublestar(13) == 333);
  CHECK(fdlat::g3_doublestar(300).get_str().substr(0, 7) == "1567888");  // 1.5678880...e88 before rounding
  CHECK(fdlat::g2(4) == 3);
  CHECK(fdlat::g2(2) == 1);
  CHECK(fdlat::g2(3) == 1);
}

TEST_CASE("g3_star refuses the uncertified range unless asked") {
  CHECK_THROWS_AS(fdlat::g3_star(301), fdlat::ConstraintError);
  // With the flag, M_301 comes from a fresh search rather than the closed form.
  const auto value = fdlat::g3_star(301, true);
  CHECK(value == testref::fact(301) / fdlat::compute_mn(301, fdlat::MnMode::kViaH3));
  CHECK(value == fdlat::g3_doublestar(301));
}

TEST_CASE("flat_lower matches a Pascal-triangle transcription") {
  const testref::Pascal pascal(760);
  for (std::int64_t r = 3; r <= 12; ++r)
    for (std::int64_t n = r; n <= 200; ++n) CHECK(fdlat::flat_lower(r, n) == testref::flat_ref(pascal, r, n));
  // Arguments past the shared binomial table.
  for (std::int64_t r : {3, 7, 20, 41})
    for (std::int64_t n = 700; n <= 760; n += 3) CHECK(fdlat::flat_lower(r, n) == testref::flat_ref(pascal, r, n));
}

TEST_CASE("g3_doublestar matches the factorial formula") {
  for (std::int64_t n = 3; n <= 320; ++n) {
    const std::int64_t lo = n / 2, hi = (n + 1) / 2, lo2 = (n + 2) / 2, hi2 = (n - 1) / 2;
    const mpz_class m = 3 * testref::fact(lo) * testref::fact(hi) + 3 * testref::fact(lo2) * testref::fact(hi2) -
                        6 * testref::fact(lo) * testref::fact(hi2);
    CHECK(fdlat::g3_doublestar(n) == testref::fact(n) / m);
  }
}

TEST_CASE("specialisation: f_lower_full equals f_lower_general with a = 0, b = r") {
  for (std::int64_t r = 3; r <= 10; ++r)
    for (std::int64_t n = r; n <= 40; ++n)
      for (std::int64_t p = -r; p <= r; ++p) CHECK(fdlat::f_lower_full(p, r, n) == fdlat::f_lower_general({r, 0, r, p, n}));
}

TEST_CASE("p = 0 attains the maximum on a small grid") {
  for (std::int64_t r = 3; r <= 10; ++r)
    for (std::int64_t n = r; n <= 60; ++n) CHECK(fdlat::f_lower_max(r, 0, r, n) == fdlat::flat_lower(r, n));
}

TEST_CASE("sandwich: flat_lower <= g_upper for r <= 100, n <= 300") {
  for (std::int64_t r = 3; r <= 100; ++r)
    for (std::int64_t n = r; n <= 300; ++n) {
      const bool ok = fdlat::flat_lower(r, n) <= fdlat::g_upper(r, n);
      if (!ok) FAIL_CHECK("r=" << r << " n=" << n);
    }
}

TEST_CASE("r = 3: flat <= g3** <= g3, strictly below g3 from n = 5") {
  for (std::int64_t n = 3; n <= 300; ++n) {
    const auto g = fdlat::g3_doublestar(n);
    CHECK(fdlat::flat_lower(3, n) <= g);
    CHECK(g <= fdlat::g_upper(3, n));
    if (n >= 5) CHECK(g < fdlat::g_upper(3, n));
  }
}

TEST_CASE("g3_star agrees with g3** through a searched M_n") {
  for (std::int64_t n = 3; n <= 60; ++n) {
    CHECK(fdlat::g3_star(n) == fdlat::g3_doublestar(n));
    CHECK(testref::fact(n) / fdlat::compute_mn(n, fdlat::MnMode::kViaH3) == fdlat::g3_doublestar(n));
  }
}

TEST_CASE("flat_lower increases strictly after the plateau") {
  for (std::int64_t r = 3; r <= 12; ++r) {
    CHECK(fdlat::flat_lower(r, r) == 1);
    CHECK(fdlat::flat_lower(r, r + 1) == 1);
    for (std::int64_t n = r + 1; n < 300; ++n) CHECK(fdlat::flat_lower(r, n) < fdlat::flat_lower(r, n + 1));
  }
}

TEST_CASE("compositions are enumerated completely and in lexicographic order") {
  for (std::size_t parts = 1; parts <= 5; ++parts)
    for (std::int64_t weight = 0; weight <= 8; ++weight) {
      std::vector<std::vector<std::int64_t>> seen;
      fdlat::for_each_composition(parts, weight, [&](std::span<const std::int64_t> v) {
        std::int64_t sum = 0;
        for (auto x : v) sum += x;
        CHECK(sum == weight);
        seen.emplace_back(v.begin(), v.end());
      });
      CHECK(Natural(static_cast<unsigned long>(seen.size())) ==
            fdlat::binom(weight + static_cast<std::int64_t>(parts) - 1, static_cast<std::int64_t>(parts) - 1));
      CHECK(std::is_sorted(seen.begin(), seen.end()));
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("extremal sizes") {
  CHECK(fdlat::extremal_sizes(3, 0, 3) == std::vector<std::int64_t>{0, 3});
  CHECK(fdlat::extremal_sizes(5, 1, 4) == std::vector<std::int64_t>{0, 1, 4, 5});
}
