#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "minorstat/bounds.hpp"
#include "minorstat/construct.hpp"
#include "oracles.hpp"

using namespace minorstat;

TEST_CASE("fixed_decimal renders round-half-to-even") {
  CHECK(fixed_decimal(BigRational(17, 32), 4) == "0.5312");  // 0.53125 ties to even
  CHECK(fixed_decimal(BigRational(1, 2), 4) == "0.5000");
  CHECK(fixed_decimal(BigRational(1, 16), 3) == "0.062");  // 0.0625 ties down
  CHECK(fixed_decimal(BigRational(3, 16), 3) == "0.188");  // 0.1875 ties up
  CHECK(fixed_decimal(BigRational(19, 64), 4) == "0.2969");
  CHECK(fixed_decimal(BigRational(-17, 32), 4) == "-0.5312");
  CHECK(fixed_decimal(BigRational(5, 1), 2) == "5.00");
  CHECK(fixed_decimal(BigRational(0, 1), 4) == "0.0000");
}

TEST_CASE("mean square bound values") {
  CHECK(mean_square_bound(4, 2) == BigRational(8, 3));
  CHECK(mean_square_bound(8, 2) == BigRational(16, 7));
  CHECK(mean_square_bound(5, 5) == BigRational(big_pow(5, 5), 1));
  CHECK_THROWS_AS(mean_square_bound(3, 4), ValidationError);
}

TEST_CASE("mean square bound two-route identity and strict Turan floor") {
  // The op itself recomputes the product form; this sweep exercises both
  // routes across the whole documented range and the m! floor.
  for (int n = 2; n <= 64; ++n) {
    for (int m = 2; m <= n; ++m) {
      const BigRational bound = mean_square_bound(n, m);
      CHECK(bound > factorial(static_cast<unsigned>(m)));
    }
  }
}

TEST_CASE("Y upper and Z lower bounds") {
  CHECK(y_upper_bound(4, 2) == BigRational(24));
  CHECK(z_lower_bound(4, 2) == BigRational(12));
  CHECK(z_lower_bound(8, 3) == BigRational(56 * (56 - 32)));
  CHECK(z_lower_bound(5, 4) < 0);  // vacuous is allowed
  CHECK_THROWS_AS(y_upper_bound(4, 1), ValidationError);
  CHECK_THROWS_AS(z_lower_bound(4, 1), ValidationError);
}

TEST_CASE("n0 thresholds match the published table and are minimal") {
  const int expected[]{0, 0, 3, 5, 8, 15, 45};
  for (int m = 2; m <= 6; ++m) {
    const int n0 = n0_threshold(m);
    CHECK(n0 == expected[m]);
    // C(n,m) > 4 (n/4)^m at n0, and not at n0 - 1 (compared exactly).
    auto criterion = [m](int n) {
      return binomial(n, static_cast<unsigned>(m)) * big_pow(4, static_cast<unsigned>(m)) >
             4 * big_pow(n, static_cast<unsigned>(m));
    };
    CHECK(criterion(n0));
    CHECK_FALSE(criterion(n0 - 1));
  }
  CHECK_THROWS_AS(n0_threshold(1), ValidationError);
  CHECK_THROWS_AS(n0_threshold(7), ValidationError);
}

TEST_CASE("zero-minor densities") {
  CHECK(density_pm(2) == BigRational(1, 2));
  CHECK(density_pm_hat(2) == BigRational(1, 2));
  CHECK(density_pm(5) == BigRational(17, 32));
  CHECK(fixed_decimal(density_pm(5), 4) == "0.5312");
  CHECK(density_pm_hat(4) == BigRational(151, 256));
  CHECK(fixed_decimal(density_pm_hat(4), 4) == "0.5898");
  CHECK_THROWS_AS(density_pm(1), ValidationError);
}

TEST_CASE("table rows reproduce the published values") {
  const auto rows = table1(6);
  REQUIRE(rows.size() == 5);
  const char* pm[]{"0.5000", "0.6250", "0.6250", "0.5312", "0.2969"};
  const char* pmh[]{"0.5000", "0.6250", "0.5898", "0.5001", "0.3924"};
  const int n0[]{3, 5, 8, 15, 45};
  const std::int64_t pigeon[]{3, 5, 9, 17, 33};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].m == static_cast<int>(i) + 2);
    CHECK(rows[i].p_m_rendered == pm[i]);
    CHECK(rows[i].p_m_hat_rendered == pmh[i]);
    CHECK(rows[i].n0 == n0[i]);
    CHECK(rows[i].pigeonhole_threshold == pigeon[i]);
  }
  CHECK_THROWS_AS(table1(7), ValidationError);
  CHECK_THROWS_AS(table1(1), ValidationError);
}

TEST_CASE("exact zero-minor formulas at small Hadamard orders") {
  CHECK(z2_exact(4).integer() == 12);
  CHECK(z2_exact(8).integer() == 336);
  CHECK(z3_exact(8).integer() == 1344);
  CHECK(z2_exact(4).hadamard_feasible_order);
  CHECK_FALSE(z2_exact(6).hadamard_feasible_order);
  CHECK_FALSE(z3_exact(5).hadamard_feasible_order);
  CHECK(z2_exact(5).value == BigRational(75, 2));
  CHECK_THROWS_AS(z2_exact(5).integer(), ValidationError);
  CHECK_THROWS_AS(z2_exact(1), ValidationError);
  CHECK_THROWS_AS(z3_exact(2), ValidationError);
}

TEST_CASE("zero-minor formulas match enumeration on Hadamard matrices") {
  const SignMatrix h4 = sylvester(2);
  const SignMatrix h8 = sylvester(3);
  CHECK(enumerate_minors(h4, 2).zero_count == z2_exact(4).integer());
  CHECK(enumerate_minors(h8, 2).zero_count == z2_exact(8).integer());
  CHECK(enumerate_minors(h8, 3).zero_count == z3_exact(8).integer());
  // A non-Sylvester order: Paley of order 12.
  const SignMatrix h12 = paley_construct(PaleyKind::one, 11);
  CHECK(enumerate_minors(h12, 2).zero_count == z2_exact(12).integer());
  CHECK(enumerate_minors(h12, 3).zero_count == z3_exact(12).integer());
}

TEST_CASE("limit consistency: the finite-n density approaches p_m monotonically") {
  for (int m = 2; m <= 6; ++m) {
    const BigRational pm = density_pm(m);
    auto finite = [m](int n) {
      return 1 - BigRational(4 * big_pow(n, static_cast<unsigned>(m)),
                             big_pow(4, static_cast<unsigned>(m)) *
                                 binomial(n, static_cast<unsigned>(m)));
    };
    auto gap = [&](int n) {
      const BigRational d = pm - finite(n);
      return d < 0 ? BigRational(-d) : d;
    };
    CHECK(gap(100) > gap(1000));
    CHECK(gap(1000) > gap(10000));
  }
}

TEST_CASE("asymptotic singular fractions at Hadamard-feasible orders") {
  // 1/2 - Z2/C(n,2)^2 and 5/8 - Z3/C(n,3)^2 are positive and at most 4/n.
  auto check2 = [](std::int64_t n) {
    const BigRational ratio(z2_exact(n).value, binomial(n, 2) * binomial(n, 2));
    const BigRational diff = BigRational(1, 2) - ratio;
    CHECK(diff > 0);
    CHECK(diff <= BigRational(4, n));
  };
  auto check3 = [](std::int64_t n) {
    const BigRational ratio(z3_exact(n).value, binomial(n, 3) * binomial(n, 3));
    const BigRational diff = BigRational(5, 8) - ratio;
    CHECK(diff > 0);
    CHECK(diff <= BigRational(4, n));
  };
  check2(2);
  for (std::int64_t n = 4; n <= 1024; n += 4) {
    check2(n);
    check3(n);
  }
}

TEST_CASE("bounds report on Hadamard and defective inputs") {
  const SignMatrix h8 = sylvester(3);
  const BoundsReport r2 = bounds_report(h8, 2);
  CHECK(r2.is_hadamard);
  CHECK(r2.equality_attained);
  CHECK(r2.observed_mean_sq == BigRational(16, 7));
  CHECK(r2.bound_mean_sq == BigRational(16, 7));
  CHECK(r2.z_observed == 336);
  CHECK(r2.y_observed <= r2.y_upper);
  CHECK(BigRational(r2.z_observed) >= r2.z_lower);

  const BoundsReport r3 = bounds_report(h8, 3);
  CHECK(r3.equality_attained);
  CHECK(r3.bound_mean_sq == BigRational(64, 7));  // 8^3 / 56
  CHECK(r3.turan_floor == 6);
  CHECK(BigRational(r3.turan_floor) < r3.bound_mean_sq);

  // Rank-1 all-ones matrix: every order-2 minor is zero.
  const SignMatrix ones(4, 4, std::vector<std::int8_t>(16, 1));
  const BoundsReport r = bounds_report(ones, 2);
  CHECK_FALSE(r.is_hadamard);
  CHECK_FALSE(r.equality_attained);
  CHECK(r.observed_mean_sq == 0);
  CHECK(r.observed_mean_sq < r.bound_mean_sq);

  CHECK_THROWS_AS(bounds_report(random_sign_matrix(3, 4, 1), 2), ValidationError);
  CHECK_THROWS_AS(bounds_report(sylvester(2), 1), ValidationError);
}

TEST_CASE("equality is attained for every m on a Hadamard matrix") {
  const SignMatrix h4 = sylvester(2);
  for (int m = 2; m <= 4; ++m) {
    CHECK(bounds_report(h4, m).equality_attained);
  }
  // Any matrix with two equal rows fails equality at every m.
  std::vector<std::int8_t> rows(16, 1);
  for (int j = 0; j < 4; ++j) rows[4 + j] = rows[j];
  for (int j = 0; j < 4; ++j) rows[8 + j] = static_cast<std::int8_t>(j == 0 ? -1 : 1);
  for (int j = 0; j < 4; ++j) rows[12 + j] = static_cast<std::int8_t>(j == 1 ? -1 : 1);
  const SignMatrix dup(4, 4, rows);
  for (int m = 2; m <= 4; ++m) {
    const BoundsReport r = bounds_report(dup, m);
    CHECK_FALSE(r.equality_attained);
    CHECK(r.observed_mean_sq < r.bound_mean_sq);
  }
}

TEST_CASE("complement identity on small Hadamard matrices") {
  const auto entries4 = complement_check(sylvester(2));
  REQUIRE(entries4.size() == 3);
  CHECK(entries4[0].z_m == 0);  // Z(1) = 0
  CHECK(entries4[0].z_complement == 0);  // forces Z(3) = 0
  for (const auto& e : entries4) CHECK(e.equal);

  const auto entries8 = complement_check(sylvester(3));
  for (const auto& e : entries8) CHECK(e.equal);
  CHECK(entries8[1].m == 2);
  CHECK(entries8[1].z_m == 336);
  CHECK(entries8[5].m == 6);
  CHECK(entries8[5].z_m == 336);

  CHECK_THROWS_AS(complement_check(SignMatrix(4, 4, std::vector<std::int8_t>(16, 1))),
                  ValidationError);
}
