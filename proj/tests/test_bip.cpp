#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "tsb/bip.hpp"
#include "tsb/bounds.hpp"
#include "tsb/error.hpp"

using tsb::InputError;

TEST_CASE("falling factorial") {
  CHECK(tsb::falling_factorial(5, 2) == 20);
  CHECK(tsb::falling_factorial(5, 3) == 60);
  CHECK(tsb::falling_factorial(-1, 3) == -6);
  CHECK(tsb::falling_factorial(mpq_class(7, 3), 0) == 1);
  CHECK(tsb::falling_factorial(mpq_class(1, 2), 2) == mpq_class(-1, 4));
  CHECK(tsb::falling_factorial(3, 5) == 0);  // crosses zero
  CHECK_THROWS_AS(tsb::falling_factorial(2, -1), InputError);
}

TEST_CASE("binomial coefficients") {
  CHECK(tsb::binomial_exact(5, 2) == 10);
  CHECK(tsb::binomial_exact(0, 0) == 1);
  CHECK(tsb::binomial_exact(4, 7) == 0);
  CHECK(tsb::binomial_exact(40, 20) == mpz_class("137846528820"));
}

TEST_CASE("block intersection polynomial validation") {
  tsb::BipInput in;
  in.s = 3;
  in.t = 2;
  in.m.assign(4, mpq_class(0));
  in.lambda.assign(3, mpq_class(1));
  CHECK_NOTHROW(in.validate());

  tsb::BipInput short_m = in;
  short_m.m.pop_back();
  CHECK_THROWS_AS(short_m.validate(), InputError);

  tsb::BipInput short_l = in;
  short_l.lambda.pop_back();
  CHECK_THROWS_AS(short_l.validate(), InputError);

  tsb::BipInput bad_t = in;
  bad_t.t = 5;
  bad_t.lambda.assign(6, mpq_class(1));
  CHECK_THROWS_AS(bad_t.validate(), InputError);
}

TEST_CASE("block intersection polynomial with t = 0 is constant") {
  tsb::BipInput in;
  in.s = 3;
  in.t = 0;
  in.m.assign(4, mpq_class(0));
  in.lambda = {mpq_class(4)};
  for (long x : {-3L, 0L, 2L, 10L}) {
    CHECK(tsb::block_intersection_poly(in, mpq_class(x)) == 4);
  }
}

TEST_CASE("block intersection polynomial quadratic landmark") {
  // m = 2 (7 vertices), candidate size 3, zero intersection counts:
  // B(x) = 4 (x - 1)^2.
  tsb::BipInput in;
  in.s = 3;
  in.t = 2;
  in.m.assign(4, mpq_class(0));
  in.lambda = {mpq_class(4), mpq_class(2), mpq_class(2, 3)};
  for (long x = -7; x <= 7; ++x) {
    const mpq_class expect = mpq_class(4) * (x - 1) * (x - 1);
    CHECK(tsb::block_intersection_poly(in, mpq_class(x)) == expect);
  }
}

TEST_CASE("quadratic form matches the generic polynomial") {
  // Over every tournament size v = 4m-1 up to 103 and every candidate size
  // 2 <= s < v, the specialized integer quadratic equals 3 B(x) with zero
  // intersection counts.  Both sides have degree 2, so agreement at three
  // points is agreement everywhere.
  for (long m = 2; m <= 26; ++m) {
    const long v = 4 * m - 1;
    for (long s = 2; s < v; ++s) {
      tsb::BipInput in;
      in.s = s;
      in.t = 2;
      in.m.assign(s + 1, mpq_class(0));
      in.lambda = {mpq_class(v - s),
                   mpq_class(2 * m - 1) - mpq_class(s - 1) / 2,
                   mpq_class(m - 1) - mpq_class(s - 2) / 3};
      const tsb::AdjPolynomial poly = tsb::adjacency_poly(m, s);
      for (long x = 0; x <= 2; ++x) {
        const mpq_class generic =
            3 * tsb::block_intersection_poly(in, mpq_class(x));
        CHECK(generic == mpq_class(poly.eval(x)));
      }
    }
  }
}

TEST_CASE("adjacency polynomial coefficients") {
  const tsb::AdjPolynomial p23 = tsb::adjacency_poly(2, 3);
  CHECK(p23.x2 == 12);
  CHECK(p23.x1 == -24);
  CHECK(p23.x0 == 12);
  CHECK(p23.eval(1) == 0);
  CHECK(p23.eval(0) == 12);

  const tsb::AdjPolynomial p24 = tsb::adjacency_poly(2, 4);
  CHECK(p24.x2 == 9);
  CHECK(p24.x1 == -27);
  CHECK(p24.x0 == 12);
  CHECK(p24.eval(1) == -6);  // C(1,4) = -2
  CHECK(p24.eval(mpz_class(10)) == 900 - 270 + 12);
}

TEST_CASE("feasibility of candidate sizes") {
  CHECK(tsb::bip_feasible(2, 3));
  CHECK_FALSE(tsb::bip_feasible(2, 4));
  CHECK(tsb::bip_feasible(2, 2));
  CHECK(tsb::bip_feasible(7, 7));
  CHECK_FALSE(tsb::bip_feasible(7, 8));
  CHECK(tsb::bip_feasible(1, 2));

  CHECK_THROWS_AS(tsb::bip_feasible(2, 1), InputError);
  CHECK_THROWS_AS(tsb::bip_feasible(2, 7), InputError);  // y = 4m-1
  CHECK_THROWS_AS(tsb::bip_feasible(0, 2), InputError);
}

TEST_CASE("feasibility scan landmarks") {
  CHECK(tsb::bip_bound(1) == 2);
  CHECK(tsb::bip_bound(2) == 3);
  CHECK(tsb::bip_bound(7) == 7);
  CHECK(tsb::bip_bound(18) == 12);
  CHECK_THROWS_AS(tsb::bip_scan(0), InputError);
}

TEST_CASE("feasibility scan is internally consistent") {
  for (long long m = 1; m <= 60; ++m) {
    const tsb::BipScan scan = tsb::bip_scan(m);
    CHECK(scan.bound >= 1);
    CHECK(scan.bound < 4 * m - 1);
    for (long long y = 2; y <= scan.bound; ++y) {
      CHECK(tsb::bip_feasible(m, y));
    }
    if (scan.bound + 1 < 4 * m - 1) {
      CHECK_FALSE(tsb::bip_feasible(m, scan.bound + 1));
    }
    for (long long y : scan.violations) {
      CHECK(y > scan.bound + 1);
      CHECK(tsb::bip_feasible(m, y));
    }
  }
}

TEST_CASE("closed case analysis landmarks") {
  const tsb::ClosedCaseBound m2 = tsb::closed_case_bound(2);
  CHECK(m2.f == 5);
  CHECK(m2.epsilon_is_zero);
  CHECK(m2.case_applicable[0]);
  CHECK(m2.case_applicable[1]);
  CHECK_FALSE(m2.case_applicable[2]);
  CHECK_FALSE(m2.case_applicable[3]);
  CHECK(m2.bound == 3);

  const tsb::ClosedCaseBound m7 = tsb::closed_case_bound(7);
  CHECK(m7.f == 9);
  CHECK_FALSE(m7.epsilon_is_zero);
  CHECK_FALSE(m7.case_applicable[2]);  // f - 1 = 8 is even
  CHECK(m7.case_applicable[3]);        // 19^2 = 361 > 337
  CHECK(m7.bound == 7);

  const tsb::ClosedCaseBound m18 = tsb::closed_case_bound(18);
  CHECK(m18.f == 14);
  CHECK(m18.case_applicable[2]);  // f - 1 = 13 is odd
  CHECK_FALSE(m18.case_applicable[3]);
  CHECK(m18.bound == 12);

  // m = 1: 7^2 = 49 = 1 + 48, so the strict case-4 test fails on equality
  // and only the base case applies.
  const tsb::ClosedCaseBound m1 = tsb::closed_case_bound(1);
  CHECK(m1.f == 3);
  CHECK(m1.case_applicable[0]);
  CHECK_FALSE(m1.case_applicable[1]);
  CHECK_FALSE(m1.case_applicable[2]);
  CHECK_FALSE(m1.case_applicable[3]);
  CHECK(m1.bound == 2);

  // m = 6: 17^2 = 289 = 1 + 288, same equality situation for case 4, but
  // f - 1 = 7 is odd so case 3 still sharpens the bound.
  const tsb::ClosedCaseBound m6 = tsb::closed_case_bound(6);
  CHECK(m6.f == 8);
  CHECK_FALSE(m6.epsilon_is_zero);
  CHECK(m6.case_applicable[2]);
  CHECK_FALSE(m6.case_applicable[3]);
  CHECK(m6.bound == 6);

  CHECK_THROWS_AS(tsb::closed_case_bound(0), InputError);
}

TEST_CASE("case analysis never beats the full scan") {
  for (long long m = 1; m <= 200; ++m) {
    CHECK(tsb::closed_case_bound(m).bound >= tsb::bip_bound(m));
  }
}

TEST_CASE("scan bound stays within the integer square-root envelope") {
  // The scan bound can never exceed the base closed-form case f - 1.
  for (long long m = 1; m <= 200; ++m) {
    const long long f = tsb::closed_case_bound(m).f;
    CHECK(tsb::bip_bound(m) <= f - 1);
  }
}
