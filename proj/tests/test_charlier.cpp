#include <mpfr.h>

#include "doctest.h"
#include "gwp1/charlier.hpp"
#include "gwp1/errors.hpp"

using namespace gwp1;

namespace {

constexpr long kPrec = 128;

BigFloat bf(const char* s, long p = kPrec) { return BigFloat::from_string(s, p); }

bool close(const BigFloat& a, const BigFloat& b, const char* tol) { return approx_equal(a, b, bf(tol)); }

}  // namespace

TEST_CASE("Charlier polynomials") {
  const Rat a(1, 3);
  const CharlierPolynomial p0 = charlier_poly(0, a);
  CHECK(p0.coeffs == std::vector<Rat>{Rat(1)});
  const CharlierPolynomial p1 = charlier_poly(1, a);
  CHECK(p1.coeffs == std::vector<Rat>{-a - Rat(1, 2), Rat(1)});
  const CharlierPolynomial p2 = charlier_poly(2, a);
  // (x - a - 3/2)(x - a - 1/2) - a
  const Rat c0 = (a + Rat(3, 2)) * (a + Rat(1, 2)) - a;
  CHECK(p2.coeffs == std::vector<Rat>{c0, -(2 * a + 2), Rat(1)});
  for (int l = 0; l <= 8; ++l)
    for (const Rat& b : {Rat(1), Rat(1, 2), Rat(7, 3)}) CHECK(charlier_poly(l, b).coeffs == charlier_poly_recurrence(l, b).coeffs);
  CHECK(p2(Rat(1, 2)) == c0 - (2 * a + 2) / 2 + Rat(1, 4));
  CHECK(close(p2(BigFloat(Rat(1, 2), kPrec)), BigFloat(p2(Rat(1, 2)), kPrec), "1e-35"));
  CHECK_THROWS(charlier_poly(2, Rat(0)));
  CHECK_THROWS(charlier_poly(2, Rat(-1)));
  CHECK_THROWS(charlier_poly(-1, Rat(1)));
}

TEST_CASE("Charlier orthogonality") {
  const BigFloat tol = bf("1e-20");
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m) {
      const NumericRow r = charlier_orthogonality_check(l, m, Rat(1, 2), tol, kPrec);
      CHECK(r.ok);
      CHECK(r.abs_error <= tol);
    }
  const NumericRow r = charlier_orthogonality_check(2, 2, Rat(2), tol, kPrec);
  CHECK(close(r.target, BigFloat(8L, kPrec), "1e-30"));
  CHECK_THROWS(charlier_orthogonality_check(1, 1, Rat(1), bf("1e-60"), 64));
}

TEST_CASE("gamma function") {
  CHECK(close(gamma_real(BigFloat(1L, kPrec), kPrec), BigFloat(1L, kPrec), "1e-36"));
  const BigFloat sqrt_pi = sqrt(const_pi(kPrec));
  CHECK(close(gamma_real(BigFloat(Rat(1, 2), kPrec), kPrec), sqrt_pi, "1e-36"));
  CHECK(close(gamma_real(BigFloat(Rat(5, 2), kPrec), kPrec), sqrt_pi * BigFloat(Rat(3, 4), kPrec), "1e-36"));
  CHECK(close(gamma_real(BigFloat(Rat(-1, 2), kPrec), kPrec), sqrt_pi * BigFloat(-2L, kPrec), "1e-36"));
  CHECK(close(gamma_real(BigFloat(6L, kPrec), kPrec), BigFloat(120L, kPrec), "1e-32"));
  CHECK_THROWS(gamma_real(BigFloat(0L, kPrec), kPrec));
  CHECK_THROWS(gamma_real(BigFloat(-3L, kPrec), kPrec));
  for (long p : {64L, 256L, 1024L})
    for (const char* x : {"0.3", "7.25", "-2.6", "41.5"}) {
      const BigFloat v = bf(x, p);
      BigFloat ref(0L, p);
      mpfr_gamma(ref.get(), v.get(), MPFR_RNDN);
      const BigFloat g = gamma_real(v, p);
      CHECK(approx_equal(g, ref, abs(ref) * ldexp(BigFloat(1L, p), 4 - p)));
    }
}

TEST_CASE("Bessel functions") {
  const BigFloat x = bf("1.7");
  const BigFloat pref = sqrt(BigFloat(2L, kPrec) / (const_pi(kPrec) * x));
  CHECK(close(bessel_j(BigFloat(Rat(1, 2), kPrec), x, kPrec), pref * sin(x), "1e-35"));
  CHECK(close(bessel_j(BigFloat(Rat(-1, 2), kPrec), x, kPrec), pref * cos(x), "1e-35"));
  // J_0(2) from tables.
  CHECK(close(bessel_j(BigFloat(0L, kPrec), BigFloat(2L, kPrec), kPrec), bf("0.22389077914123566805"), "1e-19"));
  // J_{-n} = (-1)^n J_n.
  CHECK(close(bessel_j(BigFloat(-3L, kPrec), x, kPrec), -bessel_j(BigFloat(3L, kPrec), x, kPrec), "1e-35"));
  // Tiny argument: J_nu(x) ~ (x/2)^nu / Gamma(nu + 1).
  const BigFloat tiny = bf("1e-12");
  const BigFloat nu = bf("2.5");
  const BigFloat lead = pow(tiny / BigFloat(2L, kPrec), nu) / gamma_real(nu + BigFloat(1L, kPrec), kPrec);
  const BigFloat j = bessel_j(nu, tiny, kPrec);
  CHECK(abs(j / lead - BigFloat(1L, kPrec)) < bf("1e-20"));
}

TEST_CASE("f and g satisfy the difference equation") {
  for (const char* z : {"5.25", "10.25", "20.25"})
    for (const char* e : {"0.5", "1", "2"}) {
      const auto [rf, rg] = numeric_difference_residuals(bf(z), bf(e), kPrec);
      const auto [f, g] = numeric_f_g(bf(z), bf(e), kPrec);
      CHECK(rf <= abs(f) * bf("1e-30") + bf("1e-60"));
      CHECK(rg <= abs(g) * bf("1e-30") + bf("1e-60"));
    }
  CHECK(close(numeric_wronskian(bf("7.25"), BigFloat(1L, kPrec), kPrec), BigFloat(1L, kPrec), "1e-30"));
  CHECK(close(numeric_wronskian(bf("3.6"), bf("0.7"), kPrec), BigFloat(1L, kPrec), "1e-30"));
  CHECK_THROWS(numeric_f_g(bf("3.5"), BigFloat(1L, kPrec), kPrec));
}

TEST_CASE("asymptotic expansion of f") {
  const AsymptoticReport r = asymptotic_match_check(BigFloat(20L, kPrec), Rat(1), 3, kPrec);
  CHECK(r.rel_error < bf("1e-4"));
  CHECK(r.ratio > BigFloat(8L, kPrec));
  CHECK(r.ratio < BigFloat(32L, kPrec));
  const AsymptoticReport r0 = asymptotic_match_check(BigFloat(20L, kPrec), Rat(1), 0, kPrec);
  CHECK(r0.abs_error > r.abs_error);
}

TEST_CASE("scaling limit") {
  const ScalingLimitReport r = charlier_scaling_limit_check(BigFloat(0L, kPrec), 0, Rat(1), {20, 40, 80}, kPrec);
  CHECK(r.decreasing);
  REQUIRE(r.rows.size() == 3);
  // J_{-1/2}(2) = cos(2) / sqrt(pi)
  CHECK(close(r.target, cos(BigFloat(2L, kPrec)) / sqrt(const_pi(kPrec)), "1e-30"));
  REQUIRE(r.observed_rates.size() == 2);
  for (double x : r.observed_rates) CHECK(x == doctest::Approx(1.0).epsilon(0.1));
  const ScalingLimitReport r2 = charlier_scaling_limit_check(bf("0.3"), 1, Rat(1, 2), {16, 32, 64}, kPrec);
  CHECK(r2.decreasing);
}

TEST_CASE("characteristic polynomial expectation") {
  const std::vector<BigFloat> u1 = {BigFloat(3L, kPrec)};
  CHECK(close(char_poly_expectation(1, Rat(1), u1, kPrec), BigFloat(Rat(3, 2), kPrec), "1e-35"));
  CHECK(close(char_poly_expectation(3, Rat(1, 2), u1, kPrec), charlier_poly(3, Rat(1, 2))(u1[0]), "1e-30"));
  for (int L = 1; L <= 2; ++L)
    for (const Rat& a : {Rat(1), Rat(1, 2)}) {
      const std::vector<BigFloat> us = {BigFloat(3L, kPrec), BigFloat(Rat(-7, 5), kPrec)};
      const BigFloat det = char_poly_expectation(L, a, us, kPrec);
      const BruteForceResult bfr = brute_force_expectation(L, a, us, bf("1e-20"), kPrec);
      CHECK(bfr.bound <= bf("1e-20"));
      CHECK(close(det, bfr.value, "1e-15"));
    }
  CHECK_THROWS(char_poly_expectation(1, Rat(1), {BigFloat(1L, kPrec), BigFloat(1L, kPrec)}, kPrec));
  CHECK_THROWS(brute_force_expectation(3, Rat(1), u1, bf("1e-10"), kPrec));
}
