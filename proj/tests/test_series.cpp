#include <algorithm>
#include <random>

#include "doctest.h"
#include "gwp1/errors.hpp"
#include "gwp1/multiseries.hpp"
#include "gwp1/zseries.hpp"

using namespace gwp1;

namespace {

EpsLaurent E(long v) { return EpsLaurent(v); }

ZSeries poly(int top, std::vector<long> coeffs, int order) {
  std::vector<EpsLaurent> c;
  for (long v : coeffs) c.emplace_back(v);
  return ZSeries::from_descending(top, c, order);
}

ZSeries random_series(std::mt19937& rng, int top, int order) {
  std::uniform_int_distribution<int> num(-5, 5), ex(-2, 2);
  ZSeries s(top, order);
  for (int d = top; d >= -order; --d) s.set_coeff(d, EpsLaurent::monomial(ex(rng), Rat(num(rng))));
  return s;
}

bool same_window(const ZSeries& a, const ZSeries& b) { return a.order() == b.order() && equal_on_common_window(a, b); }

}  // namespace

TEST_CASE("ZSeries products track the window") {
  const ZSeries a = poly(0, {1, 1}, 2), b = poly(0, {1, -1}, 2);
  const ZSeries p = a * b;
  CHECK(p.order() == 2);
  CHECK(p.coeff(0) == E(1));
  CHECK(p.coeff(-1).is_zero());
  CHECK(p.coeff(-2) == E(-1));
  CHECK_THROWS_AS(p.coeff(-3), TruncationError);

  const ZSeries z = ZSeries::monomial(1, E(1)), zi = ZSeries::monomial(-1, E(1));
  const ZSeries one = z * zi;
  CHECK(one.coeff(0) == E(1));
  CHECK(one.exact());
  // A window of order 2 on a series with top 1 gives a product known down to z^-1.
  const ZSeries w = ZSeries::monomial(1, E(1), 2) * poly(0, {1, 1, 1}, 2);
  CHECK(w.order() == 1);
}

TEST_CASE("series_invert") {
  const ZSeries inv = series_invert(poly(0, {1, 1}, 2));
  CHECK(inv.order() == 2);
  CHECK(inv.coeff(0) == E(1));
  CHECK(inv.coeff(-1) == E(-1));
  CHECK(inv.coeff(-2) == E(1));
  CHECK(series_invert(ZSeries::constant(E(1)), 5).coeff(-3).is_zero());
  CHECK_THROWS(series_invert(poly(0, {2, 1}, 2)));

  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    ZSeries a = random_series(rng, 0, 6);
    a.set_coeff(0, E(1));
    const ZSeries prod = a * series_invert(a);
    CHECK(same_window(prod, ZSeries::constant(E(1), 6)));
  }
}

TEST_CASE("argument_shift") {
  const ZSeries z1 = argument_shift(ZSeries::monomial(1, E(1)), 1);
  CHECK(z1.coeff(1) == E(1));
  CHECK(z1.coeff(0) == E(1));
  CHECK(z1.coeff(-1).is_zero());

  const ZSeries inv = argument_shift(ZSeries::monomial(-1, E(1)), 1, 3);
  CHECK(inv.order() == 3);
  CHECK(inv.coeff(-1) == E(1));
  CHECK(inv.coeff(-2) == E(-1));
  CHECK(inv.coeff(-3) == E(1));

  const ZSeries inv2 = argument_shift(ZSeries::monomial(-2, E(1)), -1, 4);
  CHECK(inv2.coeff(-2) == E(1));
  CHECK(inv2.coeff(-3) == E(2));
  CHECK(inv2.coeff(-4) == E(3));
}

TEST_CASE("argument_shift round trip on random series") {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const ZSeries a = random_series(rng, 2, 6);
    const ZSeries back = argument_shift(argument_shift(a, 1), -1);
    CHECK(equal_on_common_window(back, a));
    CHECK(back.order() >= 6);
  }
}

TEST_CASE("series_exp") {
  CHECK(same_window(series_exp(ZSeries(-1, 4)), ZSeries::constant(E(1), 4)));
  const ZSeries e = series_exp(ZSeries::monomial(-1, E(1), 2));
  CHECK(e.coeff(0) == E(1));
  CHECK(e.coeff(-1) == E(1));
  CHECK(e.coeff(-2) == EpsLaurent(Rat(1, 2)));
  CHECK_THROWS(series_exp(ZSeries::constant(E(1), 3)));

  // (z+1) log(1+1/z) - 1 = 1/(2z) - 1/(6z^2) + ...
  ZSeries phi(-1, 6);
  for (int m = 1; m <= 6; ++m) phi.set_coeff(-m, EpsLaurent(Rat(m % 2 ? 1 : -1, m * (m + 1))));
  const ZSeries ex = series_exp(phi);
  CHECK(ex.coeff(-1) == EpsLaurent(Rat(1, 2)));
  CHECK(ex.coeff(-2) == EpsLaurent(Rat(1, 8) - Rat(1, 6)));
  CHECK(same_window(series_log1p(ex - ZSeries::constant(E(1))), phi));
}

TEST_CASE("log series derivative") {
  LogSeries lg{ZSeries(), ZSeries::constant(E(1))};
  LogSeries d = logseries_derivative(lg);
  CHECK(d.plain.coeff(-1) == E(1));
  CHECK(d.logpart.is_zero_on_window());

  CHECK(derivative(ZSeries::monomial(-1, E(1))).coeff(-2) == E(-1));

  LogSeries zl{ZSeries(), ZSeries::monomial(1, E(1))};
  d = logseries_derivative(zl);
  CHECK(d.plain.coeff(0) == E(1));
  CHECK(d.logpart.coeff(0) == E(1));
}

TEST_CASE("residue at infinity") {
  CHECK(residue_at_infinity(ZSeries::monomial(-1, E(1))) == E(-1));
  CHECK(residue_at_infinity(poly(0, {1, 0, 1}, 2)).is_zero());
  CHECK_THROWS_AS(residue_at_infinity(ZSeries::constant(E(1), 0)), TruncationError);

  std::mt19937 rng(9);
  for (int i = 0; i < 20; ++i) {
    const ZSeries a = random_series(rng, 3, 5), b = random_series(rng, 1, 4);
    const EpsLaurent c = EpsLaurent::monomial(2, Rat(3));
    CHECK(residue_at_infinity(a * c + b) == residue_at_infinity(a) * c + residue_at_infinity(b));
    CHECK(residue_at_infinity(derivative(a)).is_zero());
  }
}

TEST_CASE("expand_inverse_difference") {
  const MultiSeries f = expand_inverse_difference(0, 1, 2, {0, 1}, 3);
  CHECK(f.coeff({-1, 0}) == E(1));
  CHECK(f.coeff({-2, 1}) == E(1));
  CHECK(f.coeff({-3, 2}) == E(1));
  CHECK(f.coeff({-2, 0}).is_zero());

  // Region |z1| > |z0|: 1/(z0 - z1) = -(1/z1 + z0/z1^2 + ...).
  const MultiSeries g = expand_inverse_difference(0, 1, 2, {1, 0}, 3);
  CHECK(g.coeff({0, -1}) == E(-1));
  CHECK(g.coeff({1, -2}) == E(-1));

  // f_ij = -f_ji in the same region.
  const MultiSeries h = expand_inverse_difference(1, 0, 2, {0, 1}, 3);
  CHECK(equal_on_common_window(h, -f));

  // Multiplying back by (z0 - z1) gives 1 on the window.
  const MultiSeries diff = MultiSeries::monomial({1, 0}, E(1), {0, 1}) - MultiSeries::monomial({0, 1}, E(1), {0, 1});
  const MultiSeries one = f * diff;
  CHECK(one.coeff({0, 0}) == E(1));
  for (const auto& [e, c] : one.terms())
    if (one.in_window(e) && e != std::vector<int>{0, 0}) CHECK(c.is_zero());
  CHECK_THROWS(expand_inverse_difference(1, 1, 2, {0, 1}, 3));
}

TEST_CASE("Vandermonde division") {
  const MultiSeries z0 = MultiSeries::monomial({1, 0}, E(1)), z1 = MultiSeries::monomial({0, 1}, E(1));
  const MultiSeries q1 = antisym_divide_vandermonde(z1 - z0);
  CHECK(q1.terms().size() == 1);
  CHECK(q1.coeff({0, 0}) == E(1));

  const MultiSeries q2 = antisym_divide_vandermonde(z1 * z1 - z0 * z0);
  CHECK(q2.coeff({1, 0}) == E(1));
  CHECK(q2.coeff({0, 1}) == E(1));
  CHECK(q2.terms().size() == 2);

  CHECK_THROWS_AS(antisym_divide_vandermonde(z0), ConsistencyError);
  CHECK_THROWS_AS(antisym_divide_vandermonde(z0 * z1), ConsistencyError);
}

TEST_CASE("Vandermonde round trip on random symmetric polynomials") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-4, 4), deg(-2, 1);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3;
    // Symmetrize a few random monomials.
    MultiSeries q(n);
    for (int t = 0; t < 3; ++t) {
      std::vector<int> e{deg(rng), deg(rng), deg(rng)};
      const EpsLaurent c = EpsLaurent::monomial(deg(rng), Rat(num(rng)));
      std::sort(e.begin(), e.end());
      do q = q + MultiSeries::monomial(e, c);
      while (std::next_permutation(e.begin(), e.end()));
    }
    MultiSeries vdm = MultiSeries::constant(E(1), n);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<int> ek(n, 0), ej(n, 0);
        ek[k] = 1;
        ej[j] = 1;
        vdm = vdm * (MultiSeries::monomial(ek, E(1)) - MultiSeries::monomial(ej, E(1)));
      }
    const MultiSeries back = antisym_divide_vandermonde(q * vdm);
    CHECK(equal_on_common_window(back, q));
    for (const auto& [e, c] : q.terms()) CHECK(back.coeff(e) == c);
  }
}

TEST_CASE("MultiSeries arithmetic rejects mismatched variables") {
  CHECK_THROWS(MultiSeries(2) + MultiSeries(3));
  const MultiSeries a = MultiSeries::embed(poly(0, {1, 1}, 2), 0, 2);
  const MultiSeries b = MultiSeries::embed(poly(0, {1, -1}, 2), 1, 2);
  const MultiSeries p = a * b;
  CHECK(p.coeff({-1, -1}) == E(-1));
  CHECK(p.coeff({-1, 0}) == E(1));
  CHECK(p.is_symmetric() == false);
}

TEST_CASE("log1p of a MultiSeries") {
  const MultiSeries u = MultiSeries::monomial({-1, 0}, E(1)) + MultiSeries::monomial({0, -1}, E(1));
  std::vector<int> floors{kUnbounded, 3};
  const MultiSeries l = log1p(u.truncated(floors), 3);
  CHECK(l.coeff({-1, 0}) == E(1));
  CHECK(l.coeff({-2, 0}) == EpsLaurent(Rat(-1, 2)));
  CHECK(l.coeff({-1, -1}) == E(-1));
  CHECK(l.coeff({-2, -1}) == E(1));
}
