#include "gwp1/charlier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gwp1/errors.hpp"
#include "gwp1/wave.hpp"

namespace gwp1 {

namespace {

constexpr long kGuard = 32;

long exponent_of(const BigFloat& x) { return x.is_zero() ? 0 : static_cast<long>(mpfr_get_exp(x.get())); }

BigFloat nearest_integer(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_rint(r.get(), x.get(), MPFR_RNDN);
  return r;
}

bool is_odd(const BigFloat& integer) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), integer.get(), MPFR_RNDN);
  return mpz_odd_p(z.get_mpz_t()) != 0;
}

long precision_cap(long prec) { return 8 * prec + 2048; }

[[noreturn]] void exhausted(const std::string& where, long needed) {
  throw ComputationError(where + ": cancellation needs about " + std::to_string(needed) +
                         " bits; rerun with a larger precision");
}

std::vector<Rat> poly_mul(const std::vector<Rat>& p, const std::vector<Rat>& q) {
  std::vector<Rat> r(p.size() + q.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

BigFloat horner(const std::vector<BigFloat>& c, const BigFloat& x) {
  BigFloat s(0L, x.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

// pi_ell(x; a) through the hypergeometric sum, raising the working precision
// until the observed cancellation is covered.
BigFloat charlier_eval(int ell, const Rat& a, const BigFloat& x, long prec) {
  long guard = kGuard;
  for (;;) {
    const long wp = prec + guard;
    const BigFloat av(a, wp);
    const BigFloat xv = x.with_precision(std::max(wp, x.precision()));
    const BigFloat base = BigFloat(Rat(1, 2), wp) - xv;
    BigFloat t = pow(av, static_cast<long>(ell));
    BigFloat sum = t;
    long top = exponent_of(t);
    for (int i = 0; i < ell; ++i) {
      t = t * BigFloat(static_cast<long>(ell - i), wp) / BigFloat(static_cast<long>(i + 1), wp) *
          (base + BigFloat(static_cast<long>(i), wp)) / av;
      sum += t;
      if (!t.is_zero()) top = std::max(top, exponent_of(t));
    }
    if (ell % 2) sum = -sum;
    if (sum.is_zero()) return BigFloat(0L, prec);
    const long loss = top - exponent_of(sum);
    if (loss <= guard - 16) return sum.with_precision(prec);
    guard = loss + kGuard;
    if (guard > precision_cap(prec)) exhausted("charlier polynomial", prec + guard);
  }
}

// Bound on sum_{m >= n} P(m + 1/2) a^m e^-a / m! for P with nonnegative
// coefficients; returns false when the term ratio is not yet below one.
bool poisson_tail(const std::vector<BigFloat>& P, const BigFloat& a, const BigFloat& w_n, long n, BigFloat& out) {
  const long wp = a.precision();
  const long deg = static_cast<long>(P.size()) - 1;
  const BigFloat x(Rat(2 * n + 1, 2), wp);
  const BigFloat rho = pow((x + BigFloat(1L, wp)) / x, deg) * a / BigFloat(n + 1, wp);
  if (rho >= BigFloat(1L, wp)) return false;
  out = horner(P, x) * w_n / (BigFloat(1L, wp) - rho);
  return true;
}

BigFloat determinant(std::vector<std::vector<BigFloat>> m) {
  const std::size_t n = m.size();
  BigFloat det(1L, m[0][0].precision());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    if (m[piv][c].is_zero()) return BigFloat(0L, det.precision());
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigFloat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// log Gamma(y) for y large enough that the Stirling series reaches 2^-wp.
BigFloat log_gamma_stirling(const BigFloat& y, long wp) {
  const BigFloat one(1L, wp);
  const BigFloat half(Rat(1, 2), wp);
  BigFloat s = (y - half) * log(y) - y + half * log(BigFloat(2L, wp) * const_pi(wp));
  const BigFloat y2 = y * y;
  BigFloat ypow = y;
  const BigFloat eps = ldexp(one, -wp);
  // Terms shrink like 2 (2k)! / (2 pi y)^2k; size the Bernoulli table from that.
  const double yd = y.to_double();
  int kmax = 1;
  while (std::lgamma(2.0 * kmax + 1) - 2.0 * kmax * std::log(2 * M_PI * yd) + std::log(yd) >
         -static_cast<double>(wp) * M_LN2 - 8) {
    if (kmax > M_PI * yd) throw ComputationError("gamma_real: Stirling series cannot reach the target precision");
    ++kmax;
  }
  const std::vector<Rat> bern = bernoulli_numbers(2 * kmax + 2);
  for (int k = 1; k <= kmax + 1; ++k) {
    const BigFloat term =
        BigFloat(bern[static_cast<std::size_t>(2 * k)] / Rat(2L * k * (2L * k - 1)), wp) / ypow;
    s += term;
    if (abs(term) < eps) break;
    ypow *= y2;
  }
  return s;
}

}  // namespace

Rat CharlierPolynomial::operator()(const Rat& x) const {
  Rat s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
  return s;
}

BigFloat CharlierPolynomial::operator()(const BigFloat& x) const { return charlier_eval(ell, a, x, x.precision()); }

CharlierPolynomial charlier_poly(int ell, const Rat& a) {
  if (ell < 0) throw std::invalid_argument("charlier_poly: degree must be nonnegative");
  if (sgn(a) <= 0) throw std::invalid_argument("charlier_poly: a must be positive");
  std::vector<Rat> poch{Rat(1)};  // (1/2 - x)_i
  std::vector<Rat> c(static_cast<std::size_t>(ell) + 1, Rat(0));
  for (int i = 0; i <= ell; ++i) {
    Rat apow = 1;
    for (int k = 0; k < ell - i; ++k) apow *= a;
    const Rat w = (ell % 2 ? Rat(-1) : Rat(1)) * apow * binomial(ell, static_cast<unsigned>(i));
    for (std::size_t d = 0; d < poch.size(); ++d) c[d] += w * poch[d];
    poch = poly_mul(poch, {Rat(1, 2) + Rat(i), Rat(-1)});
  }
  return {ell, a, c};
}

CharlierPolynomial charlier_poly_recurrence(int ell, const Rat& a) {
  if (ell < 0) throw std::invalid_argument("charlier_poly_recurrence: degree must be nonnegative");
  if (sgn(a) <= 0) throw std::invalid_argument("charlier_poly_recurrence: a must be positive");
  std::vector<Rat> prev, cur{Rat(1)};
  for (int n = 0; n < ell; ++n) {
    std::vector<Rat> next = poly_mul(cur, {-(Rat(n) + a + Rat(1, 2)), Rat(1)});
    for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= a * Rat(n) * prev[d];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {ell, a, cur};
}

NumericRow charlier_orthogonality_check(int ell, int ell2, const Rat& a, const BigFloat& tol, long prec) {
  if (!(tol > BigFloat(0L, prec))) throw std::invalid_argument("charlier_orthogonality_check: tol must be positive");
  const CharlierPolynomial p = charlier_poly(ell, a), q = charlier_poly(ell2, a);
  const long wp = prec + kGuard;
  const std::vector<Rat> pq = poly_mul(p.coeffs, q.coeffs);
  std::vector<BigFloat> bound_poly;
  for (const Rat& c : pq) bound_poly.emplace_back(Rat(abs(c)), wp);

  const BigFloat av(a, wp);
  BigFloat w = exp(-av);
  BigFloat sum(0L, wp), mass(0L, wp), tail(0L, wp);
  const BigFloat quarter_tol = tol.with_precision(wp) / BigFloat(4L, wp);
  for (long n = 0;; ++n) {
    if (poisson_tail(bound_poly, av, w, n, tail) && tail < quarter_tol) break;
    if (n > 1000000) throw ComputationError("charlier_orthogonality_check: tail bound not reached");
    const Rat x(2 * n + 1, 2);
    const BigFloat term = BigFloat(p(x) * q(x), wp) * w;
    sum += term;
    mass += abs(term);
    w = w * av / BigFloat(n + 1, wp);
  }
  if (tol < ldexp(mass + BigFloat(1L, wp), -(prec - 8)))
    throw ComputationError("charlier_orthogonality_check: tolerance is below the rounding level at this precision");

  Rat target = 0;
  if (ell == ell2) {
    target = factorial(static_cast<unsigned>(ell));
    for (int k = 0; k < ell; ++k) target *= a;
  }
  NumericRow r;
  r.input = "l=" + std::to_string(ell) + ",l'=" + std::to_string(ell2) + ",a=" + to_string(a);
  r.value = sum.with_precision(prec);
  r.target = BigFloat(target, prec);
  r.abs_error = abs(r.value - r.target);
  r.bound = tail.with_precision(prec);
  r.ok = r.abs_error <= tol;
  return r;
}

BigFloat gamma_real(const BigFloat& x, long prec) {
  if (!x.is_finite()) throw std::invalid_argument("gamma_real: argument is not finite");
  const BigFloat n = nearest_integer(x);
  if (x.is_integer() && x.sign() <= 0) throw ComputationError("gamma_real: pole at a nonpositive integer");
  const long mag = exponent_of(x) > 0 ? exponent_of(x) : 0;
  const long wp = prec + kGuard + 2 * mag;
  const BigFloat half(Rat(1, 2), wp);
  if (x < half) {
    // Reflection; sin(pi x) from the exact fractional part.
    const long exact = x.precision() + mag + 2;
    BigFloat frac = x.with_precision(exact) - n.with_precision(exact);
    BigFloat s = sin(const_pi(wp) * frac.with_precision(wp));
    if (is_odd(n)) s = -s;
    const BigFloat one_minus = BigFloat(1L, exact) - x.with_precision(exact);
    return (const_pi(wp) / (s * gamma_real(one_minus, wp))).with_precision(prec);
  }
  const BigFloat threshold(0.12 * static_cast<double>(wp) + 10.0, wp);
  BigFloat y = x.with_precision(std::max(wp, x.precision()));
  BigFloat prod(1L, wp);
  const BigFloat one(1L, wp);
  while (y < threshold) {
    prod *= y;
    y += one;
  }
  return (exp(log_gamma_stirling(y, wp)) / prod).with_precision(prec);
}

BigFloat bessel_j(const BigFloat& nu, const BigFloat& x, long prec) {
  if (!(x.sign() > 0)) throw std::invalid_argument("bessel_j: x must be positive");
  // A negative integer order starts at the first term with finite Gamma.
  long m0 = 0;
  if (nu.is_integer() && nu.sign() < 0) m0 = -mpfr_get_si(nu.get(), MPFR_RNDN);
  long guard = kGuard;
  for (;;) {
    const long wp = prec + guard;
    const BigFloat v = nu.with_precision(std::max(wp, nu.precision()));
    const BigFloat h = x.with_precision(wp) / BigFloat(2L, wp);
    const BigFloat q = -(h * h);
    BigFloat t = pow(h, v + BigFloat(2 * m0, wp)) /
                 (BigFloat(factorial(static_cast<unsigned>(m0)), wp) * gamma_real(v + BigFloat(m0 + 1, wp), wp));
    if (m0 % 2) t = -t;
    BigFloat sum = t;
    long top = exponent_of(t);
    const BigFloat half(Rat(1, 2), wp);
    for (long m = m0 + 1;; ++m) {
      const BigFloat vm = v + BigFloat(m, wp);
      t = t * q / (BigFloat(m, wp) * vm);
      sum += t;
      if (!t.is_zero()) top = std::max(top, exponent_of(t));
      // From here on each ratio is at most rho, so the remainder is below |t|.
      if (vm.sign() > 0) {
        const BigFloat rho = abs(q) / (BigFloat(m + 1, wp) * (vm + BigFloat(1L, wp)));
        if (rho <= half && (t.is_zero() || exponent_of(t) < exponent_of(sum) - wp)) break;
      }
      if (m > 100000 + m0) throw ComputationError("bessel_j: series did not converge");
    }
    if (sum.is_zero()) return BigFloat(0L, prec);
    const long loss = top - exponent_of(sum);
    if (loss <= guard - 16) return sum.with_precision(prec);
    guard = loss + kGuard;
    if (guard > precision_cap(prec)) exhausted("bessel_j", prec + guard);
  }
}

std::pair<BigFloat, BigFloat> numeric_f_g(const BigFloat& z, const BigFloat& eps, long prec) {
  if (!(eps.sign() > 0)) throw std::invalid_argument("numeric_f_g: eps must be positive");
  const long mag = exponent_of(z) > 0 ? exponent_of(z) : 0;
  const long wp = prec + kGuard + mag;
  const BigFloat nu = z.with_precision(std::max(wp, z.precision() + mag + 2)) + BigFloat(Rat(1, 2), wp);
  const BigFloat dist = abs(nu - nearest_integer(nu));
  if (dist < ldexp(BigFloat(1L, wp), -prec / 4))
    throw ComputationError("numeric_f_g: z + 1/2 is (nearly) an integer; perturb z, e.g. to k + 1/4");
  const BigFloat x = BigFloat(2L, wp) / eps.with_precision(wp);
  const BigFloat pi = const_pi(wp);
  const BigFloat e = eps.with_precision(wp);
  // cos(pi z) = sin(pi nu), taken from the distance to the nearest integer.
  const BigFloat n = nearest_integer(nu);
  BigFloat s = sin(pi * (nu - n));
  if (is_odd(n)) s = -s;
  const BigFloat f = sqrt(pi / (BigFloat(2L, wp) * e)) * bessel_j(-nu, x, wp) / s;
  const BigFloat g = sqrt(BigFloat(2L, wp) * pi / e) * bessel_j(nu, x, wp);
  return {f.with_precision(prec), g.with_precision(prec)};
}

std::pair<BigFloat, BigFloat> numeric_difference_residuals(const BigFloat& z, const BigFloat& eps, long prec) {
  const long wp = prec + kGuard;
  const BigFloat one(1L, wp);
  const BigFloat zz = z.with_precision(std::max(wp, z.precision()));
  const auto lo = numeric_f_g(zz - one, eps, wp);
  const auto mid = numeric_f_g(zz, eps, wp);
  const auto hi = numeric_f_g(zz + one, eps, wp);
  const BigFloat c = eps.with_precision(wp) * (zz + BigFloat(Rat(1, 2), wp));
  return {abs(hi.first + lo.first - c * mid.first).with_precision(prec),
          abs(hi.second + lo.second - c * mid.second).with_precision(prec)};
}

BigFloat numeric_wronskian(const BigFloat& z, const BigFloat& eps, long prec) {
  const long wp = prec + kGuard;
  const BigFloat zz = z.with_precision(std::max(wp, z.precision()));
  const auto at = numeric_f_g(zz, eps, wp);
  const auto before = numeric_f_g(zz - BigFloat(1L, wp), eps, wp);
  return (at.first * before.second - before.first * at.second).with_precision(prec);
}

AsymptoticReport asymptotic_match_check(const BigFloat& z, const Rat& eps, int order, long prec) {
  if (order < 0) throw std::invalid_argument("asymptotic_match_check: order must be nonnegative");
  if (sgn(eps) <= 0) throw std::invalid_argument("asymptotic_match_check: eps must be positive");
  const long wp = prec + kGuard;
  const WaveExpansion f = solve_formal_wave(1, order);
  const BigFloat e(eps, wp);
  std::vector<BigFloat> coeffs;
  for (int j = 0; j <= order; ++j) coeffs.push_back(eps_eval(f.h.coeff(-j), e));

  auto evaluate = [&](const BigFloat& zv, BigFloat& numeric, BigFloat& formal) {
    const BigFloat fz = numeric_f_g(zv, e, wp).first;
    numeric = fz * exp(-zv * (log(e * zv) - BigFloat(1L, wp)));
    const BigFloat inv = BigFloat(1L, wp) / zv;
    formal = horner(coeffs, inv);
  };
  AsymptoticReport r;
  const BigFloat z1 = z.with_precision(std::max(wp, z.precision()));
  evaluate(z1, r.numeric, r.formal);
  r.abs_error = abs(r.numeric - r.formal);
  r.rel_error = r.abs_error / abs(r.numeric);
  BigFloat n2(wp), f2(wp);
  evaluate(z1 * BigFloat(2L, wp), n2, f2);
  r.abs_error_2z = abs(n2 - f2);
  r.ratio = r.abs_error / r.abs_error_2z;
  for (BigFloat* b : {&r.numeric, &r.formal, &r.abs_error, &r.rel_error, &r.abs_error_2z, &r.ratio})
    *b = b->with_precision(prec);
  return r;
}

ScalingLimitReport charlier_scaling_limit_check(const BigFloat& zeta, int ell, const Rat& eps,
                                                const std::vector<int>& Ls, long prec) {
  if (sgn(eps) <= 0) throw std::invalid_argument("charlier_scaling_limit_check: eps must be positive");
  if (ell < 0) throw std::invalid_argument("charlier_scaling_limit_check: ell must be nonnegative");
  if (Ls.empty()) throw std::invalid_argument("charlier_scaling_limit_check: empty L list");
  for (int L : Ls)
    if (L < ell + 1) throw std::invalid_argument("charlier_scaling_limit_check: every L must be at least ell + 1");
  const long wp = prec + kGuard;
  const BigFloat e(eps, wp);
  const BigFloat zv = zeta.with_precision(std::max(wp, zeta.precision()));
  const BigFloat nu = zv - BigFloat(static_cast<long>(ell), wp) - BigFloat(Rat(1, 2), wp);

  ScalingLimitReport rep;
  rep.target = (pow(e, nu) * bessel_j(nu, BigFloat(2L, wp) / e, wp)).with_precision(prec);
  rep.decreasing = true;
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    const int L = Ls[i];
    const Rat a = Rat(1) / (Rat(L) * eps * eps);
    const BigFloat x = BigFloat(static_cast<long>(L), wp) + zv;
    const BigFloat val =
        charlier_eval(L + ell, a, x, wp) / gamma_real(x + BigFloat(Rat(1, 2), wp), wp);
    NumericRow row;
    row.input = "L=" + std::to_string(L);
    row.value = val.with_precision(prec);
    row.target = rep.target;
    row.abs_error = abs(row.value - row.target);
    row.bound = BigFloat(0L, prec);
    row.ok = i == 0 || row.abs_error < rep.rows.back().abs_error;
    if (!row.ok) rep.decreasing = false;
    if (i > 0) {
      const double num = std::log2(rep.rows.back().abs_error.to_double() / row.abs_error.to_double());
      const double den = std::log2(static_cast<double>(L) / Ls[i - 1]);
      rep.observed_rates.push_back(num / den);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

BigFloat char_poly_expectation(int L, const Rat& a, const std::vector<BigFloat>& us, long prec) {
  if (L < 1) throw std::invalid_argument("char_poly_expectation: L must be at least 1");
  if (us.empty()) throw std::invalid_argument("char_poly_expectation: need at least one u");
  if (sgn(a) <= 0) throw std::invalid_argument("char_poly_expectation: a must be positive");
  const std::size_t n = us.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (mpfr_equal_p(us[j].get(), us[k].get())) throw ComputationError("char_poly_expectation: coincident u values");
  const long wp = prec + kGuard;
  std::vector<std::vector<BigFloat>> m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[j].push_back(charlier_eval(L + static_cast<int>(k), a, us[j], wp));
  BigFloat vdm(1L, wp);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) vdm *= us[k].with_precision(wp) - us[j].with_precision(wp);
  return (determinant(std::move(m)) / vdm).with_precision(prec);
}

BruteForceResult brute_force_expectation(int L, const Rat& a, const std::vector<BigFloat>& us, const BigFloat& tol,
                                         long prec) {
  if (L < 1 || L > 2) throw std::invalid_argument("brute_force_expectation: supports L = 1 or 2");
  if (sgn(a) <= 0) throw std::invalid_argument("brute_force_expectation: a must be positive");
  if (!(tol.sign() > 0)) throw std::invalid_argument("brute_force_expectation: tol must be positive");
  const long wp = prec + kGuard;
  const BigFloat av(a, wp);
  const BigFloat one(1L, wp);

  // Separable bounds: |prod_j (u_j - x)| <= prod_j (|u_j| + x), (x1 - x2)^2 <= 2 (1+x1)^2 (1+x2)^2.
  std::vector<BigFloat> pz{one};
  if (L == 2) pz = {one, BigFloat(2L, wp), one};
  std::vector<BigFloat> pn = pz;
  for (const BigFloat& u : us) {
    std::vector<BigFloat> next(pn.size() + 1, BigFloat(0L, wp));
    for (std::size_t d = 0; d < pn.size(); ++d) {
      next[d] += pn[d] * abs(u).with_precision(wp);
      next[d + 1] += pn[d];
    }
    pn = std::move(next);
  }

  auto factor = [&](const BigFloat& x) {
    BigFloat p = one;
    for (const BigFloat& u : us) p *= u.with_precision(wp) - x;
    return p;
  };

  for (long n_max = 16; n_max <= (1L << 16); n_max *= 2) {
    std::vector<BigFloat> w, x, fx;
    BigFloat wn = exp(-av);
    for (long n = 0; n < n_max; ++n) {
      w.push_back(wn);
      x.emplace_back(Rat(2 * n + 1, 2), wp);
      fx.push_back(factor(x.back()));
      wn = wn * av / BigFloat(n + 1, wp);
    }
    BigFloat tn(wp), tz(wp);
    if (!poisson_tail(pn, av, wn, n_max, tn) || !poisson_tail(pz, av, wn, n_max, tz)) continue;

    BigFloat num(0L, wp), z(0L, wp), dnum(0L, wp), dz(0L, wp);
    if (L == 1) {
      for (long n = 0; n < n_max; ++n) {
        num += w[n] * fx[n];
        z += w[n];
      }
      dnum = tn;
      dz = tz;
    } else {
      BigFloat sn(0L, wp), sz(0L, wp);
      for (long i = 0; i < n_max; ++i) {
        sn += horner(pn, x[i]) * w[i];
        sz += horner(pz, x[i]) * w[i];
        for (long j = 0; j < n_max; ++j) {
          const BigFloat d = x[i] - x[j];
          const BigFloat ww = w[i] * w[j] * d * d;
          num += ww * fx[i] * fx[j];
          z += ww;
        }
      }
      // Pairs with at least one index >= n_max.
      dnum = BigFloat(4L, wp) * tn * (sn + tn);
      dz = BigFloat(4L, wp) * tz * (sz + tz);
    }
    const BigFloat val = num / z;
    const BigFloat bound = (dnum + abs(val) * dz) / z;
    if (bound < tol) return {val.with_precision(prec), bound.with_precision(prec), static_cast<int>(n_max)};
  }
  throw ComputationError("brute_force_expectation: tail bound stays above tol");
}

}  // namespace gwp1
