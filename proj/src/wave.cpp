#include "gwp1/wave.hpp"

#include <stdexcept>
#include <string>

#include "gwp1/errors.hpp"

namespace gwp1 {

namespace {

EpsLaurent eps_power(int k) { return EpsLaurent::monomial(k); }

// Division by a single-term EpsLaurent.
EpsLaurent divide_by_monomial(const EpsLaurent& a, const EpsLaurent& m) {
  if (m.terms().size() != 1) throw ConsistencyError("pivot is not a monomial in eps");
  const auto& [e, c] = m.terms().front();
  return a.times_eps(-e) * (Rat(1) / c);
}

Rat bernoulli_poly(int n, const Rat& x, const std::vector<Rat>& b) {
  Rat s = 0;
  Rat xp = 1;
  for (int k = n; k >= 0; --k) {
    s += binomial(n, static_cast<unsigned>(k)) * b[static_cast<std::size_t>(k)] * xp;
    xp *= x;
  }
  return s;
}

}  // namespace

ZSeries phi_series(long c, int order) {
  ZSeries s(-1, order);
  const Rat cc(c);
  Rat cp = cc * cc;
  for (int m = 1; m <= order; ++m) {
    Rat v = cp / Rat(static_cast<long>(m) * (m + 1));
    if (m % 2 == 0) v = -v;
    s.set_coeff(-m, EpsLaurent(v));
    cp *= cc;
  }
  return s;
}

ZSeries prefactor_ratio(int sigma, long c, int order) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
  if (c == 0) return ZSeries::constant(EpsLaurent(1L), order);
  const ZSeries e = series_exp(phi_series(c, order) * EpsLaurent(static_cast<long>(sigma)));
  const int k = static_cast<int>(sigma * c);
  return e.shifted_degree(k) * eps_power(k);
}

WaveExpansion wave_shift(const WaveExpansion& w, long c) {
  if (c == 0) return w;
  const int extra = std::max(w.h.top(), 0);
  const int M = w.h.order() >= kUnbounded ? kUnbounded : w.h.order() + extra;
  if (M >= kUnbounded) throw std::invalid_argument("wave_shift needs a truncated series");
  const ZSeries shifted = argument_shift(w.h, c);
  return {w.sigma, (prefactor_ratio(w.sigma, c, M) * shifted).tightened()};
}

namespace {

ZSeries linear_operator(int sigma, const ZSeries& h, int work) {
  const ZSeries up = prefactor_ratio(sigma, 1, work) * argument_shift(h, 1, work);
  const ZSeries down = prefactor_ratio(sigma, -1, work) * argument_shift(h, -1, work);
  ZSeries coeff(1, kUnbounded);
  coeff.set_coeff(1, eps_power(1));
  coeff.set_coeff(0, EpsLaurent::monomial(1, Rat(sigma, 2)));
  return up + down - coeff * h;
}

}  // namespace

ZSeries difference_residual(const WaveExpansion& w) {
  return linear_operator(w.sigma, w.h, w.h.order());
}

WaveExpansion solve_formal_wave(int sigma, int order) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
  if (order < 0) throw std::invalid_argument("solve_formal_wave: order must be nonnegative");
  const int work = order + 2;
  std::vector<ZSeries> col;
  col.reserve(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j)
    col.push_back(linear_operator(sigma, ZSeries::monomial(-j, EpsLaurent(1L), work), work));

  ZSeries h(0, order);
  h.set_coeff(0, EpsLaurent(1L));
  ZSeries r = col[0];
  for (int j = 1; j <= order; ++j) {
    const EpsLaurent pivot = col[static_cast<std::size_t>(j)].coeff(-j);
    const EpsLaurent a = -divide_by_monomial(r.coeff(-j), pivot);
    h.set_coeff(-j, a);
    r = r + col[static_cast<std::size_t>(j)] * a;
  }
  for (int d = r.top(); d >= -order; --d)
    if (!r.coeff(d).is_zero())
      throw ConsistencyError("solve_formal_wave: residual survives at z^" + std::to_string(d));
  return {sigma, h};
}

WaveExpansion stirling_g_oracle(int order) {
  if (order < 0) throw std::invalid_argument("stirling_g_oracle: order must be nonnegative");
  const auto bern = bernoulli_numbers(order + 2);
  ZSeries total(0, order);
  for (int m = 0; m <= order; ++m) {
    // log S_a = sum_k (-1)^(k+1) B_(k+1)(a) / (k (k+1) z^k),  a = 1/2 + m.
    const Rat a = Rat(1, 2) + Rat(m);
    ZSeries neg_log_s(-1, order);
    for (int k = 1; k <= order; ++k) {
      Rat v = bernoulli_poly(k + 1, a, bern) / Rat(static_cast<long>(k) * (k + 1));
      if (k % 2 == 0) v = -v;
      neg_log_s.set_coeff(-k, EpsLaurent(-v));
    }
    Rat c = Rat(1) / factorial(static_cast<unsigned>(m));
    if (m % 2) c = -c;
    const ZSeries term = series_exp(neg_log_s).shifted_degree(-m) * EpsLaurent::monomial(-2 * m, c);
    total = total + term.truncated(order);
  }
  return {-1, total};
}

WaveData wave_data(int order) {
  WaveData w;
  w.order = order;
  const WaveExpansion f = solve_formal_wave(1, order);
  const WaveExpansion g = solve_formal_wave(-1, order);
  w.A = f.h;
  w.B = g.h;
  w.At = wave_shift(f, -1).h;
  w.Bt = wave_shift(g, 1).h;
  return w;
}

ZSeries wronskian(const WaveData& w) { return w.A * w.B - w.At * w.Bt; }

MultiSeries kernel_Khat(int order) {
  const WaveData w = wave_data(order);
  return MultiSeries::embed(w.A, 0, 2) * MultiSeries::embed(w.B, 1, 2) -
         MultiSeries::embed(w.At, 0, 2) * MultiSeries::embed(w.Bt, 1, 2);
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
  RMatrix p;
  p.order = std::min(order, o.order);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      p.r[i][j] = r[i][0] * o.r[0][j] + r[i][1] * o.r[1][j];
  return p;
}

RMatrix r_matrix(int order) {
  const WaveData w = wave_data(order);
  RMatrix m;
  m.order = order;
  m.r[0][0] = w.B * w.A;
  m.r[0][1] = -(w.B * w.At);
  m.r[1][0] = w.Bt * w.A;
  m.r[1][1] = -(w.Bt * w.At);
  return m;
}

LogSeries s1_logseries(const WaveData& w) {
  const ZSeries one = ZSeries::constant(EpsLaurent(1L));
  const ZSeries zero;
  const LogSeries db = logseries_derivative({w.B, zero}) - LogSeries{zero, w.B};
  const LogSeries dbt = logseries_derivative({w.Bt, zero}) - LogSeries{zero, w.Bt};
  const LogSeries sum = w.A * db - w.At * dbt + LogSeries{zero, one};
  const EpsLaurent inv_eps = eps_power(-1);
  return {sum.plain * inv_eps, sum.logpart * inv_eps};
}

ZSeries s1_series(const WaveData& w) {
  const LogSeries s = s1_logseries(w);
  if (!s.logpart.is_zero_on_window()) throw ConsistencyError("s1_series: log(eps z) part does not cancel");
  return s.plain;
}

ZSeries s1_series(int order) {
  if (order < 2) throw std::invalid_argument("s1_series: order must be at least 2");
  return s1_series(wave_data(order));
}

}  // namespace gwp1
