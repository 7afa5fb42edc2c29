#include "gwp1/zseries.hpp"

#include <stdexcept>
#include <string>

#include "gwp1/errors.hpp"

namespace gwp1 {

namespace {

const EpsLaurent& zero_coeff() {
  static const EpsLaurent z;
  return z;
}

int finite_or(int order, int cap) { return std::min(order, cap); }

bool has_negative_part(const ZSeries& a) {
  for (int d = std::min(a.top(), -1); d >= a.low(); --d)
    if (!a.coeff(d).is_zero()) return true;
  return false;
}

void require_no_nonnegative_part(const ZSeries& a, const char* what) {
  for (int d = a.top(); d >= 0; --d)
    if (d >= a.low() && !a.coeff(d).is_zero())
      throw std::invalid_argument(std::string(what) + ": input has a constant or positive part");
}

}  // namespace

ZSeries::ZSeries(int top, int order) : top_(top), order_(std::min(order, kUnbounded)) {}

ZSeries ZSeries::constant(const EpsLaurent& c, int order) { return monomial(0, c, order); }

ZSeries ZSeries::monomial(int degree, const EpsLaurent& c, int order) {
  ZSeries s(degree, order);
  if (s.in_window(degree)) s.set_coeff(degree, c);
  return s;
}

ZSeries ZSeries::from_descending(int top, const std::vector<EpsLaurent>& coeffs, int order) {
  ZSeries s(top, order);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int d = top - static_cast<int>(i);
    if (!s.in_window(d)) break;
    s.set_coeff(d, coeffs[i]);
  }
  return s;
}

const EpsLaurent& ZSeries::coeff(int d) const {
  if (d < -order_)
    throw TruncationError("coefficient of z^" + std::to_string(d) + " lies below the truncation order " +
                              std::to_string(order_),
                          -d);
  if (d > top_ || d < low()) return zero_coeff();
  return c_[static_cast<std::size_t>(top_ - d)];
}

void ZSeries::set_coeff(int d, EpsLaurent c) {
  if (!in_window(d)) throw std::out_of_range("set_coeff outside the series window");
  const auto i = static_cast<std::size_t>(top_ - d);
  if (i >= c_.size()) {
    if (c.is_zero()) return;
    c_.resize(i + 1);
  }
  c_[i] = std::move(c);
}

void ZSeries::add_coeff(int d, const EpsLaurent& c) {
  if (c.is_zero()) return;
  if (!in_window(d)) throw std::out_of_range("add_coeff outside the series window");
  const auto i = static_cast<std::size_t>(top_ - d);
  if (i >= c_.size()) c_.resize(i + 1);
  c_[i] += c;
}

void ZSeries::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZSeries ZSeries::operator-() const {
  ZSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
  ZSeries r(std::max(a.top_, b.top_), std::min(a.order_, b.order_));
  for (int d = a.top_; d >= a.low(); --d)
    if (r.in_window(d)) r.add_coeff(d, a.coeff(d));
  for (int d = b.top_; d >= b.low(); --d)
    if (r.in_window(d)) r.add_coeff(d, b.coeff(d));
  r.trim();
  return r;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  ZSeries r(a.top_ + b.top_, std::min(window_sub(a.order_, b.top_), window_sub(b.order_, a.top_)));
  const int floor = -r.order_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const int da = a.top_ - static_cast<int>(i);
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      const int d = da + b.top_ - static_cast<int>(j);
      if (d < floor) break;
      if (b.c_[j].is_zero()) continue;
      const auto k = static_cast<std::size_t>(r.top_ - d);
      if (k >= r.c_.size()) r.c_.resize(k + 1);
      r.c_[k].add_product(a.c_[i], b.c_[j]);
    }
  }
  r.trim();
  return r;
}

ZSeries operator*(const ZSeries& a, const EpsLaurent& c) {
  ZSeries r(a);
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

ZSeries ZSeries::shifted_degree(int k) const {
  ZSeries r(*this);
  r.top_ += k;
  r.order_ = window_sub(order_, k);
  return r;
}

ZSeries ZSeries::truncated(int order) const {
  ZSeries r(*this);
  r.order_ = std::min(order_, order);
  const long keep = static_cast<long>(r.top_) + r.order_ + 1;
  if (keep < static_cast<long>(r.c_.size())) r.c_.resize(static_cast<std::size_t>(std::max(0L, keep)));
  r.trim();
  return r;
}

ZSeries ZSeries::tightened() const {
  ZSeries r(*this);
  std::size_t drop = 0;
  while (drop < r.c_.size() && r.c_[drop].is_zero() && r.top_ - static_cast<int>(drop) - 1 >= -r.order_) ++drop;
  r.c_.erase(r.c_.begin(), r.c_.begin() + static_cast<long>(drop));
  r.top_ -= static_cast<int>(drop);
  return r;
}

bool ZSeries::is_zero_on_window() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool equal_on_common_window(const ZSeries& a, const ZSeries& b) {
  const int floor = -std::min(a.order(), b.order());
  const int lo = std::max(floor, std::min(a.low(), b.low()));
  for (int d = std::max(a.top(), b.top()); d >= lo; --d)
    if (a.coeff(d) != b.coeff(d)) return false;
  return true;
}

ZSeries series_invert(const ZSeries& a, int order_cap) {
  const ZSeries t = a.tightened();
  if (t.top() != 0 || !t.coeff(0).is_one())
    throw std::invalid_argument("series_invert: constant term must be exactly 1");
  const int M = finite_or(a.order(), order_cap);
  if (M >= kUnbounded && has_negative_part(a))
    throw std::invalid_argument("series_invert: exact input with a tail needs an order cap");
  if (M >= kUnbounded) return ZSeries::constant(EpsLaurent(1L));
  ZSeries r(0, M);
  r.set_coeff(0, EpsLaurent(1L));
  for (int n = 1; n <= M; ++n) {
    EpsLaurent acc;
    for (int i = 1; i <= n; ++i) {
      if (-i < a.low()) break;
      const EpsLaurent& ai = a.coeff(-i);
      if (ai.is_zero()) continue;
      acc.add_product(ai, r.coeff(-(n - i)));
    }
    r.set_coeff(-n, -acc);
  }
  return r;
}

ZSeries argument_shift(const ZSeries& a, long c, int order_cap) {
  const int M = finite_or(a.order(), order_cap);
  if (M >= kUnbounded && has_negative_part(a))
    throw std::invalid_argument("argument_shift: exact input with negative powers needs an order cap");
  ZSeries r(a.top(), M);
  const Rat cc(c);
  for (int d = a.top(); d >= a.low() && d >= -M; --d) {
    const EpsLaurent& ad = a.coeff(d);
    if (ad.is_zero()) continue;
    Rat cpow(1);
    for (long j = 0;; ++j) {
      const long e = d - j;
      if (d >= 0 && j > d) break;
      if (e < -M) break;
      r.add_coeff(static_cast<int>(e), ad * (binomial(d, static_cast<unsigned>(j)) * cpow));
      cpow *= cc;
      if (c == 0) break;
    }
  }
  return r;
}

ZSeries series_exp(const ZSeries& a, int order_cap) {
  require_no_nonnegative_part(a, "series_exp");
  const int M = finite_or(a.order(), order_cap);
  if (M >= kUnbounded) {
    if (has_negative_part(a)) throw std::invalid_argument("series_exp: exact input with a tail needs an order cap");
    return ZSeries::constant(EpsLaurent(1L));
  }
  // In w = 1/z: n e_n = sum_k k a_k e_{n-k}.
  ZSeries r(0, M);
  r.set_coeff(0, EpsLaurent(1L));
  for (int n = 1; n <= M; ++n) {
    EpsLaurent acc;
    for (int k = 1; k <= n; ++k) {
      if (-k < a.low()) break;
      const EpsLaurent& ak = a.coeff(-k);
      if (ak.is_zero()) continue;
      acc.add_product(ak * Rat(k), r.coeff(-(n - k)));
    }
    r.set_coeff(-n, acc * Rat(1, n));
  }
  return r;
}

ZSeries series_log1p(const ZSeries& a, int order_cap) {
  require_no_nonnegative_part(a, "series_log1p");
  const int M = finite_or(a.order(), order_cap);
  if (M >= kUnbounded && has_negative_part(a))
    throw std::invalid_argument("series_log1p: exact input with a tail needs an order cap");
  if (M >= kUnbounded) return ZSeries();
  // (1 + a) l' = a'  gives  n l_n = n a_n - sum_{k<n} k l_k a_{n-k}.
  ZSeries r(-1, M);
  for (int n = 1; n <= M; ++n) {
    EpsLaurent acc = a.coeff(-n) * Rat(n);
    for (int k = 1; k < n; ++k) {
      const EpsLaurent& lk = r.coeff(-k);
      if (lk.is_zero()) continue;
      acc -= (lk * Rat(k)) * a.coeff(-(n - k));
    }
    r.set_coeff(-n, acc * Rat(1, n));
  }
  return r;
}

ZSeries derivative(const ZSeries& a) {
  ZSeries r(a.top() - 1, window_sub(a.order(), -1));
  for (int d = a.top(); d >= a.low(); --d) {
    if (d == 0 || d < -a.order()) continue;
    const EpsLaurent& ad = a.coeff(d);
    if (!ad.is_zero()) r.set_coeff(d - 1, ad * Rat(d));
  }
  return r;
}

EpsLaurent residue_at_infinity(const ZSeries& a) { return -a.coeff(-1); }

LogSeries logseries_derivative(const LogSeries& a) {
  return {derivative(a.plain) + a.logpart.shifted_degree(-1), derivative(a.logpart)};
}

}  // namespace gwp1
