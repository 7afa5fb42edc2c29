#pragma once

#include <vector>

#include "gwp1/eps_laurent.hpp"
#include "gwp1/window.hpp"

namespace gwp1 {

/// Truncated Laurent series in z with EpsLaurent coefficients.
///
/// Coefficients of z^d are known exactly for -order <= d <= top and are zero
/// above `top`. `order == kUnbounded` marks an exact (finite) series.
class ZSeries {
 public:
  ZSeries() = default;
  ZSeries(int top, int order);

  static ZSeries constant(const EpsLaurent& c, int order = kUnbounded);
  static ZSeries monomial(int degree, const EpsLaurent& c, int order = kUnbounded);
  /// 1 + c1/z + c2/z^2 + ... from the list {1, c1, c2, ...}; order = size - 1.
  static ZSeries from_descending(int top, const std::vector<EpsLaurent>& coeffs, int order);

  int top() const { return top_; }
  int order() const { return order_; }
  bool exact() const { return order_ >= kUnbounded; }
  /// Lowest degree that carries a stored (possibly zero) slot.
  int low() const { return top_ - static_cast<int>(c_.size()) + 1; }
  bool in_window(int d) const { return d <= top_ && d >= -order_; }

  /// Coefficient of z^d. Throws TruncationError when d < -order.
  const EpsLaurent& coeff(int d) const;
  void set_coeff(int d, EpsLaurent c);
  void add_coeff(int d, const EpsLaurent& c);

  ZSeries operator-() const;
  friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const ZSeries& a, const EpsLaurent& c);
  friend ZSeries operator*(const EpsLaurent& c, const ZSeries& a) { return a * c; }

  /// Multiply by z^k.
  ZSeries shifted_degree(int k) const;
  /// Narrow the window to `order` (never widens).
  ZSeries truncated(int order) const;
  /// Lower the declared top when the leading coefficients vanish.
  ZSeries tightened() const;

  /// All known coefficients vanish.
  bool is_zero_on_window() const;

 private:
  void trim();
  int top_ = 0;
  int order_ = kUnbounded;
  std::vector<EpsLaurent> c_;  // c_[i] is the coefficient of z^(top_ - i)
};

/// True when the coefficients agree wherever both windows are valid.
bool equal_on_common_window(const ZSeries& a, const ZSeries& b);

/// 1/a for a series with top 0 and constant term 1. An exact input needs
/// `order_cap`; the result order is min(a.order(), order_cap).
ZSeries series_invert(const ZSeries& a, int order_cap = kUnbounded);

/// z -> a(z + c), expanded binomially. The order is preserved; exact inputs
/// with negative powers are cut at `order_cap`.
ZSeries argument_shift(const ZSeries& a, long c, int order_cap = kUnbounded);

/// exp(a) for a with top <= -1.
ZSeries series_exp(const ZSeries& a, int order_cap = kUnbounded);

/// log(1 + a) for a with top <= -1.
ZSeries series_log1p(const ZSeries& a, int order_cap = kUnbounded);

/// Termwise d/dz.
ZSeries derivative(const ZSeries& a);

/// Formal residue at infinity: minus the z^-1 coefficient.
EpsLaurent residue_at_infinity(const ZSeries& a);

/// P + Q log(εz), with log(εz) kept as an opaque symbol.
struct LogSeries {
  ZSeries plain;
  ZSeries logpart;

  friend LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    return {a.plain + b.plain, a.logpart + b.logpart};
  }
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b) {
    return {a.plain - b.plain, a.logpart - b.logpart};
  }
  friend LogSeries operator*(const ZSeries& s, const LogSeries& a) { return {s * a.plain, s * a.logpart}; }
};

/// d/dz(P + Q log(εz)) = (P' + Q/z) + Q' log(εz).
LogSeries logseries_derivative(const LogSeries& a);

}  // namespace gwp1
