#pragma once

#include <mpfr.h>

#include <string>

#include "gwp1/rational.hpp"

namespace gwp1 {

/// Arbitrary-precision binary floating point (RAII over mpfr_t).
///
/// Every value carries its own precision in bits. Binary operations produce a
/// result at the larger of the two operand precisions; there is no global
/// precision state. All operations round to nearest.
class BigFloat {
 public:
  explicit BigFloat(long prec_bits = 128);
  BigFloat(long value, long prec_bits);
  BigFloat(double value, long prec_bits);
  BigFloat(const Rat& value, long prec_bits);
  static BigFloat from_string(const std::string& decimal, long prec_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy of this value rounded to `prec_bits`.
  BigFloat with_precision(long prec_bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 30) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

 private:
  void grow_to(long prec_bits);
  mpfr_t v_;
};

BigFloat const_pi(long prec_bits);
BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log2(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat ldexp(const BigFloat& x, long e);

/// |a - b| <= tol.
bool approx_equal(const BigFloat& a, const BigFloat& b, const BigFloat& tol);

/// Size of one unit in the last place of `x` at its own precision.
BigFloat ulp(const BigFloat& x);

}  // namespace gwp1
