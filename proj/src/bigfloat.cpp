#include "gwp1/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace gwp1 {

namespace {

mpfr_prec_t checked_prec(long p) {
  if (p < MPFR_PREC_MIN || p > 1L << 24) throw std::invalid_argument("BigFloat precision out of range");
  return static_cast<mpfr_prec_t>(p);
}

template <typename F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat::BigFloat(long prec_bits) {
  mpfr_init2(v_, checked_prec(prec_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long prec_bits) : BigFloat(prec_bits) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(double value, long prec_bits) : BigFloat(prec_bits) { mpfr_set_d(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rat& value, long prec_bits) : BigFloat(prec_bits) {
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_string(const std::string& decimal, long prec_bits) {
  BigFloat r(prec_bits);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("malformed number '" + decimal + "'");
  return r;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(long prec_bits) const {
  BigFloat r(prec_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

void BigFloat::grow_to(long prec_bits) {
  if (prec_bits > precision()) mpfr_prec_round(v_, checked_prec(prec_bits), MPFR_RNDN);
}

std::string BigFloat::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.is_zero()) throw std::domain_error("BigFloat division by zero");
  grow_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat const_pi(long prec_bits) {
  BigFloat r(prec_bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative BigFloat");
  return unary(x, mpfr_sqrt);
}

BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw std::domain_error("log of non-positive BigFloat");
  return unary(x, mpfr_log);
}

BigFloat log2(const BigFloat& x) {
  if (x.sign() <= 0) throw std::domain_error("log2 of non-positive BigFloat");
  return unary(x, mpfr_log2);
}

BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

bool approx_equal(const BigFloat& a, const BigFloat& b, const BigFloat& tol) { return abs(a - b) <= tol; }

BigFloat ulp(const BigFloat& x) {
  BigFloat r(x.precision());
  if (x.is_zero()) {
    mpfr_set_ui_2exp(r.get(), 1, mpfr_get_emin(), MPFR_RNDN);
    return r;
  }
  // For x in [2^(e-1), 2^e) one ulp is 2^(e - prec).
  mpfr_set_ui_2exp(r.get(), 1, mpfr_get_exp(x.get()) - x.precision(), MPFR_RNDN);
  return r;
}

}  // namespace gwp1
