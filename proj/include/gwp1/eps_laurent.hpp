#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwp1/bigfloat.hpp"
#include "gwp1/rational.hpp"

namespace gwp1 {

/// Laurent polynomial in ε with rational coefficients.
/// Terms are kept sorted by exponent with no zero coefficients.
class EpsLaurent {
 public:
  using Term = std::pair<int, Rat>;

  EpsLaurent() = default;
  EpsLaurent(const Rat& c);  // NOLINT(google-explicit-constructor)
  EpsLaurent(long c) : EpsLaurent(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  static EpsLaurent monomial(int exponent, const Rat& c = Rat(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_one() const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;
  Rat coeff(int exponent) const;
  void add_term(int exponent, const Rat& c);

  EpsLaurent operator-() const;
  EpsLaurent& operator+=(const EpsLaurent& o);
  EpsLaurent& operator-=(const EpsLaurent& o);
  EpsLaurent& operator*=(const EpsLaurent& o);
  EpsLaurent& operator*=(const Rat& c);

  friend EpsLaurent operator+(EpsLaurent a, const EpsLaurent& b) { return a += b; }
  friend EpsLaurent operator-(EpsLaurent a, const EpsLaurent& b) { return a -= b; }
  friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b);
  friend EpsLaurent operator*(EpsLaurent a, const Rat& c) { return a *= c; }
  friend EpsLaurent operator*(const Rat& c, EpsLaurent a) { return a *= c; }
  friend bool operator==(const EpsLaurent& a, const EpsLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const EpsLaurent& a, const EpsLaurent& b) { return !(a == b); }

  /// Multiply by ε^k.
  EpsLaurent times_eps(int k) const;
  /// Add `a * b` into this without a temporary.
  void add_product(const EpsLaurent& a, const EpsLaurent& b);

  /// Human-readable form such as "eps^-2 - 1/24".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

EpsLaurent pow(const EpsLaurent& base, unsigned n);

/// Horner evaluation at `eps`; throws std::domain_error when eps is zero.
BigFloat eps_eval(const EpsLaurent& p, const BigFloat& eps);

}  // namespace gwp1
