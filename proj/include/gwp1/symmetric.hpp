#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwp1/eps_laurent.hpp"
#include "gwp1/multiseries.hpp"

namespace gwp1 {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  /// Product of factorials of part multiplicities.
  Rat multiplicity_factorial() const;
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

/// All partitions of `w`, largest first part first.
std::vector<Partition> partitions_of(int w);

/// Polynomial in Miwa times with EpsLaurent coefficients.
///
/// A monomial is the sorted list of time indices, e.g. {0, 0, 2} is t0^2 t2.
/// `scaled` selects t_k (grading k + 1) over T_k (grading k).
class MiwaPolynomial {
 public:
  using Monomial = std::vector<int>;

  MiwaPolynomial(bool scaled = true, int degree_bound = 0) : scaled_(scaled), degree_bound_(degree_bound) {}

  bool scaled() const { return scaled_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<Monomial, EpsLaurent>& terms() const { return terms_; }

  int degree(const Monomial& m) const;
  void add(Monomial m, const EpsLaurent& c);
  EpsLaurent coeff(Monomial m) const;
  /// Terms of degree <= d only.
  MiwaPolynomial graded_to(int d) const;

  friend bool operator==(const MiwaPolynomial& a, const MiwaPolynomial& b) {
    return a.scaled_ == b.scaled_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MiwaPolynomial& a, const MiwaPolynomial& b) { return !(a == b); }

  /// "(eps^-2 - 1/24)*t0 + ..." in monomial order.
  std::string to_string() const;

 private:
  bool scaled_;
  int degree_bound_;
  std::map<Monomial, EpsLaurent> terms_;
};

/// Monomials present in `a` or `b` whose coefficients differ.
std::vector<MiwaPolynomial::Monomial> miwa_difference(const MiwaPolynomial& a, const MiwaPolynomial& b);

/// Rewrites a symmetric series in z_j^-1 of total degree >= -D in power sums,
/// then substitutes p_{k+1} = eps^k t_k / k! (eps_scaling) or p_k = k T_k.
/// Requires nvars > D.
MiwaPolynomial symmetric_to_miwa(const MultiSeries& sym, int D, bool eps_scaling = true);

/// Back-substitution: the symmetric polynomial in z_j^-1 for `n` variables.
MultiSeries miwa_to_symmetric(const MiwaPolynomial& poly, int n, std::vector<int> region = {});

}  // namespace gwp1
