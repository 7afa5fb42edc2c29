#pragma once

#include <map>
#include <vector>

#include "gwp1/eps_laurent.hpp"
#include "gwp1/window.hpp"
#include "gwp1/zseries.hpp"

namespace gwp1 {

/// Truncated Laurent series in z_0 ... z_{n-1}, read in a fixed region
/// |z_{region[0]}| > |z_{region[1]}| > ...
///
/// Write P_r(e) for the sum of the exponents of the first r variables in
/// region order. A coefficient is known exactly when P_r(e) >= -floor[r-1]
/// for every r. Coefficients with P_r(e) > prefix_top[r-1] for some r, or
/// with e_v > var_top[v], are zero.
class MultiSeries {
 public:
  using Exps = std::vector<int>;

  /// Exact zero in `nvars` variables; an empty region means 0, 1, ..., n-1.
  explicit MultiSeries(int nvars, std::vector<int> region = {});

  static MultiSeries constant(const EpsLaurent& c, int nvars, std::vector<int> region = {});
  static MultiSeries monomial(const Exps& e, const EpsLaurent& c, std::vector<int> region = {});
  /// The univariate series `s` placed in variable `var`.
  static MultiSeries embed(const ZSeries& s, int var, int nvars, std::vector<int> region = {});
  /// Empty series with an explicitly declared window. The caller vouches for it.
  static MultiSeries with_window(int nvars, std::vector<int> region, std::vector<int> floors,
                                 std::vector<int> prefix_tops, std::vector<int> var_tops);

  int nvars() const { return n_; }
  const std::vector<int>& region() const { return region_; }
  const std::vector<int>& floors() const { return floors_; }
  const std::vector<int>& prefix_tops() const { return prefix_tops_; }
  const std::vector<int>& var_tops() const { return var_tops_; }
  const std::map<Exps, EpsLaurent>& terms() const { return terms_; }

  std::vector<int> prefix_sums(const Exps& e) const;
  bool in_window(const Exps& e) const;
  /// Throws TruncationError when `e` is outside the window.
  EpsLaurent coeff(const Exps& e) const;
  /// Adds into a coefficient that must lie inside the window.
  void add_term(const Exps& e, const EpsLaurent& c);

  MultiSeries operator-() const;
  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const MultiSeries& a, const EpsLaurent& c);

  /// Narrow floors to at most `floors` (entry-wise) and drop terms outside.
  MultiSeries truncated(const std::vector<int>& floors) const;
  /// Lowest total degree T for which every monomial of degree T is inside the window.
  int complete_total_degree() const;

  /// Coefficients agree under every adjacent transposition (times `sign`)
  /// wherever both monomials are known.
  bool is_symmetric(int sign = 1) const;

 private:
  void check_compatible(const MultiSeries& o) const;
  int n_;
  std::vector<int> region_;
  std::vector<int> floors_;
  std::vector<int> prefix_tops_;
  std::vector<int> var_tops_;
  std::map<Exps, EpsLaurent> terms_;
};

bool equal_on_common_window(const MultiSeries& a, const MultiSeries& b);

/// Expansion of 1/(z_i - z_j) valid in the region of `region`, m <= order - 1.
MultiSeries expand_inverse_difference(int i, int j, int nvars, const std::vector<int>& region, int order);

/// num / prod_{j<k} (z_k - z_j) on the complete total degrees of `num`.
/// Throws ConsistencyError on asymmetry or a nonzero remainder.
MultiSeries antisym_divide_vandermonde(const MultiSeries& num);

/// log(1 + u) for u whose terms all have negative total degree.
MultiSeries log1p(const MultiSeries& u, int max_power);

}  // namespace gwp1
