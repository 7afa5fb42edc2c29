#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwp1/bigfloat.hpp"
#include "gwp1/rational.hpp"

namespace gwp1 {

/// Monic Charlier polynomial in x with parameter a, exact coefficients
/// (coeffs[i] multiplies x^i).
struct CharlierPolynomial {
  int ell = 0;
  Rat a;
  std::vector<Rat> coeffs;

  Rat operator()(const Rat& x) const;
  BigFloat operator()(const BigFloat& x) const;
};

CharlierPolynomial charlier_poly(int ell, const Rat& a);

/// pi_{n+1} = (x - n - a - 1/2) pi_n - a n pi_{n-1}, as an independent oracle.
CharlierPolynomial charlier_poly_recurrence(int ell, const Rat& a);

/// One numeric comparison.
struct NumericRow {
  std::string input;
  BigFloat value;
  BigFloat target;
  BigFloat abs_error;
  BigFloat bound;  // truncation bound on `value`, zero when not applicable
  bool ok = false;
};

/// sum_n pi_l(n+1/2) pi_l'(n+1/2) e^-a a^n / n! against a^l l! delta.
NumericRow charlier_orthogonality_check(int ell, int ell2, const Rat& a, const BigFloat& tol, long prec);

BigFloat gamma_real(const BigFloat& x, long prec);

/// J_nu(x) for x > 0 from its power series.
BigFloat bessel_j(const BigFloat& nu, const BigFloat& x, long prec);

/// (f(z), g(z)) with g = sqrt(2 pi/eps) J_{z+1/2}(2/eps) and
/// f = sqrt(pi/(2 eps)) J_{-z-1/2}(2/eps) / cos(pi z).
std::pair<BigFloat, BigFloat> numeric_f_g(const BigFloat& z, const BigFloat& eps, long prec);

/// |y(z+1) + y(z-1) - eps (z+1/2) y(z)| for y = f and y = g.
std::pair<BigFloat, BigFloat> numeric_difference_residuals(const BigFloat& z, const BigFloat& eps, long prec);

/// f(z) g(z-1) - f(z-1) g(z).
BigFloat numeric_wronskian(const BigFloat& z, const BigFloat& eps, long prec);

struct AsymptoticReport {
  BigFloat numeric;      // (eps z/e)^-z f(z)
  BigFloat formal;       // truncated series at z
  BigFloat abs_error;
  BigFloat rel_error;
  BigFloat abs_error_2z;
  BigFloat ratio;        // abs_error / abs_error_2z, near 2^(M+1)
};

AsymptoticReport asymptotic_match_check(const BigFloat& z, const Rat& eps, int order, long prec);

struct ScalingLimitReport {
  BigFloat target;
  std::vector<NumericRow> rows;  // one per L
  bool decreasing = false;
  std::vector<double> observed_rates;  // log2(err_i / err_{i+1}) / log2(L_{i+1} / L_i)
};

/// pi_{L+ell}(L + zeta; 1/(L eps^2)) / Gamma(L + zeta + 1/2) against
/// eps^(zeta-ell-1/2) J_{zeta-ell-1/2}(2/eps).
ScalingLimitReport charlier_scaling_limit_check(const BigFloat& zeta, int ell, const Rat& eps,
                                                const std::vector<int>& Ls, long prec);

/// det[pi_{L+k-1}(u_j)] / Delta(u).
BigFloat char_poly_expectation(int L, const Rat& a, const std::vector<BigFloat>& us, long prec);

struct BruteForceResult {
  BigFloat value;
  BigFloat bound;
  int n_max = 0;
};

/// Direct sum over the ensemble (L <= 2), truncated once the tail bound is below tol.
BruteForceResult brute_force_expectation(int L, const Rat& a, const std::vector<BigFloat>& us, const BigFloat& tol,
                                         long prec);

}  // namespace gwp1
