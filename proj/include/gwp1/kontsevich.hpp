#pragma once

#include <optional>
#include <vector>

#include "gwp1/symmetric.hpp"
#include "gwp1/wave.hpp"

namespace gwp1 {

/// Column k of the determinant: ε^-(k-1) (εz/e)^-z f(z + k - 1), monic of degree k - 1.
ZSeries zmodel_entry(int k, int order);
ZSeries zmodel_entry(const WaveExpansion& f, int k);

/// det[col_k(z_j)] over all monomials of total degree >= min_total.
/// Rows are expanded in `row_order` (default 0..N-1).
MultiSeries column_determinant(const std::vector<ZSeries>& columns, int min_total,
                               const std::vector<int>& row_order = {});

struct ZModelExpansion {
  int N = 0;
  int D = 0;
  MultiSeries numerator{1};
  MultiSeries quotient{1};
  std::optional<MiwaPolynomial> miwa;
};

/// The determinant over the Vandermonde, to total degree -D. Requires N > D.
ZModelExpansion zmodel_expansion(int N, int D);

/// log of the expansion in scaled Miwa times, graded to degree D.
MiwaPolynomial zmodel_log_in_times(int N, int D);

struct StabilizationReport {
  bool ok = false;
  MiwaPolynomial smaller;
  MiwaPolynomial larger;
  std::vector<MiwaPolynomial::Monomial> differing;
};

/// Compares N = D + 1 against N = D + 2.
StabilizationReport stabilization_check(int D);

/// Column k of the characteristic matrix at series level.
ZSeries characteristic_entry(const WaveData& w, int k);

struct CharDetReport {
  bool ok = false;
  MultiSeries det_g{1};
  MultiSeries det_ghat{1};
};

/// det G_N = det of the shifted-f columns, on total degree >= N(N-1)/2 - order.
CharDetReport characteristic_det_check(int N, int order);

}  // namespace gwp1
