#pragma once

#include <array>

#include "gwp1/multiseries.hpp"
#include "gwp1/zseries.hpp"

namespace gwp1 {

/// (εz/e)^(sigma z) h(z).
struct WaveExpansion {
  int sigma = 1;
  ZSeries h;
};

/// (z + c) log(1 + c/z) - c as a series in 1/z.
ZSeries phi_series(long c, int order);

/// (ε(z+c)/e)^(σ(z+c)) / (εz/e)^(σz) = ((εz)^c exp(phi_c))^σ.
ZSeries prefactor_ratio(int sigma, long c, int order);

/// Formal solution (εz/e)^(σz)(1 + a_1/z + ... + a_M/z^M) of
/// y(z+1) + y(z-1) = ε(z + σ/2) y(z).
WaveExpansion solve_formal_wave(int sigma, int order);

/// The σ = -1 expansion from the Bessel series of g(z-1) and Stirling's series.
WaveExpansion stirling_g_oracle(int order);

/// z -> w(z + c), re-expressed over the base (εz/e)^(σz).
WaveExpansion wave_shift(const WaveExpansion& w, long c);

/// Residual y(z+1) + y(z-1) - ε(z + σ/2) y(z) with the prefactor stripped.
ZSeries difference_residual(const WaveExpansion& w);

/// The four normalized series: A from f(z), At from f(z-1), B from g(z-1), Bt from g(z).
struct WaveData {
  int order = 0;
  ZSeries A, At, B, Bt;
};

WaveData wave_data(int order);

/// A(z)B(z) - At(z)Bt(z); identically 1.
ZSeries wronskian(const WaveData& w);

/// K(z,w) = A(z)B(w) - At(z)Bt(w) in variables (z, w) = (z_0, z_1).
MultiSeries kernel_Khat(int order);

struct RMatrix {
  std::array<std::array<ZSeries, 2>, 2> r;
  int order = 0;
  ZSeries trace() const { return r[0][0] + r[1][1]; }
  ZSeries det() const { return r[0][0] * r[1][1] - r[0][1] * r[1][0]; }
  RMatrix operator*(const RMatrix& o) const;
};

/// column(B, Bt) * row(A, -At).
RMatrix r_matrix(int order);

/// The bracket A(B' - log B) - At(Bt' - log Bt) + log, divided by ε.
LogSeries s1_logseries(const WaveData& w);

/// S1 = (A B' - At Bt') / ε. Throws ConsistencyError if the log part survives.
ZSeries s1_series(int order);
ZSeries s1_series(const WaveData& w);

}  // namespace gwp1
