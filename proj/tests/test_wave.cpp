#include "doctest.h"
#include "gwp1/wave.hpp"

using namespace gwp1;

namespace {

EpsLaurent eps_poly(std::initializer_list<std::pair<int, Rat>> terms) {
  EpsLaurent p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

bool zero_to_order(const ZSeries& s, int order) { return s.order() >= order && s.is_zero_on_window(); }

}  // namespace

TEST_CASE("leading coefficients of the f expansion") {
  const WaveExpansion f = solve_formal_wave(1, 3);
  CHECK(f.sigma == 1);
  CHECK(f.h.coeff(0) == EpsLaurent(1L));
  CHECK(f.h.coeff(-1) == eps_poly({{-2, Rat(1)}, {0, Rat(-1, 24)}}));
  CHECK(f.h.coeff(-2) == eps_poly({{-4, Rat(1, 2)}, {-2, Rat(11, 24)}, {0, Rat(1, 1152)}}));
  CHECK(f.h.coeff(-3) == eps_poly({{-6, Rat(1, 6)}, {-4, Rat(47, 48)}, {-2, Rat(265, 1152)}, {0, Rat(1003, 414720)}}));
  CHECK(solve_formal_wave(1, 0).h.coeff(0) == EpsLaurent(1L));
}

TEST_CASE("the sigma = -1 solution agrees with the Bessel/Stirling oracle") {
  for (int M = 0; M <= 8; ++M) {
    const WaveExpansion g = solve_formal_wave(-1, M);
    const WaveExpansion o = stirling_g_oracle(M);
    for (int j = 0; j <= M; ++j) CHECK(g.h.coeff(-j) == o.h.coeff(-j));
  }
}

TEST_CASE("difference equation residuals vanish") {
  for (int sigma : {1, -1}) {
    const WaveExpansion w = solve_formal_wave(sigma, 6);
    const ZSeries r = difference_residual(w);
    CHECK(r.is_zero_on_window());
  }
}

TEST_CASE("wave_shift") {
  const WaveExpansion f = solve_formal_wave(1, 5);
  const WaveExpansion f1 = wave_shift(f, 1);
  CHECK(f1.h.top() == 1);
  CHECK(f1.h.coeff(1) == EpsLaurent::monomial(1));
  const WaveExpansion f2 = wave_shift(f, 2);
  CHECK(f2.h.coeff(2) == EpsLaurent::monomial(2));
  const WaveExpansion f0 = wave_shift(f, 0);
  CHECK(equal_on_common_window(f0.h, f.h));
  CHECK(f0.h.order() == f.h.order());
  const WaveExpansion back = wave_shift(f1, -1);
  CHECK(equal_on_common_window(back.h, f.h));
}

TEST_CASE("phi series and prefactor ratio") {
  const ZSeries phi = phi_series(1, 4);
  CHECK(phi.coeff(0).is_zero());
  CHECK(phi.coeff(-1) == EpsLaurent(Rat(1, 2)));
  CHECK(phi.coeff(-2) == EpsLaurent(Rat(-1, 6)));
  CHECK(phi.coeff(-3) == EpsLaurent(Rat(1, 12)));
  // (z - 1) log(1 - 1/z) + 1 = 1/(2z) + 1/(6z^2) + ...
  const ZSeries phim = phi_series(-1, 3);
  CHECK(phim.coeff(-1) == EpsLaurent(Rat(1, 2)));
  CHECK(phim.coeff(-2) == EpsLaurent(Rat(1, 6)));
  const ZSeries pr = prefactor_ratio(1, 1, 4);
  CHECK(pr.coeff(1) == EpsLaurent::monomial(1));
  CHECK(pr.coeff(0) == EpsLaurent::monomial(1, Rat(1, 2)));
  const ZSeries prm = prefactor_ratio(-1, 1, 4);
  CHECK(prm.coeff(-1) == EpsLaurent::monomial(-1));
  CHECK(prm.coeff(-2) == EpsLaurent::monomial(-1, Rat(-1, 2)));
}

TEST_CASE("wave data satisfies the Wronskian identity") {
  const WaveData w = wave_data(8);
  CHECK(w.order == 8);
  const ZSeries wr = wronskian(w);
  CHECK(wr.coeff(0) == EpsLaurent(1L));
  CHECK(zero_to_order(wr - ZSeries::constant(EpsLaurent(1L)), 8));
}

TEST_CASE("projector identities") {
  const int M = 8;
  const RMatrix R = r_matrix(M);
  CHECK(zero_to_order(R.trace() - ZSeries::constant(EpsLaurent(1L)), M));
  CHECK(zero_to_order(R.det(), M));
  const RMatrix R2 = R * R;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(zero_to_order(R2.r[i][j] - R.r[i][j], M));
}

TEST_CASE("kernel restricted to the diagonal is 1") {
  const int M = 6;
  const MultiSeries K = kernel_Khat(M);
  std::map<int, EpsLaurent> diag;
  for (const auto& [e, c] : K.terms())
    if (e[0] >= -M && e[1] >= -M) diag[e[0] + e[1]] += c;
  for (const auto& [d, c] : diag)
    if (d >= -M) CHECK(c == (d == 0 ? EpsLaurent(1L) : EpsLaurent()));
}

TEST_CASE("S1 has no logarithmic part") {
  const LogSeries s = s1_logseries(wave_data(8));
  CHECK(zero_to_order(s.logpart, 8));
  const ZSeries s1 = s1_series(6);
  CHECK(equal_on_common_window(s1, s.plain));
}
