#include "gwp1/kontsevich.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gwp1/errors.hpp"

namespace gwp1 {

ZSeries zmodel_entry(const WaveExpansion& f, int k) {
  if (k < 1) throw std::invalid_argument("zmodel_entry: k must be at least 1");
  return wave_shift(f, k - 1).h * EpsLaurent::monomial(-(k - 1));
}

ZSeries zmodel_entry(int k, int order) { return zmodel_entry(solve_formal_wave(1, order), k); }

MultiSeries column_determinant(const std::vector<ZSeries>& columns, int min_total, const std::vector<int>& row_order_in) {
  const int N = static_cast<int>(columns.size());
  if (N < 1) throw std::invalid_argument("column_determinant: empty matrix");
  std::vector<int> row_order = row_order_in;
  if (row_order.empty()) {
    row_order.resize(static_cast<std::size_t>(N));
    std::iota(row_order.begin(), row_order.end(), 0);
  }
  const auto n = static_cast<std::size_t>(N);
  std::vector<int> tops(n);
  for (std::size_t k = 0; k < n; ++k) tops[k] = columns[k].top();
  const int top_sum = std::accumulate(tops.begin(), tops.end(), 0);

  std::vector<int> sorted_tops = tops;
  std::sort(sorted_tops.rbegin(), sorted_tops.rend());
  std::vector<int> floors(n, kUnbounded), ptops(n), vtops(n, sorted_tops.front());
  for (std::size_t r = 0; r < n; ++r) {
    ptops[r] = std::accumulate(sorted_tops.begin(), sorted_tops.begin() + static_cast<long>(r) + 1, 0);
  }
  floors[n - 1] = -min_total;
  MultiSeries det = MultiSeries::with_window(N, {}, floors, ptops, vtops);

  std::map<MultiSeries::Exps, EpsLaurent> acc;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    // Row j uses column perm[j]; its exponent is at least min_total - (other tops).
    std::vector<int> lowest(n);
    for (std::size_t j = 0; j < n; ++j) {
      const ZSeries& col = columns[static_cast<std::size_t>(perm[j])];
      lowest[j] = min_total - (top_sum - col.top());
      if (lowest[j] < -col.order())
        throw TruncationError("column_determinant: column " + std::to_string(perm[j] + 1) +
                                  " is truncated above the needed degree",
                              -lowest[j]);
    }
    MultiSeries::Exps e(n, 0);
    std::function<void(std::size_t, int, int, const EpsLaurent&)> rec = [&](std::size_t step, int partial,
                                                                           int remaining_top, const EpsLaurent& c) {
      if (step == n) {
        acc[e] += inversions % 2 ? -c : c;
        return;
      }
      const auto j = static_cast<std::size_t>(row_order[step]);
      const ZSeries& col = columns[static_cast<std::size_t>(perm[j])];
      const int rest = remaining_top - col.top();
      for (int d = col.top(); d >= std::max(lowest[j], col.low()); --d) {
        if (partial + d + rest < min_total) break;
        const EpsLaurent& x = col.coeff(d);
        if (x.is_zero()) continue;
        e[j] = d;
        rec(step + 1, partial + d, rest, c * x);
      }
      e[j] = 0;
    };
    rec(0, 0, top_sum, EpsLaurent(1L));
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& [e, c] : acc) det.add_term(e, c);
  return det;
}

ZModelExpansion zmodel_expansion(int N, int D) {
  if (D < 0) throw std::invalid_argument("zmodel_expansion: D must be nonnegative");
  if (N <= D) throw std::invalid_argument("zmodel_expansion: need N > D");
  const WaveExpansion f = solve_formal_wave(1, std::max(D, 1));
  std::vector<ZSeries> cols;
  for (int k = 1; k <= N; ++k) cols.push_back(zmodel_entry(f, k));
  ZModelExpansion z;
  z.N = N;
  z.D = D;
  z.numerator = column_determinant(cols, N * (N - 1) / 2 - D);
  std::vector<int> floors(static_cast<std::size_t>(N), kUnbounded);
  floors.back() = D;
  z.quotient = antisym_divide_vandermonde(z.numerator).truncated(floors);
  return z;
}

MiwaPolynomial zmodel_log_in_times(int N, int D) {
  ZModelExpansion z = zmodel_expansion(N, D);
  const MultiSeries one = MultiSeries::constant(EpsLaurent(1L), N);
  const MultiSeries u = z.quotient - one;
  const MultiSeries l = log1p(u, std::max(D, 1));
  return symmetric_to_miwa(l, D, true).graded_to(D);
}

StabilizationReport stabilization_check(int D) {
  if (D < 1) throw std::invalid_argument("stabilization_check: D must be at least 1");
  StabilizationReport r;
  r.smaller = zmodel_log_in_times(D + 1, D);
  r.larger = zmodel_log_in_times(D + 2, D);
  r.differing = miwa_difference(r.smaller, r.larger);
  r.ok = r.differing.empty();
  return r;
}

ZSeries characteristic_entry(const WaveData& w, int k) {
  if (k < 1) throw std::invalid_argument("characteristic_entry: k must be at least 1");
  ZSeries g;
  for (int m = 0; m <= k - 1; ++m) {
    const int p = k - 1 - m;
    const ZSeries term = w.A * w.B.coeff(-p) - w.At * w.Bt.coeff(-p);
    g = g + term.shifted_degree(m);
  }
  return g.tightened();
}

CharDetReport characteristic_det_check(int N, int order) {
  if (N < 1) throw std::invalid_argument("characteristic_det_check: N must be at least 1");
  if (order < 1) throw std::invalid_argument("characteristic_det_check: order must be at least 1");
  const int work = order + 1;
  const WaveData w = wave_data(work);
  const WaveExpansion f{1, w.A};
  std::vector<ZSeries> g, ghat;
  for (int k = 1; k <= N; ++k) {
    g.push_back(characteristic_entry(w, k));
    ghat.push_back(zmodel_entry(f, k));
  }
  const int min_total = N * (N - 1) / 2 - order;
  CharDetReport r;
  r.det_g = column_determinant(g, min_total);
  r.det_ghat = column_determinant(ghat, min_total);
  r.ok = r.det_g.terms() == r.det_ghat.terms();
  return r;
}

}  // namespace gwp1
