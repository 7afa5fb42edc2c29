#include "gwp1/invariants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gwp1/errors.hpp"

namespace gwp1 {

const WaveData& WaveCache::get(int order) {
  auto it = data_.find(order);
  if (it == data_.end()) it = data_.emplace(order, wave_data(order)).first;
  return it->second;
}

int default_order(const std::vector<int>& ks) {
  int m = static_cast<int>(ks.size());
  for (int k : ks) m += k + 2;
  return m;
}

namespace {

std::vector<int> identity_region(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

EpsLaurent weight(int k) { return EpsLaurent::monomial(k + 1, Rat(1) / factorial(static_cast<unsigned>(k + 1))); }

// Cyclic orders of 0..n-1 starting at 0.
std::vector<std::vector<int>> cycles(int n) {
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> c{0};
    c.insert(c.end(), rest.begin(), rest.end());
    out.push_back(std::move(c));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

MultiSeries cycle_denominator(const std::vector<int>& cyc, int n, const std::vector<int>& region,
                              const std::vector<int>& floors) {
  const int order = floors.back() + 1;
  MultiSeries d = MultiSeries::constant(EpsLaurent(1L), n, region);
  for (std::size_t a = 0; a < cyc.size(); ++a) {
    const int i = cyc[a];
    const int j = cyc[(a + 1) % cyc.size()];
    d = (d * expand_inverse_difference(i, j, n, region, order)).truncated(floors);
  }
  return d;
}

MultiSeries inverse_difference_squared(int n, const std::vector<int>& region, const std::vector<int>& floors) {
  const MultiSeries x = expand_inverse_difference(0, 1, n, region, floors.back() + 1);
  return (x * x).truncated(floors);
}

using Mat = std::array<std::array<EpsLaurent, 2>, 2>;

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r[i][j].add_product(a[i][0], b[0][j]);
      r[i][j].add_product(a[i][1], b[1][j]);
    }
  return r;
}

}  // namespace

std::vector<int> target_floors(const std::vector<int>& ks, const std::vector<int>& region) {
  std::vector<int> f(ks.size());
  int acc = 0;
  for (std::size_t r = 0; r < ks.size(); ++r) {
    acc += ks[static_cast<std::size_t>(region[r])] + 2;
    f[r] = acc;
  }
  return f;
}

InvariantRecord one_point_invariant(int k, int order) {
  if (k < 0) throw std::invalid_argument("one_point_invariant: k must be nonnegative");
  if (order <= 0) order = k + 3;
  const ZSeries s1 = s1_series(std::max(order, 2));
  if (s1.order() < k + 2)
    throw TruncationError("one_point_invariant: truncation order too small", k + 3);
  return {{k}, s1.coeff(-(k + 2)) * weight(k)};
}

EpsLaurent sn_coefficient(const WaveData& w, const std::vector<int>& ks, const std::vector<int>& region_in) {
  const int n = static_cast<int>(ks.size());
  if (n < 2) throw std::invalid_argument("sn_coefficient: need at least two points");
  const std::vector<int> region = region_in.empty() ? identity_region(n) : region_in;
  const std::vector<int> floors = target_floors(ks, region);
  std::vector<int> target(ks.size());
  for (std::size_t v = 0; v < ks.size(); ++v) target[v] = -(ks[v] + 2);

  // Per-variable factors U_pq = Y_p X_q with K(z,w) = sum_s X_s(z) Y_s(w).
  const std::array<std::array<ZSeries, 2>, 2> U = {{{w.B * w.A, w.B * w.At}, {-(w.Bt * w.A), -(w.Bt * w.At)}}};

  EpsLaurent total;
  for (const auto& cyc : cycles(n)) {
    const MultiSeries den = cycle_denominator(cyc, n, region, floors);
    for (const auto& [f, dc] : den.terms()) {
      bool ok = true;
      for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < target[v]) ok = false;
      if (!ok) continue;
      Mat prod{{{EpsLaurent(1L), EpsLaurent()}, {EpsLaurent(), EpsLaurent(1L)}}};
      for (int v : cyc) {
        const int g = target[static_cast<std::size_t>(v)] - f[static_cast<std::size_t>(v)];
        Mat u{{{U[0][0].coeff(g), U[0][1].coeff(g)}, {U[1][0].coeff(g), U[1][1].coeff(g)}}};
        prod = mat_mul(prod, u);
      }
      EpsLaurent tr = prod[0][0] + prod[1][1];
      total.add_product(tr, dc);
    }
  }
  EpsLaurent result = -total;
  if (n == 2) result -= inverse_difference_squared(n, region, floors).coeff(target);
  return result;
}

MultiSeries sn_series(const WaveData& w, int n, const std::vector<int>& floors, const std::vector<int>& region_in) {
  if (n < 2) throw std::invalid_argument("sn_series: need at least two points");
  const std::vector<int> region = region_in.empty() ? identity_region(n) : region_in;
  auto khat = [&](int i, int j) {
    return MultiSeries::embed(w.A, i, n, region) * MultiSeries::embed(w.B, j, n, region) -
           MultiSeries::embed(w.At, i, n, region) * MultiSeries::embed(w.Bt, j, n, region);
  };
  MultiSeries sum(n, region);
  for (const auto& cyc : cycles(n)) {
    MultiSeries term = cycle_denominator(cyc, n, region, floors);
    for (std::size_t a = 0; a < cyc.size(); ++a)
      term = (term * khat(cyc[a], cyc[(a + 1) % cyc.size()])).truncated(floors);
    sum = sum + term;
  }
  MultiSeries s = -sum;
  if (n == 2) s = s - inverse_difference_squared(n, region, floors);
  return s.truncated(floors);
}

InvariantRecord n_point_invariant(const std::vector<int>& ks, const InvariantOptions& opt, WaveCache* cache) {
  const int n = static_cast<int>(ks.size());
  if (n < 2) throw std::invalid_argument("n_point_invariant: need at least two points");
  for (int k : ks)
    if (k < 0) throw std::invalid_argument("n_point_invariant: indices must be nonnegative");
  WaveCache local;
  WaveCache& wc = cache ? *cache : local;
  const int order = opt.order > 0 ? opt.order : default_order(ks);

  // Each z_j carries eps^k_j / (k_j + 1)!; S_1 has its 1/eps built in.
  EpsLaurent w8 = EpsLaurent::monomial(-n);
  for (int k : ks) w8 *= weight(k);
  auto eval = [&](int m) { return sn_coefficient(wc.get(m), ks, opt.region) * w8; };

  EpsLaurent v = eval(order);
  if (opt.doubling_check) {
    const EpsLaurent v2 = eval(2 * order);
    if (v2 != v)
      throw ConsistencyError("n_point_invariant: value changes when the truncation order is doubled");
  }
  std::vector<int> sorted = ks;
  std::sort(sorted.begin(), sorted.end());
  return {sorted, v};
}

InvariantRecord invariant(const std::vector<int>& ks, const InvariantOptions& opt, WaveCache* cache) {
  if (ks.empty()) throw std::invalid_argument("invariant: ks must be nonempty");
  if (ks.size() == 1) {
    InvariantRecord r = one_point_invariant(ks[0], opt.order);
    if (opt.doubling_check) {
      const InvariantRecord r2 = one_point_invariant(ks[0], 2 * (opt.order > 0 ? opt.order : ks[0] + 3));
      if (r2.value != r.value)
        throw ConsistencyError("invariant: value changes when the truncation order is doubled");
    }
    return r;
  }
  return n_point_invariant(ks, opt, cache);
}

GenusDegreeTable invariant_by_genus(const InvariantRecord& rec) {
  GenusDegreeTable t;
  const int sum = std::accumulate(rec.ks.begin(), rec.ks.end(), 0);
  for (const auto& [e, c] : rec.value.terms()) {
    if (e % 2 != 0) throw ConsistencyError("invariant_by_genus: odd power of eps");
    if (sum % 2 != 0) throw ConsistencyError("invariant_by_genus: nonzero invariant with odd total index");
    const int g = (e + 2) / 2;
    const int d = sum / 2 + 1 - g;
    if (g < 0 || d < 0) throw ConsistencyError("invariant_by_genus: negative genus or degree");
    t.emplace(std::make_pair(g, d), c);
  }
  return t;
}

MiwaPolynomial free_energy(int D) {
  if (D < 1) throw std::invalid_argument("free_energy: D must be at least 1");
  MiwaPolynomial out(true, D);
  WaveCache cache;
  std::vector<int> ks;
  // Multisets k_1 <= ... <= k_n with sum(k + 1) <= D.
  std::function<void(int, int)> rec = [&](int min_k, int budget) {
    if (!ks.empty()) {
      const InvariantRecord r = invariant(ks, {}, &cache);
      Rat sym(1);
      std::size_t i = 0;
      while (i < ks.size()) {
        std::size_t j = i;
        while (j < ks.size() && ks[j] == ks[i]) ++j;
        sym *= factorial(static_cast<unsigned>(j - i));
        i = j;
      }
      out.add(ks, r.value * (Rat(1) / sym));
    }
    for (int k = min_k; k + 1 <= budget; ++k) {
      ks.push_back(k);
      rec(k, budget - (k + 1));
      ks.pop_back();
    }
  };
  rec(0, D);
  return out;
}

}  // namespace gwp1
