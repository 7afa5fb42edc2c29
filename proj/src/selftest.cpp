#include "gwp1/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gwp1/charlier.hpp"
#include "gwp1/invariants.hpp"
#include "gwp1/kontsevich.hpp"
#include "gwp1/wave.hpp"

namespace gwp1 {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

EpsLaurent eps_poly(std::initializer_list<std::pair<int, Rat>> terms) {
  EpsLaurent p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

// Coefficients of (εz/e)^-z f(z) at z^-1, z^-2, z^-3.
EpsLaurent known_a1() { return eps_poly({{-2, Rat(1)}, {0, Rat(-1, 24)}}); }
EpsLaurent known_a2() { return eps_poly({{-4, Rat(1, 2)}, {-2, Rat(11, 24)}, {0, Rat(1, 1152)}}); }
EpsLaurent known_a3() {
  return eps_poly({{-6, Rat(1, 6)}, {-4, Rat(47, 48)}, {-2, Rat(265, 1152)}, {0, Rat(1003, 414720)}});
}
EpsLaurent known_a21() {
  return eps_poly({{-6, Rat(1, 2)}, {-4, Rat(23, 16)}, {-2, Rat(169, 384)}, {0, Rat(-1, 27648)}});
}

MiwaPolynomial known_free_energy_3() {
  MiwaPolynomial p(true, 3);
  p.add({0}, known_a1());
  p.add({0, 0}, EpsLaurent::monomial(-2, Rat(1, 2)));
  p.add({0, 0, 0}, EpsLaurent::monomial(-2, Rat(1, 6)));
  p.add({2}, eps_poly({{-2, Rat(1, 4)}, {0, Rat(1, 24)}, {2, Rat(7, 5760)}}));
  return p;
}

std::string fmt(const EpsLaurent& p) { return p.is_zero() ? "0" : p.to_string(); }

bool zero_to_order(const ZSeries& s, int order) { return s.order() >= order && s.is_zero_on_window(); }

Outcome check_wave_coefficients(const SelftestOptions&) {
  const WaveExpansion f = solve_formal_wave(1, 3);
  const bool ok = f.h.coeff(0) == EpsLaurent(1L) && f.h.coeff(-1) == known_a1() && f.h.coeff(-2) == known_a2() &&
                  f.h.coeff(-3) == known_a3();
  return {ok, "a1 = " + fmt(f.h.coeff(-1)) + "; a2 = " + fmt(f.h.coeff(-2)) + "; a3 = " + fmt(f.h.coeff(-3))};
}

Outcome check_stirling_oracle(const SelftestOptions&) {
  const WaveExpansion g = solve_formal_wave(-1, 8);
  const WaveExpansion o = stirling_g_oracle(8);
  int mismatches = 0;
  for (int j = 0; j <= 8; ++j)
    if (g.h.coeff(-j) != o.h.coeff(-j)) ++mismatches;
  return {mismatches == 0, std::to_string(9 - mismatches) + "/9 coefficients equal"};
}

Outcome check_one_point(const SelftestOptions&) {
  const EpsLaurent t0 = invariant({0}).value;
  const EpsLaurent t2 = invariant({2}).value;
  const bool ok = t0 == known_a1() && t2 == eps_poly({{-2, Rat(1, 4)}, {0, Rat(1, 24)}, {2, Rat(7, 5760)}});
  return {ok, "<tau0> = " + fmt(t0) + "; <tau2> = " + fmt(t2)};
}

Outcome check_multi_point(const SelftestOptions&) {
  WaveCache cache;
  const EpsLaurent v00 = invariant({0, 0}, {}, &cache).value;
  const EpsLaurent v000 = invariant({0, 0, 0}, {}, &cache).value;
  const EpsLaurent v01 = invariant({0, 1}, {}, &cache).value;
  const EpsLaurent em2 = EpsLaurent::monomial(-2);
  const bool ok = v00 == em2 && v000 == em2 && v01.is_zero();
  return {ok, "<tau0 tau0> = " + fmt(v00) + "; <tau0^3> = " + fmt(v000) + "; <tau0 tau1> = " + fmt(v01)};
}

Outcome check_n4_block(const SelftestOptions&) {
  const ZModelExpansion z = zmodel_expansion(4, 3);
  // Expected coefficient by the partition type of the exponent vector.
  const std::map<std::vector<int>, EpsLaurent> expected = {
      {{}, EpsLaurent(1L)},
      {{1}, known_a1()},
      {{2}, known_a2()},
      {{1, 1}, known_a2() * Rat(2)},
      {{3}, known_a3()},
      {{2, 1}, known_a21()},
      {{1, 1, 1}, known_a21() * Rat(2)},
  };
  int checked = 0, bad = 0;
  std::vector<int> e(4);
  for (e[0] = 0; e[0] >= -3; --e[0])
    for (e[1] = 0; e[1] >= -3; --e[1])
      for (e[2] = 0; e[2] >= -3; --e[2])
        for (e[3] = 0; e[3] >= -3; --e[3]) {
          if (e[0] + e[1] + e[2] + e[3] < -3) continue;
          std::vector<int> type;
          for (int x : e)
            if (x) type.push_back(-x);
          std::sort(type.rbegin(), type.rend());
          ++checked;
          if (z.quotient.coeff(e) != expected.at(type)) ++bad;
        }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " monomials match"};
}

Outcome check_free_energy(const SelftestOptions& opt) {
  const int D = opt.degree;
  const MiwaPolynomial lhs = zmodel_log_in_times(D + 1, D);
  const MiwaPolynomial rhs = free_energy(D);
  const bool same = lhs == rhs;
  bool display = true;
  std::string note;
  if (D >= 3) {
    display = lhs.graded_to(3) == known_free_energy_3();
    note = display ? "; degree <= 3 matches the known display" : "; degree <= 3 differs from the known display";
  }
  return {same && display, std::string(same ? "log Z_N = F" : "log Z_N != F") + " at N = " + std::to_string(D + 1) +
                               ", D = " + std::to_string(D) + note};
}

Outcome check_stabilization(const SelftestOptions& opt) {
  const StabilizationReport r = stabilization_check(opt.degree);
  std::string detail = "N = " + std::to_string(opt.degree + 1) + " vs " + std::to_string(opt.degree + 2) + ": " +
                       std::to_string(r.differing.size()) + " differing monomials";
  return {r.ok, detail};
}

Outcome check_projector(const SelftestOptions&) {
  const int M = 8;
  const RMatrix R = r_matrix(M);
  const RMatrix R2 = R * R;
  bool idem = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) idem = idem && zero_to_order(R2.r[i][j] - R.r[i][j], M);
  const bool tr = zero_to_order(R.trace() - ZSeries::constant(EpsLaurent(1L)), M);
  const bool det = zero_to_order(R.det(), M);

  const MultiSeries K = kernel_Khat(M);
  std::map<int, EpsLaurent> diag;
  for (const auto& [e, c] : K.terms())
    if (e[0] >= -M && e[1] >= -M) diag[e[0] + e[1]] += c;
  bool kdiag = true;
  for (const auto& [d, c] : diag)
    if (d >= -M && c != (d == 0 ? EpsLaurent(1L) : EpsLaurent())) kdiag = false;

  const LogSeries s1 = s1_logseries(wave_data(M));
  const bool nolog = zero_to_order(s1.logpart, M);
  std::ostringstream os;
  os << "tr R = 1: " << tr << "; R^2 = R: " << idem << "; det R = 0: " << det << "; K(z,z) = 1: " << kdiag
     << "; S1 log part = 0: " << nolog;
  return {tr && idem && det && kdiag && nolog, os.str()};
}

Outcome check_characteristic(const SelftestOptions&) {
  bool ok = true;
  std::string detail;
  for (int N : {1, 2}) {
    const CharDetReport r = characteristic_det_check(N, 4);
    ok = ok && r.ok;
    detail += (detail.empty() ? "" : "; ") + std::string("N = ") + std::to_string(N) + ": " +
              (r.ok ? "equal" : "differ") + " (" + std::to_string(r.det_g.terms().size()) + " terms)";
  }
  return {ok, detail};
}

Outcome check_structural(const SelftestOptions& opt) {
  std::mt19937 rng(opt.seed);
  // Every sorted tuple with sum(k) <= 6 and n <= 4 is a candidate; sample a fixed-size subset.
  std::vector<std::vector<int>> pool;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int min_k, int budget) {
    if (!cur.empty()) pool.push_back(cur);
    if (cur.size() == 4) return;
    for (int k = min_k; k <= budget; ++k) {
      cur.push_back(k);
      rec(k, budget - k);
      cur.pop_back();
    }
  };
  rec(0, 6);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), 40));

  WaveCache cache;
  InvariantOptions io;
  io.doubling_check = false;
  int bad = 0;
  std::string first_bad;
  for (const auto& ks : pool) {
    const int sum = std::accumulate(ks.begin(), ks.end(), 0);
    const EpsLaurent v = invariant(ks, io, &cache).value;
    bool ok = true;
    if (sum % 2 != 0) ok = v.is_zero();
    for (const auto& [e, c] : v.terms()) ok = ok && e % 2 == 0 && e >= -2 && e <= sum;
    if (ok && !v.is_zero()) {
      for (const auto& [gd, c] : invariant_by_genus({ks, v})) ok = ok && gd.second >= 0;
    }
    std::vector<int> perm = ks;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (perm.size() > 1 && perm == ks) std::reverse(perm.begin(), perm.end());
    ok = ok && invariant(perm, io, &cache).value == v;
    if (!ok) {
      ++bad;
      if (first_bad.empty()) {
        first_bad = "[";
        for (std::size_t i = 0; i < ks.size(); ++i) first_bad += (i ? "," : "") + std::to_string(ks[i]);
        first_bad += "]";
      }
    }
  }
  std::string detail = std::to_string(pool.size() - static_cast<std::size_t>(bad)) + "/" +
                       std::to_string(pool.size()) + " sampled tuples satisfy parity, eps range, d >= 0, symmetry";
  if (bad) detail += "; first failure " + first_bad;
  return {bad == 0, detail};
}

Outcome check_orthogonality(const SelftestOptions& opt) {
  const BigFloat tol = BigFloat::from_string("1e-20", opt.prec);
  BigFloat worst(0L, opt.prec);
  bool ok = true;
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m) {
      const NumericRow r = charlier_orthogonality_check(l, m, Rat(1), tol, opt.prec);
      ok = ok && r.ok;
      if (r.abs_error > worst) worst = r.abs_error;
    }
  return {ok, "25 entries, max |error| = " + worst.to_string(3)};
}

Outcome check_charpoly(const SelftestOptions& opt) {
  const long p = opt.prec;
  const BigFloat tol = BigFloat::from_string("1e-15", p);
  const BigFloat inner = BigFloat::from_string("1e-20", p);
  const std::vector<std::vector<BigFloat>> grids = {
      {BigFloat(3L, p)},
      {BigFloat(Rat(-7, 5), p)},
      {BigFloat(3L, p), BigFloat(Rat(-7, 5), p)},
      {BigFloat(Rat(1, 3), p), BigFloat(Rat(5, 2), p)},
  };
  BigFloat worst(0L, p);
  bool ok = true;
  int cases = 0;
  for (int L = 1; L <= 2; ++L)
    for (const auto& us : grids)
      for (const Rat& a : {Rat(1), Rat(1, 2)}) {
        const BigFloat det = char_poly_expectation(L, a, us, p);
        const BruteForceResult bf = brute_force_expectation(L, a, us, inner, p);
        const BigFloat err = abs(det - bf.value);
        ok = ok && err <= tol;
        if (err > worst) worst = err;
        ++cases;
      }
  return {ok, std::to_string(cases) + " cases (L <= 2, N <= 2), max |difference| = " + worst.to_string(3)};
}

Outcome check_scaling_limit(const SelftestOptions& opt) {
  const ScalingLimitReport r = charlier_scaling_limit_check(BigFloat(0L, opt.prec), 0, Rat(1), {20, 40, 80}, opt.prec);
  std::ostringstream os;
  os << "target " << r.target.to_string(8) << "; errors";
  for (const auto& row : r.rows) os << ' ' << row.input << ':' << row.abs_error.to_string(3);
  os << "; observed rates";
  for (double x : r.observed_rates) os << ' ' << x;
  return {r.decreasing, os.str()};
}

Outcome check_asymptotics(const SelftestOptions& opt) {
  const AsymptoticReport r = asymptotic_match_check(BigFloat(20L, opt.prec), Rat(1), 3, opt.prec);
  const bool rel = r.rel_error < BigFloat::from_string("1e-4", opt.prec);
  const bool ratio = r.ratio >= BigFloat(8L, opt.prec) && r.ratio <= BigFloat(32L, opt.prec);
  return {rel && ratio,
          "relative error at z = 20: " + r.rel_error.to_string(3) + "; error ratio z/2z: " + r.ratio.to_string(4)};
}

struct Check {
  std::string name;
  double budget;
  std::function<Outcome(const SelftestOptions&)> run;
};

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"wave-coefficients", 1, check_wave_coefficients},
      {"stirling-oracle", 10, check_stirling_oracle},
      {"one-point", 5, check_one_point},
      {"multi-point", 60, check_multi_point},
      {"n4-block", 60, check_n4_block},
      {"free-energy", 120, check_free_energy},
      {"stabilization", 120, check_stabilization},
      {"projector", 60, check_projector},
      {"characteristic-det", 60, check_characteristic},
      {"structural", 120, check_structural},
      {"charlier-orthogonality", 60, check_orthogonality},
      {"charlier-charpoly", 60, check_charpoly},
      {"scaling-limit", 60, check_scaling_limit},
      {"asymptotics", 60, check_asymptotics},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& selftest_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& c : checks()) n.push_back(c.name);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_selftest(const SelftestOptions& opt) {
  for (const auto& n : opt.only)
    if (std::find(selftest_names().begin(), selftest_names().end(), n) == selftest_names().end())
      throw std::invalid_argument("unknown check: " + n);
  if (opt.degree < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<CheckResult> out;
  for (const auto& c : checks()) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), c.name) == opt.only.end()) continue;
    CheckResult r;
    r.name = c.name;
    r.budget_seconds = c.budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(opt);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && r.seconds > r.budget_seconds) {
      r.pass = false;
      r.detail += "; exceeded time budget";
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gwp1
