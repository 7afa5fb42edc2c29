#include "gwp1/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "gwp1/errors.hpp"

namespace gwp1 {

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Rat Partition::multiplicity_factorial() const {
  Rat r(1);
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    r *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return r;
}

std::vector<Partition> partitions_of(int w) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

int MiwaPolynomial::degree(const Monomial& m) const {
  int d = 0;
  for (int k : m) d += scaled_ ? k + 1 : k;
  return d;
}

void MiwaPolynomial::add(Monomial m, const EpsLaurent& c) {
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EpsLaurent MiwaPolynomial::coeff(Monomial m) const {
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  return it == terms_.end() ? EpsLaurent() : it->second;
}

MiwaPolynomial MiwaPolynomial::graded_to(int d) const {
  MiwaPolynomial r(scaled_, std::min(d, degree_bound_));
  for (const auto& [m, c] : terms_)
    if (degree(m) <= d) r.add(m, c);
  return r;
}

std::string MiwaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const char* var = scaled_ ? "t" : "T";
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (int k : m) s += "*" + std::string(var) + std::to_string(k);
  }
  return s;
}

std::vector<MiwaPolynomial::Monomial> miwa_difference(const MiwaPolynomial& a, const MiwaPolynomial& b) {
  std::vector<MiwaPolynomial::Monomial> out;
  for (const auto& [m, c] : a.terms())
    if (b.coeff(m) != c) out.push_back(m);
  for (const auto& [m, c] : b.terms())
    if (a.terms().find(m) == a.terms().end()) out.push_back(m);
  return out;
}

namespace {

// Coefficient of y^mu (mu in the first variables) in p_lambda, for every mu.
std::map<Partition, long> power_sum_in_monomials(const Partition& lambda) {
  const int l = lambda.length();
  std::map<Partition, long> out;
  std::vector<int> assign(static_cast<std::size_t>(l), 0);
  std::vector<int> expo(static_cast<std::size_t>(l), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == l) {
      int last = 0;
      for (; last < l && expo[static_cast<std::size_t>(last)] > 0; ++last) {
      }
      for (int v = last; v < l; ++v)
        if (expo[static_cast<std::size_t>(v)] != 0) return;
      for (int v = 1; v < last; ++v)
        if (expo[static_cast<std::size_t>(v)] > expo[static_cast<std::size_t>(v - 1)]) return;
      Partition mu{std::vector<int>(expo.begin(), expo.begin() + last)};
      ++out[mu];
      return;
    }
    for (int v = 0; v < l; ++v) {
      expo[static_cast<std::size_t>(v)] += lambda.parts[static_cast<std::size_t>(i)];
      rec(i + 1);
      expo[static_cast<std::size_t>(v)] -= lambda.parts[static_cast<std::size_t>(i)];
    }
  };
  rec(0);
  return out;
}

}  // namespace

MiwaPolynomial symmetric_to_miwa(const MultiSeries& sym, int D, bool eps_scaling) {
  const int n = sym.nvars();
  if (D < 0) throw std::invalid_argument("symmetric_to_miwa: negative degree bound");
  if (n <= D) throw std::invalid_argument("symmetric_to_miwa: need more variables than the degree bound");
  if (sym.complete_total_degree() > -D)
    throw TruncationError("symmetric_to_miwa: degree " + std::to_string(-D) + " is not completely known", D);
  if (!sym.is_symmetric(1)) throw ConsistencyError("symmetric_to_miwa: input is not symmetric");

  std::map<Partition, EpsLaurent> c;
  for (const auto& [e, v] : sym.terms()) {
    const int tot = std::accumulate(e.begin(), e.end(), 0);
    if (tot < -D) continue;
    std::vector<int> y(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) throw std::invalid_argument("symmetric_to_miwa: positive power present");
      y[i] = -e[i];
    }
    std::vector<int> sorted = y;
    std::sort(sorted.rbegin(), sorted.rend());
    if (y != sorted) continue;
    while (!y.empty() && y.back() == 0) y.pop_back();
    c.emplace(Partition{y}, v);
  }

  std::vector<Partition> all;
  for (int w = 1; w <= D; ++w)
    for (auto& p : partitions_of(w)) all.push_back(std::move(p));
  std::stable_sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) { return a.length() > b.length(); });

  MiwaPolynomial out(eps_scaling, D);
  if (auto it = c.find(Partition{}); it != c.end()) out.add({}, it->second);
  for (const Partition& lambda : all) {
    auto it = c.find(lambda);
    if (it == c.end() || it->second.is_zero()) continue;
    const EpsLaurent a = it->second * (Rat(1) / lambda.multiplicity_factorial());
    for (const auto& [mu, count] : power_sum_in_monomials(lambda)) {
      c[mu] -= a * Rat(count);
    }
    MiwaPolynomial::Monomial mono;
    EpsLaurent coef = a;
    for (int part : lambda.parts) {
      if (eps_scaling) {
        mono.push_back(part - 1);
        coef = coef.times_eps(part - 1) * (Rat(1) / factorial(static_cast<unsigned>(part - 1)));
      } else {
        mono.push_back(part);
        coef *= Rat(part);
      }
    }
    out.add(mono, coef);
  }
  return out;
}

MultiSeries miwa_to_symmetric(const MiwaPolynomial& poly, int n, std::vector<int> region) {
  std::vector<int> floors(static_cast<std::size_t>(n), kUnbounded);
  MultiSeries result(n, region);
  auto power_sum = [&](int k) {
    MultiSeries s(n, region);
    for (int j = 0; j < n; ++j) {
      MultiSeries::Exps e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = -k;
      s = s + MultiSeries::monomial(e, EpsLaurent(1L), region);
    }
    return s;
  };
  for (const auto& [mono, c] : poly.terms()) {
    MultiSeries term = MultiSeries::constant(c, n, region);
    for (int k : mono) {
      // t_k = k!/eps^k p_{k+1};  T_k = p_k / k.
      if (poly.scaled()) {
        term = term * power_sum(k + 1) * EpsLaurent::monomial(-k, factorial(static_cast<unsigned>(k)));
      } else {
        term = term * power_sum(k) * EpsLaurent(Rat(1, k));
      }
    }
    result = result + term;
  }
  floors.back() = poly.degree_bound();
  return result.truncated(floors);
}

}  // namespace gwp1
