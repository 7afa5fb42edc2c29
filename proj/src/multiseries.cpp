#include "gwp1/multiseries.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "gwp1/errors.hpp"

namespace gwp1 {

namespace {

std::vector<int> normalize_region(int n, std::vector<int> region) {
  if (region.empty()) {
    region.resize(static_cast<std::size_t>(n));
    std::iota(region.begin(), region.end(), 0);
  }
  if (static_cast<int>(region.size()) != n) throw std::invalid_argument("region size does not match variable count");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int v : region) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) throw std::invalid_argument("region is not a permutation");
  }
  return region;
}

std::vector<int> positions(const std::vector<int>& region) {
  std::vector<int> pos(region.size());
  for (std::size_t r = 0; r < region.size(); ++r) pos[static_cast<std::size_t>(region[r])] = static_cast<int>(r);
  return pos;
}

int total(const MultiSeries::Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string exps_str(const MultiSeries::Exps& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

}  // namespace

MultiSeries::MultiSeries(int nvars, std::vector<int> region)
    : n_(nvars),
      region_(normalize_region(nvars, std::move(region))),
      floors_(static_cast<std::size_t>(nvars), kUnbounded),
      prefix_tops_(static_cast<std::size_t>(nvars), -kUnbounded),
      var_tops_(static_cast<std::size_t>(nvars), -kUnbounded) {
  if (nvars < 1) throw std::invalid_argument("MultiSeries needs at least one variable");
}

MultiSeries MultiSeries::constant(const EpsLaurent& c, int nvars, std::vector<int> region) {
  return monomial(Exps(static_cast<std::size_t>(nvars), 0), c, std::move(region));
}

MultiSeries MultiSeries::monomial(const Exps& e, const EpsLaurent& c, std::vector<int> region) {
  MultiSeries s(static_cast<int>(e.size()), std::move(region));
  s.prefix_tops_ = s.prefix_sums(e);
  s.var_tops_ = e;
  s.add_term(e, c);
  return s;
}

MultiSeries MultiSeries::embed(const ZSeries& z, int var, int nvars, std::vector<int> region) {
  MultiSeries s(nvars, std::move(region));
  if (var < 0 || var >= nvars) throw std::invalid_argument("embed: variable out of range");
  const int p = positions(s.region_)[static_cast<std::size_t>(var)];
  for (int r = 0; r < nvars; ++r) {
    const bool has = r >= p;
    s.floors_[static_cast<std::size_t>(r)] = has ? z.order() : kUnbounded;
    s.prefix_tops_[static_cast<std::size_t>(r)] = has ? z.top() : 0;
  }
  std::fill(s.var_tops_.begin(), s.var_tops_.end(), 0);
  s.var_tops_[static_cast<std::size_t>(var)] = z.top();
  Exps e(static_cast<std::size_t>(nvars), 0);
  for (int d = z.top(); d >= z.low() && d >= -z.order(); --d) {
    const EpsLaurent& c = z.coeff(d);
    if (c.is_zero()) continue;
    e[static_cast<std::size_t>(var)] = d;
    s.terms_.emplace(e, c);
  }
  return s;
}

MultiSeries MultiSeries::with_window(int nvars, std::vector<int> region, std::vector<int> floors,
                                     std::vector<int> prefix_tops, std::vector<int> var_tops) {
  MultiSeries s(nvars, std::move(region));
  const auto n = static_cast<std::size_t>(nvars);
  if (floors.size() != n || prefix_tops.size() != n || var_tops.size() != n)
    throw std::invalid_argument("with_window: bound vectors must have one entry per variable");
  s.floors_ = std::move(floors);
  s.prefix_tops_ = std::move(prefix_tops);
  s.var_tops_ = std::move(var_tops);
  return s;
}

std::vector<int> MultiSeries::prefix_sums(const Exps& e) const {
  std::vector<int> p(static_cast<std::size_t>(n_));
  int acc = 0;
  for (int r = 0; r < n_; ++r) {
    acc += e[static_cast<std::size_t>(region_[static_cast<std::size_t>(r)])];
    p[static_cast<std::size_t>(r)] = acc;
  }
  return p;
}

bool MultiSeries::in_window(const Exps& e) const {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector has the wrong length");
  int acc = 0;
  for (int r = 0; r < n_; ++r) {
    acc += e[static_cast<std::size_t>(region_[static_cast<std::size_t>(r)])];
    if (acc < -floors_[static_cast<std::size_t>(r)]) return false;
  }
  return true;
}

EpsLaurent MultiSeries::coeff(const Exps& e) const {
  if (!in_window(e)) {
    int need = 0;
    const auto p = prefix_sums(e);
    for (int x : p) need = std::max(need, -x);
    throw TruncationError("coefficient of z^" + exps_str(e) + " lies outside the truncation window", need);
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? EpsLaurent() : it->second;
}

void MultiSeries::add_term(const Exps& e, const EpsLaurent& c) {
  if (c.is_zero()) return;
  if (!in_window(e)) throw std::out_of_range("add_term outside the window at " + exps_str(e));
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
  if (n_ != o.n_) throw std::invalid_argument("MultiSeries variable count mismatch");
  if (region_ != o.region_) throw std::invalid_argument("MultiSeries region mismatch");
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  MultiSeries r(a.n_, a.region_);
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.n_); ++i) {
    r.floors_[i] = std::min(a.floors_[i], b.floors_[i]);
    r.prefix_tops_[i] = std::max(a.prefix_tops_[i], b.prefix_tops_[i]);
    r.var_tops_[i] = std::max(a.var_tops_[i], b.var_tops_[i]);
  }
  for (const auto* s : {&a, &b})
    for (const auto& [e, c] : s->terms_)
      if (r.in_window(e)) r.add_term(e, c);
  return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  const auto n = static_cast<std::size_t>(a.n_);
  MultiSeries r(a.n_, a.region_);
  for (std::size_t i = 0; i < n; ++i) {
    r.floors_[i] = std::min(window_sub(a.floors_[i], b.prefix_tops_[i]), window_sub(b.floors_[i], a.prefix_tops_[i]));
    r.prefix_tops_[i] = degree_add(a.prefix_tops_[i], b.prefix_tops_[i]);
    r.var_tops_[i] = degree_add(a.var_tops_[i], b.var_tops_[i]);
  }
  struct Entry {
    const MultiSeries::Exps* e;
    const EpsLaurent* c;
    std::vector<int> p;
  };
  auto entries = [](const MultiSeries& s) {
    std::vector<Entry> out;
    out.reserve(s.terms_.size());
    for (const auto& [e, c] : s.terms_) out.push_back({&e, &c, s.prefix_sums(e)});
    return out;
  };
  const auto ea = entries(a);
  const auto eb = entries(b);
  std::map<MultiSeries::Exps, EpsLaurent> acc;
  MultiSeries::Exps e(n);
  for (const auto& x : ea) {
    for (const auto& y : eb) {
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (x.p[k] + y.p[k] < -r.floors_[k]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t k = 0; k < n; ++k) e[k] = (*x.e)[k] + (*y.e)[k];
      acc[e].add_product(*x.c, *y.c);
    }
  }
  for (auto& [k, c] : acc)
    if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
  return r;
}

MultiSeries operator*(const MultiSeries& a, const EpsLaurent& c) {
  MultiSeries r(a);
  if (c.is_zero()) {
    r.terms_.clear();
    return r;
  }
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MultiSeries MultiSeries::truncated(const std::vector<int>& floors) const {
  if (static_cast<int>(floors.size()) != n_) throw std::invalid_argument("truncated: wrong floor count");
  MultiSeries r(*this);
  for (std::size_t i = 0; i < floors.size(); ++i) r.floors_[i] = std::min(r.floors_[i], floors[i]);
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (r.in_window(it->first)) {
      ++it;
    } else {
      it = r.terms_.erase(it);
    }
  }
  return r;
}

int MultiSeries::complete_total_degree() const {
  // Degree T is complete when T - sum of var_tops after position r >= -floor_r.
  int need = -kUnbounded;
  for (int r = 0; r < n_; ++r) {
    int suffix = 0;
    for (int s = r + 1; s < n_; ++s) suffix = degree_add(suffix, var_tops_[static_cast<std::size_t>(region_[static_cast<std::size_t>(s)])]);
    const int fl = floors_[static_cast<std::size_t>(r)];
    if (fl >= kUnbounded) continue;
    if (suffix >= kUnbounded) return kUnbounded;
    need = std::max(need, suffix - fl);
  }
  return need;
}

bool MultiSeries::is_symmetric(int sign) const {
  for (const auto& [e, c] : terms_) {
    if (!in_window(e)) continue;
    for (int v = 0; v + 1 < n_; ++v) {
      Exps f = e;
      std::swap(f[static_cast<std::size_t>(v)], f[static_cast<std::size_t>(v + 1)]);
      if (!in_window(f)) continue;
      auto it = terms_.find(f);
      const EpsLaurent other = it == terms_.end() ? EpsLaurent() : it->second;
      if (other != c * Rat(sign)) return false;
    }
  }
  return true;
}

bool equal_on_common_window(const MultiSeries& a, const MultiSeries& b) {
  if (a.nvars() != b.nvars()) return false;
  std::vector<int> fl(static_cast<std::size_t>(a.nvars()));
  for (std::size_t i = 0; i < fl.size(); ++i) fl[i] = std::min(a.floors()[i], b.floors()[i]);
  const MultiSeries ta = a.truncated(fl);
  const MultiSeries tb = b.truncated(fl);
  return ta.terms() == tb.terms();
}

MultiSeries expand_inverse_difference(int i, int j, int nvars, const std::vector<int>& region, int order) {
  if (i == j) throw std::invalid_argument("expand_inverse_difference: i == j");
  if (order < 1) throw std::invalid_argument("expand_inverse_difference: order must be positive");
  MultiSeries probe(nvars, region);
  const auto pos = positions(probe.region());
  const int pi = pos.at(static_cast<std::size_t>(i));
  const int pj = pos.at(static_cast<std::size_t>(j));
  if (pi > pj) return -expand_inverse_difference(j, i, nvars, region, order);
  // |z_i| > |z_j|: sum_m z_j^m z_i^(-m-1).
  const auto n = static_cast<std::size_t>(nvars);
  std::vector<int> floors(n, kUnbounded), ptops(n, 0), vtops(n, 0);
  for (int r = 0; r < nvars; ++r) {
    if (r >= pi) ptops[static_cast<std::size_t>(r)] = -1;
    if (r >= pi && r < pj) floors[static_cast<std::size_t>(r)] = order;
  }
  vtops[static_cast<std::size_t>(i)] = -1;
  vtops[static_cast<std::size_t>(j)] = kUnbounded;
  MultiSeries s = MultiSeries::with_window(nvars, probe.region(), floors, ptops, vtops);
  MultiSeries::Exps e(n, 0);
  for (int m = 0; m < order; ++m) {
    e[static_cast<std::size_t>(i)] = -m - 1;
    e[static_cast<std::size_t>(j)] = m;
    s.add_term(e, EpsLaurent(1L));
  }
  return s;
}

MultiSeries antisym_divide_vandermonde(const MultiSeries& num) {
  const int n = num.nvars();
  const int tmin = num.complete_total_degree();
  if (tmin >= kUnbounded)
    throw TruncationError("antisym_divide_vandermonde: no total degree is completely known");
  using Exps = MultiSeries::Exps;
  std::map<Exps, EpsLaurent> p;
  for (const auto& [e, c] : num.terms())
    if (total(e) >= tmin) p.emplace(e, c);

  for (const auto& [e, c] : p) {
    for (int v = 0; v + 1 < n; ++v) {
      Exps f = e;
      std::swap(f[static_cast<std::size_t>(v)], f[static_cast<std::size_t>(v + 1)]);
      auto it = p.find(f);
      if (it == p.end() || it->second != -c)
        throw ConsistencyError("antisym_divide_vandermonde: numerator is not antisymmetric at " + exps_str(e));
    }
  }

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      // Group into binary forms in (z_j, z_k) and divide by z_k - z_j.
      std::map<Exps, std::map<int, EpsLaurent>> groups;
      for (auto& [e, c] : p) {
        Exps g = e;
        g[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)] + e[static_cast<std::size_t>(k)];
        g[static_cast<std::size_t>(k)] = 0;
        groups[g].emplace(e[static_cast<std::size_t>(k)], std::move(c));
      }
      std::map<Exps, EpsLaurent> q;
      for (auto& [g, form] : groups) {
        const int s = g[static_cast<std::size_t>(j)];
        const int amin = form.begin()->first;
        const int amax = form.rbegin()->first;
        EpsLaurent acc;
        auto it = form.rbegin();
        Exps e = g;
        for (int b = amax - 1; b >= amin - 1; --b) {
          if (it != form.rend() && it->first == b + 1) {
            acc += it->second;
            ++it;
          }
          if (b < amin) break;
          if (acc.is_zero()) continue;
          e[static_cast<std::size_t>(k)] = b;
          e[static_cast<std::size_t>(j)] = s - 1 - b;
          q.emplace(e, acc);
        }
        if (!acc.is_zero())
          throw ConsistencyError("antisym_divide_vandermonde: nonzero remainder dividing by z" + std::to_string(k) +
                                 " - z" + std::to_string(j));
      }
      p = std::move(q);
    }
  }

  const int shift = n * (n - 1) / 2;
  const auto nn = static_cast<std::size_t>(n);
  std::vector<int> floors(nn, kUnbounded), ptops(nn, -kUnbounded), vtops(nn, -kUnbounded);
  floors[nn - 1] = tmin <= -kUnbounded ? kUnbounded : shift - tmin;
  MultiSeries probe(n, num.region());
  for (const auto& [e, c] : p) {
    const auto ps = probe.prefix_sums(e);
    for (std::size_t r = 0; r < nn; ++r) {
      ptops[r] = std::max(ptops[r], ps[r]);
      vtops[r] = std::max(vtops[r], e[r]);
    }
  }
  ptops[nn - 1] = degree_add(num.prefix_tops()[nn - 1], -shift);
  MultiSeries out = MultiSeries::with_window(n, num.region(), floors, ptops, vtops);
  for (const auto& [e, c] : p) out.add_term(e, c);
  if (!out.is_symmetric(1)) throw ConsistencyError("antisym_divide_vandermonde: quotient is not symmetric");
  return out;
}

MultiSeries log1p(const MultiSeries& u, int max_power) {
  for (const auto& [e, c] : u.terms())
    if (total(e) >= 0) throw std::invalid_argument("log1p: argument has a term of nonnegative total degree");
  MultiSeries result(u.nvars(), u.region());
  result = result + u;
  MultiSeries power = u;
  for (int k = 2; k <= max_power; ++k) {
    power = (power * u).truncated(u.floors());
    if (power.terms().empty()) break;
    result = result + power * EpsLaurent(Rat(k % 2 ? 1 : -1, k));
  }
  return result;
}

}  // namespace gwp1
