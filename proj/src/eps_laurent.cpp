#include "gwp1/eps_laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwp1 {

EpsLaurent::EpsLaurent(const Rat& c) {
  if (sgn(c) != 0) terms_.emplace_back(0, c);
}

EpsLaurent EpsLaurent::monomial(int exponent, const Rat& c) {
  EpsLaurent r;
  if (sgn(c) != 0) r.terms_.emplace_back(exponent, c);
  return r;
}

bool EpsLaurent::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

int EpsLaurent::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero EpsLaurent");
  return terms_.front().first;
}

int EpsLaurent::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero EpsLaurent");
  return terms_.back().first;
}

Rat EpsLaurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rat(0);
}

void EpsLaurent::add_term(int exponent, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, exponent, c);
  }
}

EpsLaurent EpsLaurent::operator-() const {
  EpsLaurent r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <typename Combine>
std::vector<EpsLaurent::Term> merge(const std::vector<EpsLaurent::Term>& a, const std::vector<EpsLaurent::Term>& b,
                                    Combine combine) {
  std::vector<EpsLaurent::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, combine(Rat(0), j->second));
      ++j;
    } else {
      Rat s = combine(i->second, j->second);
      if (sgn(s) != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EpsLaurent& EpsLaurent::operator+=(const EpsLaurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, [](const Rat& x, const Rat& y) { return Rat(x + y); });
  return *this;
}

EpsLaurent& EpsLaurent::operator-=(const EpsLaurent& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rat& x, const Rat& y) { return Rat(x - y); });
  return *this;
}

EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
  EpsLaurent r;
  r.add_product(a, b);
  return r;
}

EpsLaurent& EpsLaurent::operator*=(const EpsLaurent& o) { return *this = *this * o; }

EpsLaurent& EpsLaurent::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

void EpsLaurent::add_product(const EpsLaurent& a, const EpsLaurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    add_term(lo, a.terms_[0].second * b.terms_[0].second);
    return;
  }
  std::vector<Rat> acc(static_cast<std::size_t>(hi - lo + 1));
  std::vector<char> used(acc.size(), 0);
  for (const auto& [e, c] : terms_) {
    if (e >= lo && e <= hi) {
      acc[static_cast<std::size_t>(e - lo)] = c;
      used[static_cast<std::size_t>(e - lo)] = 1;
    }
  }
  Rat tmp;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const auto k = static_cast<std::size_t>(ea + eb - lo);
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[k] += tmp;
      used[k] = 1;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + acc.size());
  auto it = terms_.begin();
  while (it != terms_.end() && it->first < lo) out.push_back(*it++);
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (used[k] && sgn(acc[k]) != 0) out.emplace_back(lo + static_cast<int>(k), std::move(acc[k]));
  while (it != terms_.end() && it->first <= hi) ++it;
  while (it != terms_.end()) out.push_back(*it++);
  terms_ = std::move(out);
}

EpsLaurent EpsLaurent::times_eps(int k) const {
  EpsLaurent r(*this);
  for (auto& t : r.terms_) t.first += k;
  return r;
}

std::string EpsLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    Rat mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    if (e == 0) {
      s += gwp1::to_string(mag);
      continue;
    }
    if (mag != 1) s += gwp1::to_string(mag) + "*";
    s += "eps";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

EpsLaurent pow(const EpsLaurent& base, unsigned n) {
  EpsLaurent r(1L);
  EpsLaurent b = base;
  while (n) {
    if (n & 1U) r *= b;
    n >>= 1U;
    if (n) b *= b;
  }
  return r;
}

BigFloat eps_eval(const EpsLaurent& p, const BigFloat& eps) {
  if (eps.is_zero()) throw std::domain_error("eps_eval at eps = 0");
  const long prec = eps.precision();
  if (p.is_zero()) return BigFloat(prec);
  // Horner in ε over [min, max], then scale by ε^min.
  const int lo = p.min_exponent();
  const int hi = p.max_exponent();
  BigFloat acc(prec);
  auto it = p.terms().rbegin();
  for (int e = hi; e >= lo; --e) {
    acc *= eps;
    if (it != p.terms().rend() && it->first == e) {
      acc += BigFloat(it->second, prec);
      ++it;
    }
  }
  return acc * pow(eps, static_cast<long>(lo));
}

}  // namespace gwp1
