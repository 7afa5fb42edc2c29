#include "gwp1/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gwp1 {

Rat rat_arith(const Rat& a, const Rat& b, RatOp op) {
  switch (op) {
    case RatOp::add:
      return a + b;
    case RatOp::sub:
      return a - b;
    case RatOp::mul:
      return a * b;
    case RatOp::div:
      if (sgn(b) == 0) throw std::domain_error("rational division by zero");
      return a / b;
  }
  throw std::logic_error("unknown RatOp");
}

int rat_cmp(const Rat& a, const Rat& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_int(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
    if (ip.empty()) ip = "0";
    if (fp.empty() || !is_integer_literal(fp) || fp[0] == '-' || fp[0] == '+')
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Rat r(parse_int(ip) * scale + parse_int(fp), scale);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }
  return Rat(parse_int(text));
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat binomial(long n, unsigned k) {
  Rat r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= Rat(n - static_cast<long>(i));
    r /= Rat(static_cast<long>(i) + 1);
  }
  return r;
}

std::vector<Rat> bernoulli_numbers(int n) {
  std::vector<Rat> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat s = 0;
    mpz_class c = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      if (k % 2 == 0 || k == 1) s += c * b[static_cast<std::size_t>(k)];
      c = c * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / Rat(m + 1);
  }
  return b;
}

}  // namespace gwp1
