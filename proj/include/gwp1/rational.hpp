#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gwp1 {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rat = mpq_class;

enum class RatOp { add, sub, mul, div };

/// Exact rational arithmetic. Division by zero throws std::domain_error.
Rat rat_arith(const Rat& a, const Rat& b, RatOp op);

/// Three-way comparison: -1, 0 or +1.
int rat_cmp(const Rat& a, const Rat& b);

/// Parses "p/q", "p" or a finite decimal such as "0.25". Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& r);

Rat factorial(unsigned n);
Rat binomial(long n, unsigned k);  // generalized: n may be negative

/// B_0..B_n with B_1 = -1/2.
std::vector<Rat> bernoulli_numbers(int n);

}  // namespace gwp1
