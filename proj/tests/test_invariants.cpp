#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "gwp1/errors.hpp"
#include "gwp1/invariants.hpp"

using namespace gwp1;

namespace {

EpsLaurent eps_poly(std::initializer_list<std::pair<int, Rat>> terms) {
  EpsLaurent p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

const EpsLaurent kTau0 = eps_poly({{-2, Rat(1)}, {0, Rat(-1, 24)}});
const EpsLaurent kTau2 = eps_poly({{-2, Rat(1, 4)}, {0, Rat(1, 24)}, {2, Rat(7, 5760)}});

Rat coeff(const EpsLaurent& p, int e) {
  for (const auto& [x, c] : p.terms())
    if (x == e) return c;
  return Rat(0);
}

}  // namespace

TEST_CASE("one-point invariants") {
  CHECK(one_point_invariant(0).value == kTau0);
  CHECK(one_point_invariant(2).value == kTau2);
  CHECK(one_point_invariant(1).value.is_zero());
  CHECK(one_point_invariant(3).value.is_zero());
  CHECK(one_point_invariant(2, 10).value == kTau2);
  CHECK_THROWS_AS(one_point_invariant(2, 3), TruncationError);
  CHECK_THROWS(one_point_invariant(-1));
}

TEST_CASE("one-point invariants match the genus-0 and degree-0 closed forms") {
  // Genus 0, degree d: <tau_{2d-2}> = 1/(d!)^2.
  // Degree 0, genus g: <tau_{2g-2}> = (2^{1-2g} - 1) B_{2g} / (2g)!.
  const auto B = bernoulli_numbers(8);
  for (int d = 1; d <= 4; ++d) {
    const EpsLaurent v = one_point_invariant(2 * d - 2).value;
    const Rat f = factorial(static_cast<unsigned>(d));
    CHECK(coeff(v, -2) == Rat(1) / (f * f));
    const int g = d;
    Rat pw(1);
    for (int i = 0; i < 2 * g - 1; ++i) pw /= 2;
    CHECK(coeff(v, 2 * g - 2) == (pw - 1) * B[2 * g] / factorial(static_cast<unsigned>(2 * g)));
  }
}

TEST_CASE("multi-point invariants") {
  WaveCache cache;
  CHECK(invariant({0, 0}, {}, &cache).value == EpsLaurent::monomial(-2));
  CHECK(invariant({0, 0, 0}, {}, &cache).value == EpsLaurent::monomial(-2));
  CHECK(invariant({0, 1}, {}, &cache).value.is_zero());
  CHECK(invariant({1, 0}, {}, &cache).value.is_zero());
  CHECK(invariant({0, 2}, {}, &cache).value == invariant({2, 0}, {}, &cache).value);
  CHECK_THROWS(invariant({}));
  CHECK_THROWS(invariant({0, -1}));
}

TEST_CASE("two-point invariants do not depend on the region") {
  WaveCache cache;
  for (const auto& ks : std::vector<std::vector<int>>{{0, 0}, {1, 1}, {0, 2}, {1, 3}, {2, 2}}) {
    InvariantOptions a, b;
    a.region = {0, 1};
    b.region = {1, 0};
    CHECK(invariant(ks, a, &cache).value == invariant(ks, b, &cache).value);
  }
}

TEST_CASE("S_n coefficients agree with the assembled series") {
  WaveCache cache;
  const WaveData& w = cache.get(8);
  for (const auto& ks : std::vector<std::vector<int>>{{0, 0}, {1, 2}, {0, 0, 1}}) {
    std::vector<int> reg(ks.size());
    std::iota(reg.begin(), reg.end(), 0);
    const auto floors = target_floors(ks, reg);
    const MultiSeries s = sn_series(w, static_cast<int>(ks.size()), floors);
    std::vector<int> e;
    for (int k : ks) e.push_back(-(k + 2));
    CHECK(s.coeff(e) == sn_coefficient(w, ks));
  }
}

TEST_CASE("S_2 is symmetric") {
  WaveCache cache;
  const MultiSeries s = sn_series(cache.get(6), 2, {4, 8});
  CHECK(s.is_symmetric());
}

TEST_CASE("genus-degree decoding") {
  const GenusDegreeTable t2 = invariant_by_genus({{2}, kTau2});
  CHECK(t2.size() == 3);
  CHECK(t2.at({0, 2}) == Rat(1, 4));
  CHECK(t2.at({1, 1}) == Rat(1, 24));
  CHECK(t2.at({2, 0}) == Rat(7, 5760));
  CHECK(invariant_by_genus({{1}, EpsLaurent()}).empty());
  const GenusDegreeTable t0 = invariant_by_genus({{0}, kTau0});
  CHECK(t0.at({0, 1}) == 1);
  CHECK(t0.at({1, 0}) == Rat(-1, 24));
  CHECK_THROWS_AS(invariant_by_genus({{0}, EpsLaurent::monomial(-1)}), ConsistencyError);
  CHECK_THROWS_AS(invariant_by_genus({{1}, EpsLaurent::monomial(-2)}), ConsistencyError);
}

TEST_CASE("free energy") {
  const MiwaPolynomial f1 = free_energy(1);
  CHECK(f1.terms().size() == 1);
  CHECK(f1.coeff({0}) == kTau0);

  const MiwaPolynomial f2 = free_energy(2);
  CHECK(f2.coeff({0, 0}) == EpsLaurent::monomial(-2, Rat(1, 2)));
  CHECK(f2.coeff({1}).is_zero());

  const MiwaPolynomial f3 = free_energy(3);
  MiwaPolynomial known(true, 3);
  known.add({0}, kTau0);
  known.add({0, 0}, EpsLaurent::monomial(-2, Rat(1, 2)));
  known.add({0, 0, 0}, EpsLaurent::monomial(-2, Rat(1, 6)));
  known.add({2}, kTau2);
  CHECK(f3 == known);
  CHECK_THROWS(free_energy(0));
}

TEST_CASE("structural properties of small invariants") {
  WaveCache cache;
  InvariantOptions io;
  io.doubling_check = false;
  const std::vector<std::vector<int>> tuples = {{1, 1}, {0, 3}, {1, 2}, {2, 2}, {0, 1, 1}, {0, 0, 2}, {1, 1, 2}, {0, 0, 0, 2}};
  for (auto ks : tuples) {
    const int sum = std::accumulate(ks.begin(), ks.end(), 0);
    const EpsLaurent v = invariant(ks, io, &cache).value;
    if (sum % 2) CHECK(v.is_zero());
    for (const auto& [e, c] : v.terms()) {
      CHECK(e % 2 == 0);
      CHECK(e >= -2);
      CHECK(e <= sum);
    }
    for (const auto& [gd, c] : invariant_by_genus({ks, v})) CHECK(gd.second >= 0);
    std::reverse(ks.begin(), ks.end());
    CHECK(invariant(ks, io, &cache).value == v);
  }
}
