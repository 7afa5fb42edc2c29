#include "doctest.h"
#include "gwp1/invariants.hpp"
#include "gwp1/kontsevich.hpp"

using namespace gwp1;

namespace {

EpsLaurent eps_poly(std::initializer_list<std::pair<int, Rat>> terms) {
  EpsLaurent p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("N = 4 expansion coefficients") {
  const ZModelExpansion z = zmodel_expansion(4, 3);
  CHECK(z.N == 4);
  CHECK(z.D == 3);
  CHECK(z.quotient.coeff({0, 0, 0, 0}) == EpsLaurent(1L));
  // (24 - eps^2) / (24 eps^2)
  CHECK(z.quotient.coeff({-1, 0, 0, 0}) == eps_poly({{-2, Rat(1)}, {0, Rat(-1, 24)}}));
  CHECK(z.quotient.coeff({-2, 0, 0, 0}) == eps_poly({{-4, Rat(1, 2)}, {-2, Rat(11, 24)}, {0, Rat(1, 1152)}}));
  CHECK(z.quotient.coeff({-3, 0, 0, 0}) ==
        eps_poly({{-6, Rat(1, 6)}, {-4, Rat(47, 48)}, {-2, Rat(265, 1152)}, {0, Rat(1003, 414720)}}));
  CHECK(z.quotient.coeff({-2, -1, 0, 0}) ==
        eps_poly({{-6, Rat(1, 2)}, {-4, Rat(23, 16)}, {-2, Rat(169, 384)}, {0, Rat(-1, 27648)}}));
  CHECK(z.quotient.is_symmetric());
  CHECK_THROWS(zmodel_expansion(3, 3));
}

TEST_CASE("columns are monic") {
  for (int k = 1; k <= 6; ++k) {
    const ZSeries c = zmodel_entry(k, 4);
    CHECK(c.top() == k - 1);
    CHECK(c.coeff(k - 1) == EpsLaurent(1L));
  }
}

TEST_CASE("determinant does not depend on the row expansion order") {
  std::vector<ZSeries> cols;
  for (int k = 1; k <= 3; ++k) cols.push_back(zmodel_entry(k, 4));
  const MultiSeries a = column_determinant(cols, 3 - 2);
  const MultiSeries b = column_determinant(cols, 3 - 2, {2, 0, 1});
  CHECK(equal_on_common_window(a, b));
  CHECK(a.is_symmetric(-1));
}

TEST_CASE("log in Miwa times against the residue pipeline") {
  const MiwaPolynomial l1 = zmodel_log_in_times(4, 1);
  CHECK(l1.terms().size() == 1);
  CHECK(l1.coeff({0}) == eps_poly({{-2, Rat(1)}, {0, Rat(-1, 24)}}));
  CHECK(zmodel_log_in_times(2, 1) == free_energy(1));
  CHECK(zmodel_log_in_times(3, 2) == free_energy(2));
  CHECK(zmodel_log_in_times(4, 3) == free_energy(3));
}

TEST_CASE("the degree-4 part agrees as well") {
  CHECK(miwa_difference(zmodel_log_in_times(5, 4), free_energy(4)).empty());
}

TEST_CASE("stabilization") {
  for (int D = 1; D <= 3; ++D) {
    const StabilizationReport r = stabilization_check(D);
    CHECK(r.ok);
    CHECK(r.differing.empty());
    CHECK(r.smaller == r.larger);
  }
  CHECK(zmodel_log_in_times(4, 3) == zmodel_log_in_times(5, 3));
}

TEST_CASE("characteristic matrix determinant") {
  CHECK(characteristic_det_check(1, 1).ok);
  CHECK(characteristic_det_check(1, 4).ok);
  CHECK(characteristic_det_check(2, 4).ok);
  const CharDetReport r = characteristic_det_check(2, 4);
  CHECK(equal_on_common_window(r.det_g, r.det_ghat));
}
