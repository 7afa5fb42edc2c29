#include "doctest.h"
#include "gwp1/serialize.hpp"

using namespace gwp1;

TEST_CASE("eps Laurent JSON") {
  EpsLaurent p = EpsLaurent::monomial(-2);
  p.add_term(0, Rat(-1, 24));
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"-2":"1","0":"-1/24"})");
  CHECK(eps_laurent_from_json(j) == p);
  CHECK(to_json(EpsLaurent()).dump() == "{}");
  CHECK_THROWS(eps_laurent_from_json(Json::array()));
}

TEST_CASE("ZSeries JSON round trip") {
  ZSeries s(1, 4);
  s.set_coeff(1, EpsLaurent::monomial(1));
  s.set_coeff(-2, EpsLaurent(Rat(3, 7)));
  const Json j = to_json(s);
  CHECK(j["order"] == 4);
  const ZSeries back = zseries_from_json(j);
  CHECK(back.order() == 4);
  CHECK(back.top() == 1);
  CHECK(equal_on_common_window(back, s));
  const Json e = to_json(ZSeries::constant(EpsLaurent(2L)));
  CHECK(e["order"].is_null());
  CHECK(zseries_from_json(e).exact());
}

TEST_CASE("MultiSeries JSON round trip") {
  const MultiSeries m = expand_inverse_difference(0, 1, 2, {1, 0}, 3);
  const MultiSeries back = multiseries_from_json(to_json(m));
  CHECK(back.region() == m.region());
  CHECK(back.floors() == m.floors());
  CHECK(equal_on_common_window(back, m));
  CHECK(back.terms() == m.terms());
}

TEST_CASE("wave and invariant JSON") {
  ZSeries h = ZSeries::constant(EpsLaurent(1L), 1);
  h.set_coeff(-1, EpsLaurent::monomial(-2) - EpsLaurent(Rat(1, 24)));
  CHECK(wave_to_json(h).dump() == R"({"0":{"0":"1"},"-1":{"-2":"1","0":"-1/24"}})");

  EpsLaurent v = EpsLaurent::monomial(-2, Rat(1, 4));
  v.add_term(0, Rat(1, 24));
  v.add_term(2, Rat(7, 5760));
  const Json r = to_json(InvariantRecord{{2}, v}, true);
  CHECK(r["ks"] == Json::array({2}));
  CHECK(r["by_genus"]["0,2"] == "1/4");
  CHECK(r["by_genus"]["1,1"] == "1/24");
  CHECK(r["by_genus"]["2,0"] == "7/5760");
  CHECK_FALSE(to_json(InvariantRecord{{2}, v}).contains("by_genus"));
}

TEST_CASE("Miwa polynomial JSON") {
  MiwaPolynomial p(true, 3);
  p.add({0, 0}, EpsLaurent::monomial(-2, Rat(1, 2)));
  const Json j = to_json(p);
  CHECK(j["scaled"] == true);
  CHECK(j["degree_bound"] == 3);
  CHECK(j["terms"][0]["t"] == Json::array({0, 0}));
  CHECK(j["terms"][0]["val"]["-2"] == "1/2");
}

TEST_CASE("numeric rows and decimals") {
  const BigFloat x = BigFloat::from_string("0.125", 64);
  CHECK(std::stod(decimal(x)) == 0.125);
  NumericRow row{"L=20", x, x, BigFloat(0L, 64), BigFloat(0L, 64), true};
  const Json j = to_json(row);
  CHECK(j["input"] == "L=20");
  CHECK(j["ok"] == true);
}

TEST_CASE("csv and text projections") {
  Json j;
  j["ks"] = Json::array({0, 0});
  j["value"] = Json{{"-2", "1"}};
  j["note"] = "a,b";
  CHECK(render(j, Format::csv) == "path,value\nks.0,0\nks.1,0\nvalue.-2,1\nnote,\"a,b\"\n");
  CHECK(render(j, Format::text) == "ks.0 = 0\nks.1 = 0\nvalue.-2 = 1\nnote = a,b\n");
  CHECK(render(j, Format::json) == j.dump(2) + "\n");
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS(parse_format("xml"));
}
