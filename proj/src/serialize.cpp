#include "gwp1/serialize.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gwp1 {

namespace {

Json window_int(int v) { return v >= kUnbounded ? Json(nullptr) : Json(v); }

int window_from(const Json& j) { return j.is_null() ? kUnbounded : j.get<int>(); }

Json window_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(window_int(x));
  return a;
}

std::vector<int> window_list_from(const Json& j) {
  std::vector<int> v;
  for (const auto& x : j) v.push_back(window_from(x));
  return v;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  auto join = [&](const std::string& k) { return path.empty() ? k : path + "." + k; };
  if (j.is_object()) {
    if (j.empty()) out.emplace_back(path, "{}");
    for (const auto& [k, v] : j.items()) flatten(v, join(k), out);
  } else if (j.is_array()) {
    if (j.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], join(std::to_string(i)), out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

}  // namespace

Json to_json(const EpsLaurent& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_string(c);
  return j;
}

EpsLaurent eps_laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected an object of eps coefficients");
  EpsLaurent p;
  for (const auto& [k, v] : j.items()) p.add_term(std::stoi(k), parse_rat(v.get<std::string>()));
  return p;
}

Json to_json(const ZSeries& s) {
  Json j;
  j["vars"] = 1;
  j["top"] = Json::array({s.top()});
  j["order"] = window_int(s.order());
  Json coeffs = Json::array();
  const int lowest = s.exact() ? s.low() : std::max(s.low(), -s.order());
  for (int d = s.top(); d >= lowest; --d) {
    const EpsLaurent& c = s.coeff(d);
    if (c.is_zero()) continue;
    coeffs.push_back(Json{{"exp", Json::array({d})}, {"val", to_json(c)}});
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

ZSeries zseries_from_json(const Json& j) {
  if (j.at("vars").get<int>() != 1) throw std::invalid_argument("expected a one-variable series");
  ZSeries s(j.at("top").at(0).get<int>(), window_from(j.at("order")));
  for (const auto& t : j.at("coeffs")) s.set_coeff(t.at("exp").at(0).get<int>(), eps_laurent_from_json(t.at("val")));
  return s;
}

Json to_json(const MultiSeries& s) {
  Json j;
  j["vars"] = s.nvars();
  j["top"] = window_list(s.var_tops());
  j["order"] = window_int(s.floors().back());
  j["region"] = s.region();
  j["floors"] = window_list(s.floors());
  j["prefix_tops"] = window_list(s.prefix_tops());
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.terms()) coeffs.push_back(Json{{"exp", e}, {"val", to_json(c)}});
  j["coeffs"] = std::move(coeffs);
  return j;
}

MultiSeries multiseries_from_json(const Json& j) {
  MultiSeries s = MultiSeries::with_window(j.at("vars").get<int>(), j.at("region").get<std::vector<int>>(),
                                           window_list_from(j.at("floors")), window_list_from(j.at("prefix_tops")),
                                           window_list_from(j.at("top")));
  for (const auto& t : j.at("coeffs"))
    s.add_term(t.at("exp").get<std::vector<int>>(), eps_laurent_from_json(t.at("val")));
  return s;
}

Json wave_to_json(const ZSeries& s) {
  Json j = Json::object();
  const int lowest = s.exact() ? s.low() : std::max(s.low(), -s.order());
  for (int d = s.top(); d >= lowest; --d) j[std::to_string(d)] = to_json(s.coeff(d));
  return j;
}

Json to_json(const MiwaPolynomial& p) {
  Json j;
  j["scaled"] = p.scaled();
  j["degree_bound"] = p.degree_bound();
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"t", m}, {"val", to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const InvariantRecord& r, bool by_genus) {
  Json j;
  j["ks"] = r.ks;
  j["value"] = to_json(r.value);
  if (by_genus) {
    Json t = Json::object();
    for (const auto& [gd, c] : invariant_by_genus(r))
      t[std::to_string(gd.first) + "," + std::to_string(gd.second)] = to_string(c);
    j["by_genus"] = std::move(t);
  }
  return j;
}

std::string decimal(const BigFloat& x) {
  const int digits = static_cast<int>(std::ceil(static_cast<double>(x.precision()) * std::log10(2.0))) + 1;
  return x.to_string(digits);
}

Json to_json(const NumericRow& row) {
  Json j;
  j["input"] = row.input;
  j["value"] = decimal(row.value);
  j["target"] = decimal(row.target);
  j["abs_error"] = row.abs_error.to_string(6);
  j["bound"] = row.bound.to_string(6);
  j["ok"] = row.ok;
  return j;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + s);
}

std::string render(const Json& j, Format f) {
  if (f == Format::json) return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream os;
  if (f == Format::csv) {
    os << "path,value\n";
    for (const auto& [k, v] : rows) os << csv_escape(k) << ',' << csv_escape(v) << '\n';
  } else {
    for (const auto& [k, v] : rows) os << (k.empty() ? "value" : k) << " = " << v << '\n';
  }
  return os.str();
}

}  // namespace gwp1
