#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gwp1/charlier.hpp"
#include "gwp1/errors.hpp"
#include "gwp1/invariants.hpp"
#include "gwp1/kontsevich.hpp"
#include "gwp1/selftest.hpp"
#include "gwp1/serialize.hpp"
#include "gwp1/wave.hpp"

using namespace gwp1;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + s + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& s, int min_value) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("not an integer: '" + item + "'");
    if (v < min_value) throw UsageError("value " + item + " is below " + std::to_string(min_value));
    out.push_back(v);
  }
  return out;
}

Rat parse_positive_rat(const std::string& s, const std::string& what) {
  Rat r;
  try {
    r = parse_rat(s);
  } catch (const std::exception&) {
    throw UsageError(what + " must be a rational such as 1 or 1/2, got '" + s + "'");
  }
  if (sgn(r) <= 0) throw UsageError(what + " must be positive");
  return r;
}

BigFloat parse_real(const std::string& s, long prec) {
  try {
    return BigFloat(parse_rat(s), prec);
  } catch (const std::exception&) {
  }
  try {
    return BigFloat::from_string(s, prec);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
}

struct Settings {
  std::string format = "json";
  std::string output;
  long prec = 128;

  // wave
  std::string which;
  int order = 3;
  // invariant
  std::string ks;
  bool by_genus = false;
  int inv_order = 0;
  // free-energy / zmodel
  int degree = 3;
  int n = 0;
  bool miwa = false;
  bool stabilization = false;
  // charlier
  std::string check;
  std::string eps = "1";
  std::string a = "1";
  std::string Ls;
  std::string us = "3,-7/5";
  std::string zeta = "0";
  std::string z = "20";
  std::string tol;
  int ell = 4;
  int M = 3;
  // selftest
  std::vector<std::string> only;
  bool st_json = false;
  bool timings = false;
};

int emit(const Settings& s, const Json& j) {
  const std::string text = render(j, parse_format(s.format));
  if (s.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(s.output, std::ios::binary);
    if (!f) throw ComputationError("cannot write " + s.output);
    f << text;
  }
  return kOk;
}

int cmd_wave(const Settings& s, bool oracle) {
  if (s.order < 0) throw UsageError("--order must be nonnegative");
  if (oracle) return emit(s, wave_to_json(stirling_g_oracle(s.order).h));
  if (s.which != "f" && s.which != "g") throw UsageError("--which must be f or g");
  return emit(s, wave_to_json(solve_formal_wave(s.which == "f" ? 1 : -1, s.order).h));
}

int cmd_invariant(const Settings& s) {
  const std::vector<int> ks = parse_int_list(s.ks, 0);
  InvariantOptions opt;
  opt.order = s.inv_order;
  return emit(s, to_json(invariant(ks, opt), s.by_genus));
}

int cmd_free_energy(const Settings& s) {
  if (s.degree < 1) throw UsageError("--degree must be at least 1");
  return emit(s, to_json(free_energy(s.degree)));
}

int cmd_zmodel(const Settings& s) {
  if (s.degree < 1) throw UsageError("--degree must be at least 1");
  if (s.stabilization) {
    const StabilizationReport r = stabilization_check(s.degree);
    Json j;
    j["degree"] = s.degree;
    j["n"] = Json::array({s.degree + 1, s.degree + 2});
    j["stable"] = r.ok;
    j["differing"] = r.differing;
    j["log"] = to_json(r.smaller);
    emit(s, j);
    return r.ok ? kOk : kFailure;
  }
  const int N = s.n > 0 ? s.n : s.degree + 1;
  if (N <= s.degree) throw UsageError("--n must exceed --degree");
  Json j;
  j["n"] = N;
  j["degree"] = s.degree;
  if (s.miwa)
    j["log"] = to_json(zmodel_log_in_times(N, s.degree));
  else
    j["expansion"] = to_json(zmodel_expansion(N, s.degree).quotient);
  return emit(s, j);
}

int cmd_charlier(const Settings& s) {
  const long p = s.prec;
  if (p < 16) throw UsageError("--prec must be at least 16");
  const Rat eps = parse_positive_rat(s.eps, "--eps");
  const Rat a = parse_positive_rat(s.a, "--a");
  Json j;
  j["check"] = s.check;
  j["prec"] = p;
  Json rows = Json::array();
  bool ok = true;

  if (s.check == "orthogonality") {
    if (s.ell < 0) throw UsageError("--ell must be nonnegative");
    const BigFloat tol = parse_real(s.tol.empty() ? "1e-20" : s.tol, p);
    j["a"] = to_string(a);
    j["tol"] = tol.to_string(6);
    for (int l = 0; l <= s.ell; ++l)
      for (int m = 0; m <= s.ell; ++m) {
        const NumericRow r = charlier_orthogonality_check(l, m, a, tol, p);
        ok = ok && r.ok;
        rows.push_back(to_json(r));
      }
  } else if (s.check == "limit") {
    const std::vector<int> Ls = parse_int_list(s.Ls.empty() ? "20,40,80" : s.Ls, 1);
    const ScalingLimitReport r = charlier_scaling_limit_check(parse_real(s.zeta, p), s.ell, eps, Ls, p);
    j["eps"] = to_string(eps);
    j["zeta"] = s.zeta;
    j["ell"] = s.ell;
    j["target"] = decimal(r.target);
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    j["decreasing"] = r.decreasing;
    j["observed_rates"] = r.observed_rates;
    ok = r.decreasing;
  } else if (s.check == "charpoly") {
    const std::vector<int> Ls = parse_int_list(s.Ls.empty() ? "1,2" : s.Ls, 1);
    std::vector<BigFloat> us;
    for (const auto& u : split_list(s.us)) us.push_back(parse_real(u, p));
    const BigFloat tol = parse_real(s.tol.empty() ? "1e-15" : s.tol, p);
    j["a"] = to_string(a);
    j["u"] = split_list(s.us);
    for (int L : Ls) {
      NumericRow row;
      row.input = "L=" + std::to_string(L) + ",N=" + std::to_string(us.size());
      row.value = char_poly_expectation(L, a, us, p);
      const BruteForceResult bf = brute_force_expectation(L, a, us, tol / BigFloat(1000L, p), p);
      row.target = bf.value;
      row.bound = bf.bound;
      row.abs_error = abs(row.value - row.target);
      row.ok = row.abs_error <= tol;
      ok = ok && row.ok;
      rows.push_back(to_json(row));
    }
  } else if (s.check == "asymptotics") {
    if (s.M < 0) throw UsageError("--M must be nonnegative");
    const BigFloat z = parse_real(s.z, p);
    const AsymptoticReport r = asymptotic_match_check(z, eps, s.M, p);
    j["eps"] = to_string(eps);
    j["M"] = s.M;
    NumericRow row;
    row.input = "z=" + s.z;
    row.value = r.numeric;
    row.target = r.formal;
    row.abs_error = r.abs_error;
    row.bound = BigFloat(0L, p);
    row.ok = true;
    rows.push_back(to_json(row));
    j["rel_error"] = r.rel_error.to_string(6);
    j["abs_error_2z"] = r.abs_error_2z.to_string(6);
    j["error_ratio"] = r.ratio.to_string(6);
    j["expected_ratio"] = 1L << (s.M + 1);
    const BigFloat expect(static_cast<long>(1L << (s.M + 1)), p);
    ok = r.ratio >= expect / BigFloat(2L, p) && r.ratio <= expect * BigFloat(2L, p);
  } else {
    throw UsageError("--check must be one of orthogonality, limit, charpoly, asymptotics");
  }
  j["rows"] = std::move(rows);
  j["ok"] = ok;
  emit(s, j);
  return ok ? kOk : kFailure;
}

int cmd_selftest(const Settings& s) {
  SelftestOptions opt;
  opt.only = s.only;
  opt.degree = s.degree;
  opt.prec = s.prec;
  const std::vector<CheckResult> results = run_selftest(opt);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (s.st_json || s.format != "text") {
    Json j;
    Json checks = Json::array();
    for (const auto& r : results) {
      Json c;
      c["name"] = r.name;
      c["pass"] = r.pass;
      c["detail"] = r.detail;
      if (s.timings) c["seconds"] = r.seconds;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["passed"] = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    j["total"] = results.size();
    Settings js = s;
    if (s.st_json) js.format = "json";
    emit(js, j);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.pass ? "PASS  " : "FAIL  ") << r.name;
      if (s.timings) os << "  (" << r.seconds << " s)";
      os << "  " << r.detail << '\n';
    }
    if (s.output.empty())
      std::cout << os.str();
    else
      std::ofstream(s.output) << os.str();
  }
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stationary Gromov-Witten invariants of P^1: wave expansions, residue formulas, matrix model, numerics"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file (same names as the flags)");
  Settings s;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("-o,--output", s.output, "Write output to this file instead of stdout");
  app.add_option("--prec", s.prec, "Working precision in bits for numeric commands")
      ->envname("GWP1_PREC")
      ->capture_default_str();

  auto* wave = app.add_subcommand("wave", "Formal expansion (eps z/e)^(+-z)(1 + a_1/z + ...) of f or g");
  wave->add_option("--which", s.which, "f (sigma = +1) or g (sigma = -1)")->required()->check(CLI::IsMember({"f", "g"}));
  wave->add_option("--order", s.order, "Number of 1/z terms")->capture_default_str();

  auto* oracle = app.add_subcommand("wave-oracle", "Expansion of g from the Bessel and Stirling series");
  oracle->add_option("--order", s.order, "Number of 1/z terms")->capture_default_str();

  auto* inv = app.add_subcommand("invariant", "One stationary invariant <tau_k1 ... tau_kn>");
  inv->add_option("--ks", s.ks, "Comma-separated indices, e.g. 0,0,2")->required();
  inv->add_flag("--by-genus", s.by_genus, "Also split the value by genus and degree");
  inv->add_option("--order", s.inv_order, "Truncation order (0: automatic)");

  auto* fe = app.add_subcommand("free-energy", "Generating function in scaled times up to degree D");
  fe->add_option("--degree", s.degree, "Degree bound D")->capture_default_str();

  auto* zm = app.add_subcommand("zmodel", "Determinantal expansion Z_N");
  zm->add_option("--n", s.n, "Matrix size N (default degree + 1)");
  zm->add_option("--degree", s.degree, "Degree bound D")->capture_default_str();
  zm->add_flag("--miwa", s.miwa, "Output log Z_N in scaled times");
  zm->add_flag("--check-stabilization", s.stabilization, "Compare N = D + 1 with N = D + 2");

  auto* ch = app.add_subcommand("charlier", "Numeric checks for the Charlier ensemble and Bessel asymptotics");
  ch->add_option("--check", s.check, "Which check")
      ->required()
      ->check(CLI::IsMember({"orthogonality", "limit", "charpoly", "asymptotics"}));
  ch->add_option("--eps", s.eps, "eps as p/q")->capture_default_str();
  ch->add_option("--a", s.a, "Poisson parameter a as p/q")->capture_default_str();
  ch->add_option("--L", s.Ls, "Comma-separated sizes (limit: 20,40,80; charpoly: 1,2)");
  ch->add_option("--u", s.us, "Comma-separated u values for charpoly")->capture_default_str();
  ch->add_option("--zeta", s.zeta, "zeta for the scaling limit")->capture_default_str();
  ch->add_option("--ell", s.ell, "Degree offset (limit) or largest degree (orthogonality)")->capture_default_str();
  ch->add_option("--z", s.z, "Evaluation point for asymptotics")->capture_default_str();
  ch->add_option("--M", s.M, "Truncation order for asymptotics")->capture_default_str();
  ch->add_option("--tol", s.tol, "Tolerance");
  ch->add_option("--prec", s.prec, "Working precision in bits")->envname("GWP1_PREC");

  auto* st = app.add_subcommand("selftest", "Run the acceptance checks");
  st->add_option("--only", s.only, "Run only these checks")->delimiter(',');
  st->add_option("--degree", s.degree, "Degree for the free-energy and stabilization checks")->capture_default_str();
  st->add_flag("--json", s.st_json, "Machine-readable output");
  st->add_flag("--timings", s.timings, "Include wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  // Selftest defaults to a table unless a format was asked for.
  if (st->parsed() && app.count("--format") == 0) s.format = "text";

  try {
    if (wave->parsed()) return cmd_wave(s, false);
    if (oracle->parsed()) return cmd_wave(s, true);
    if (inv->parsed()) return cmd_invariant(s);
    if (fe->parsed()) return cmd_free_energy(s);
    if (zm->parsed()) return cmd_zmodel(s);
    if (ch->parsed()) return cmd_charlier(s);
    if (st->parsed()) return cmd_selftest(s);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
