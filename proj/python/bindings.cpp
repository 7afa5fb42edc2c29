#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwp1/charlier.hpp"
#include "gwp1/errors.hpp"
#include "gwp1/invariants.hpp"
#include "gwp1/kontsevich.hpp"
#include "gwp1/selftest.hpp"
#include "gwp1/serialize.hpp"
#include "gwp1/wave.hpp"

namespace py = pybind11;
using namespace gwp1;

namespace {

// Results cross the boundary as JSON text; the Python layer decodes them.
std::string dump(const Json& j) { return j.dump(); }

Rat positive_rat(const std::string& s) {
  const Rat r = parse_rat(s);
  if (sgn(r) <= 0) throw std::invalid_argument("expected a positive rational, got " + s);
  return r;
}

std::string py_invariant(const std::vector<int>& ks, bool by_genus, int order) {
  InvariantOptions opt;
  opt.order = order;
  return dump(to_json(invariant(ks, opt), by_genus));
}

std::string py_wave(const std::string& which, int order) {
  if (which != "f" && which != "g") throw std::invalid_argument("which must be 'f' or 'g'");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  return dump(wave_to_json(solve_formal_wave(which == "f" ? 1 : -1, order).h));
}

std::string py_zmodel_log(int n, int degree) { return dump(to_json(zmodel_log_in_times(n, degree))); }

std::string py_orthogonality(int ell, int ell2, const std::string& a, const std::string& tol, long prec) {
  return dump(to_json(charlier_orthogonality_check(ell, ell2, positive_rat(a), BigFloat::from_string(tol, prec), prec)));
}

std::string py_scaling_limit(const std::string& zeta, int ell, const std::string& eps, const std::vector<int>& Ls,
                             long prec) {
  const ScalingLimitReport r =
      charlier_scaling_limit_check(BigFloat::from_string(zeta, prec), ell, positive_rat(eps), Ls, prec);
  Json j;
  j["target"] = decimal(r.target);
  j["rows"] = Json::array();
  for (const auto& row : r.rows) j["rows"].push_back(to_json(row));
  j["decreasing"] = r.decreasing;
  j["observed_rates"] = r.observed_rates;
  return dump(j);
}

std::string py_asymptotics(const std::string& z, const std::string& eps, int order, long prec) {
  const AsymptoticReport r = asymptotic_match_check(BigFloat::from_string(z, prec), positive_rat(eps), order, prec);
  Json j;
  j["numeric"] = decimal(r.numeric);
  j["formal"] = decimal(r.formal);
  j["abs_error"] = r.abs_error.to_string(6);
  j["rel_error"] = r.rel_error.to_string(6);
  j["error_ratio"] = r.ratio.to_string(6);
  return dump(j);
}

std::string py_charpoly(int L, const std::string& a, const std::vector<std::string>& us, long prec) {
  std::vector<BigFloat> u;
  for (const auto& s : us) u.push_back(BigFloat(parse_rat(s), prec));
  return decimal(char_poly_expectation(L, positive_rat(a), u, prec));
}

std::string py_selftest(const std::vector<std::string>& only, int degree) {
  SelftestOptions opt;
  opt.only = only;
  opt.degree = degree;
  Json out = Json::array();
  for (const auto& r : run_selftest(opt))
    out.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
  return dump(out);
}

}  // namespace

PYBIND11_MODULE(_gwp1, m) {
  m.doc() = "Stationary Gromov-Witten invariants of P^1 (native core)";
  auto base = py::register_exception<ComputationError>(m, "ComputationError", PyExc_ArithmeticError);
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.def("invariant", &py_invariant, py::arg("ks"), py::arg("by_genus") = false, py::arg("order") = 0);
  m.def("free_energy", [](int D) { return dump(to_json(free_energy(D))); }, py::arg("degree"));
  m.def("wave", &py_wave, py::arg("which"), py::arg("order") = 3);
  m.def("zmodel_log", &py_zmodel_log, py::arg("n"), py::arg("degree"));
  m.def("stabilization", [](int D) { return stabilization_check(D).ok; }, py::arg("degree"));
  m.def("charlier_orthogonality", &py_orthogonality, py::arg("ell"), py::arg("ell2"), py::arg("a") = "1",
        py::arg("tol") = "1e-20", py::arg("prec") = 128);
  m.def("charlier_scaling_limit", &py_scaling_limit, py::arg("zeta") = "0", py::arg("ell") = 0, py::arg("eps") = "1",
        py::arg("Ls") = std::vector<int>{20, 40, 80}, py::arg("prec") = 128);
  m.def("asymptotics", &py_asymptotics, py::arg("z") = "20", py::arg("eps") = "1", py::arg("order") = 3,
        py::arg("prec") = 128);
  m.def("charpoly_expectation", &py_charpoly, py::arg("L"), py::arg("a"), py::arg("us"), py::arg("prec") = 128);
  m.def("selftest", &py_selftest, py::arg("only") = std::vector<std::string>{}, py::arg("degree") = 3);
}
