#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pctoeplitz/bmo.hpp"
#include "pctoeplitz/errors.hpp"
#include "pctoeplitz/experiments.hpp"
#include "pctoeplitz/hardy.hpp"
#include "pctoeplitz/spectra.hpp"
#include "pctoeplitz/symbol_io.hpp"

namespace py = pybind11;
using namespace pctoeplitz;

namespace {

using Coeffs = std::pair<int, std::vector<complex>>;

CoefficientSequence to_seq(const Coeffs& c) { return {c.first, c.second}; }

Coeffs from_seq(const CoefficientSequence& c) {
  return {c.k_min(), std::vector<complex>(c.values().begin(), c.values().end())};
}

py::dict segment_dict(const SpectrumSegment& s) {
  py::dict d;
  d["kind"] = s.provenance == Provenance::RangePiece ? "range" : "arc";
  d["index"] = s.index;
  d["jump_t"] = s.jump_t;
  d["points"] = s.curve.points;
  d["parameters"] = s.parameters;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Toeplitz operators with piecewise continuous symbols";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InSpectrumError>(m, "InSpectrumError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  py::class_<PiecewiseSymbol>(m, "Symbol")
      .def(py::init([](const std::vector<std::tuple<double, double, Coeffs>>& pieces) {
             std::vector<Piece> ps;
             for (const auto& [s, e, c] : pieces) ps.push_back({s, e, to_seq(c)});
             return PiecewiseSymbol::make(std::move(ps));
           }),
           py::arg("pieces"), "pieces: [(start, end, (k_min, [coefficients]))], angles in radians")
      .def_static("trig_polynomial", [](const Coeffs& c) { return PiecewiseSymbol::trig_polynomial(to_seq(c)); })
      .def_static("sign", &sign_symbol)
      .def_static("from_json", [](const std::string& text) { return to_symbol(parse_symbol_file(text)); })
      .def_static("from_file", [](const std::string& path) { return to_symbol(read_symbol_file(path)); })
      .def("to_json", [](const PiecewiseSymbol& s) { return serialize_symbol_file(to_symbol_file(s)); })
      .def("__call__", &PiecewiseSymbol::evaluate, py::arg("theta"))
      .def("one_sided_limits", &PiecewiseSymbol::one_sided_limits)
      .def_property_readonly("jumps",
                             [](const PiecewiseSymbol& s) {
                               std::vector<std::tuple<double, complex, complex>> out;
                               for (const auto& j : s.jumps()) out.emplace_back(j.t, j.left_limit, j.right_limit);
                               return out;
                             })
      .def("fourier_coefficients",
           [](const PiecewiseSymbol& s, int k_min, int k_max) { return from_seq(s.fourier_coefficients(k_min, k_max)); })
      .def("shifted", &PiecewiseSymbol::shifted)
      .def("__len__", [](const PiecewiseSymbol& s) { return s.pieces().size(); });

  m.def("riesz_project", [](const Coeffs& c) { return from_seq(riesz_project(to_seq(c))); });
  m.def("complementary_project", [](const Coeffs& c) { return from_seq(complementary_project(to_seq(c))); });
  m.def("cauchy_singular", [](const Coeffs& c) { return from_seq(cauchy_singular(to_seq(c))); });
  m.def("toeplitz_section", [](const PiecewiseSymbol& s, int n) { return toeplitz_section(s, n).entries; });
  m.def("apply_toeplitz", [](const PiecewiseSymbol& s, const std::vector<complex>& f, int out_degree) {
    return from_seq(apply_toeplitz(s, CoefficientSequence(0, f), out_degree)).second;
  });
  m.def("hardy_norm", [](const std::vector<complex>& f, double p, int grid) {
    return hardy_norm(CoefficientSequence(0, f), p, grid);
  });
  m.def("poisson_extension", [](const PiecewiseSymbol& s, double r, double theta) {
    return poisson_extension(s, r, theta, poisson_cutoff(r));
  });

  m.def("essential_spectrum",
        [](const PiecewiseSymbol& s, double p, int resolution) {
          py::list out;
          for (const auto& seg : essential_spectrum(s, p, resolution).segments) out.append(segment_dict(seg));
          return out;
        },
        py::arg("symbol"), py::arg("p") = 2.0, py::arg("resolution") = 256);
  m.def("is_in_essential_spectrum", &is_in_essential_spectrum, py::arg("symbol"), py::arg("p"), py::arg("lam"),
        py::arg("tol") = kCurveDistanceTolerance);
  m.def("fredholm_index", &fredholm_index, py::arg("symbol"), py::arg("p"), py::arg("lam"),
        py::arg("resolution") = 1024);
  m.def("arc_points", [](complex zm, complex zp, double p, int m) { return arc_points({zm, zp, p}, m).points; });
  m.def("arc_membership", [](complex zm, complex zp, double p, complex zeta, double tol) {
    return arc_membership({zm, zp, p}, zeta, tol);
  }, py::arg("z_minus"), py::arg("z_plus"), py::arg("p"), py::arg("zeta"), py::arg("tol") = kArcAngleTolerance);

  m.def("bmo_log_seminorm", [](const std::vector<complex>& v) { return bmo_log_seminorm(GridFunction(v)); });
  m.def("bmo_seminorm", [](const std::vector<complex>& v) { return bmo_seminorm(GridFunction(v)); });
  m.def("complementary_part_samples",
        [](const PiecewiseSymbol& s, int n) { return GridFunction::complementary_part(s, n).values(); });
  m.def("h1_boundedness_verdict", [](const PiecewiseSymbol& s) {
    const auto v = h1_boundedness_verdict(s);
    return std::make_pair(to_string(v.kind), v.certificate);
  });

  m.def("h1_growth_experiment", [](const PiecewiseSymbol& s, const std::vector<int>& n_list) {
    std::vector<std::pair<int, double>> rows;
    for (const auto& r : h1_growth_experiment(s, n_list)) rows.emplace_back(r.n, r.ratio);
    return rows;
  });
  m.def("finite_section_probe", [](const PiecewiseSymbol& s, complex lam, const std::vector<int>& n_list) {
    std::vector<std::pair<int, double>> rows;
    for (const auto& r : finite_section_probe(s, lam, n_list)) rows.emplace_back(r.n, r.sigma_min);
    return rows;
  });
}
