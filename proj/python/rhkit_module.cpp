#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rhkit/cauchy.hpp"
#include "rhkit/curve.hpp"
#include "rhkit/errors.hpp"
#include "rhkit/lipschitz.hpp"
#include "rhkit/rh_elliptic.hpp"
#include "rhkit/rh_scalar.hpp"
#include "rhkit/rh_vector.hpp"
#include "rhkit/version.hpp"

namespace py = pybind11;
using namespace rhkit;

PYBIND11_MODULE(rhkit, m) {
  m.doc() = "Boundary transforms, transmission-problem solvers, and sampled "
            "Lipschitz utilities on closed curves";
  m.attr("__version__") = library_version;

  // Malformed problems surface as ValueError, uncertifiable numerics as
  // RuntimeError (matching the CLI's exit codes 1 and 2).
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<ClosedCurve>(m, "ClosedCurve")
      .def_static("unit_circle", &ClosedCurve::unit_circle, py::arg("n"))
      .def_static("fourier", &ClosedCurve::fourier, py::arg("coeffs"), py::arg("n"))
      .def_readonly("n", &ClosedCurve::n)
      .def_readonly("z", &ClosedCurve::z)
      .def_readonly("dz", &ClosedCurve::dz)
      .def("diameter", &ClosedCurve::diameter)
      .def("mesh_width", &ClosedCurve::mesh_width)
      .def("centroid", &ClosedCurve::centroid)
      .def("__repr__", [](const ClosedCurve& c) {
        return "ClosedCurve(n=" + std::to_string(c.n) + ")";
      });

  m.def("winding_number", &winding_number, py::arg("curve"), py::arg("p"));

  py::class_<BoundaryFunction>(m, "BoundaryFunction")
      .def(py::init<int, std::vector<cd>>(), py::arg("r"), py::arg("values"))
      .def_static("scalar", &BoundaryFunction::scalar, py::arg("values"))
      .def_readonly("r", &BoundaryFunction::r)
      .def_readonly("values", &BoundaryFunction::values)
      .def("nodes", &BoundaryFunction::nodes)
      .def("at", [](const BoundaryFunction& u, int k, int i, int j) { return u.at(k, i, j); },
           py::arg("k"), py::arg("i") = 0, py::arg("j") = 0);

  py::class_<OffCurveValue>(m, "OffCurveValue")
      .def_readonly("value", &OffCurveValue::value)
      .def_readonly("low_accuracy", &OffCurveValue::low_accuracy)
      .def_readonly("distance", &OffCurveValue::distance);
  m.def("cauchy_offcurve", &cauchy_offcurve, py::arg("curve"), py::arg("u"), py::arg("z"));

  py::class_<BoundaryPair>(m, "BoundaryPair")
      .def_readonly("minus", &BoundaryPair::minus)
      .def_readonly("plus", &BoundaryPair::plus);
  m.def("boundary_values", &boundary_values, py::arg("curve"), py::arg("u"));
  m.def("plemelj_residual", &plemelj_residual, py::arg("curve"), py::arg("u"));
  m.def("value_at_infinity", &value_at_infinity, py::arg("curve"), py::arg("u"));

  m.def("degree", &degree, py::arg("curve"), py::arg("f"));
  m.def("continuous_log", &continuous_log, py::arg("curve"), py::arg("q"));

  py::class_<ScalarFactorization>(m, "ScalarFactorization")
      .def_readonly("f", &ScalarFactorization::f)
      .def_readonly("cm", &ScalarFactorization::cm)
      .def_readonly("cp", &ScalarFactorization::cp)
      .def_readonly("defect", &ScalarFactorization::defect);
  m.def("factorize_scalar", &factorize_scalar, py::arg("curve"), py::arg("f_minus"),
        py::arg("f_plus"));

  py::class_<ModuliSplit>(m, "ModuliSplit")
      .def_readonly("class_minus", &ModuliSplit::class_minus)
      .def_readonly("class_plus", &ModuliSplit::class_plus);
  m.def("moduli_split", &moduli_split, py::arg("curve"), py::arg("f"), py::arg("e"),
        py::arg("basepoint"));

  py::enum_<Side>(m, "Side")
      .value("Interior", Side::Interior)
      .value("Exterior", Side::Exterior);
  py::class_<ClassEquivalence>(m, "ClassEquivalence")
      .def_readonly("equivalent", &ClassEquivalence::equivalent)
      .def_readonly("defect", &ClassEquivalence::defect);
  m.def("class_equiv", &class_equiv, py::arg("curve"), py::arg("f"), py::arg("g"),
        py::arg("side"), py::arg("tol") = 0.0);

  py::class_<CollocationOptions>(m, "CollocationOptions")
      .def(py::init<>())
      .def_readwrite("truncation", &CollocationOptions::truncation)
      .def_readwrite("tol", &CollocationOptions::tol)
      .def_readwrite("gap", &CollocationOptions::gap)
      .def_readwrite("use_centroid", &CollocationOptions::use_centroid)
      .def_readwrite("center", &CollocationOptions::center);

  py::class_<ScalarRHReport>(m, "ScalarRHReport")
      .def_readonly("index", &ScalarRHReport::index)
      .def_readonly("homogeneous_dimension", &ScalarRHReport::homogeneous_dimension)
      .def_readonly("solvable", &ScalarRHReport::solvable)
      .def_readonly("residual", &ScalarRHReport::residual)
      .def_readonly("affine_dimension", &ScalarRHReport::affine_dimension)
      .def_readonly("interior_coeffs", &ScalarRHReport::interior_coeffs)
      .def_readonly("exterior_coeffs", &ScalarRHReport::exterior_coeffs);
  m.def("solve_scalar_rh", &solve_scalar_rh, py::arg("curve"), py::arg("upsilon"),
        py::arg("m"), py::arg("d"), py::arg("gamma_tilde"),
        py::arg("opts") = CollocationOptions{});

  py::class_<JumpDatum>(m, "JumpDatum")
      .def_readonly("rho", &JumpDatum::rho)
      .def_readonly("det_degree", &JumpDatum::det_degree);
  m.def("make_jump", &make_jump, py::arg("curve"), py::arg("rho"));

  m.def("h0_dimension", &h0_dimension, py::arg("curve"), py::arg("jump"), py::arg("m"),
        py::arg("opts") = CollocationOptions{});

  py::class_<H0Basis>(m, "H0Basis")
      .def_readonly("dimension", &H0Basis::dimension)
      .def_readonly("interior", &H0Basis::interior)
      .def_readonly("exterior", &H0Basis::exterior);
  m.def("h0_basis", &h0_basis, py::arg("curve"), py::arg("jump"), py::arg("m"),
        py::arg("opts") = CollocationOptions{});

  py::class_<StaircaseRow>(m, "StaircaseRow")
      .def_readonly("m", &StaircaseRow::m)
      .def_readonly("dim", &StaircaseRow::dim);
  py::class_<SplittingResult>(m, "SplittingResult")
      .def_readonly("indices", &SplittingResult::indices)
      .def_readonly("staircase", &SplittingResult::staircase);
  m.def("splitting_type", &splitting_type, py::arg("curve"), py::arg("jump"),
        py::arg("opts") = CollocationOptions{});

  py::class_<RHSolveReport>(m, "RHSolveReport")
      .def_readonly("solvable", &RHSolveReport::solvable)
      .def_readonly("residual", &RHSolveReport::residual)
      .def_readonly("affine_dimension", &RHSolveReport::affine_dimension)
      .def_readonly("interior_coeffs", &RHSolveReport::interior_coeffs)
      .def_readonly("exterior_coeffs", &RHSolveReport::exterior_coeffs)
      .def_readonly("m", &RHSolveReport::m)
      .def_readonly("d", &RHSolveReport::d)
      .def_readonly("gamma_tilde", &RHSolveReport::gamma_tilde)
      .def_readonly("truncation", &RHSolveReport::truncation)
      .def_readonly("tol", &RHSolveReport::tol)
      .def_readonly("center", &RHSolveReport::center);
  m.def("solve_rh", &solve_rh, py::arg("curve"), py::arg("jump"), py::arg("m"),
        py::arg("d"), py::arg("gamma_tilde"), py::arg("opts") = CollocationOptions{});

  m.def("sl2_stratum", &sl2_stratum, py::arg("curve"), py::arg("jump"),
        py::arg("opts") = CollocationOptions{}, py::arg("det_tol") = 1e-8);

  py::class_<EllipticProblem>(m, "EllipticProblem")
      .def_static("create", &EllipticProblem::create, py::arg("alpha"), py::arg("s_plus"),
                  py::arg("f_plus"), py::arg("f_minus"))
      .def_readonly("alpha", &EllipticProblem::alpha)
      .def_readonly("s_plus", &EllipticProblem::s_plus)
      .def_readonly("f_plus", &EllipticProblem::f_plus)
      .def_readonly("f_minus", &EllipticProblem::f_minus)
      .def_readonly("n", &EllipticProblem::n);
  m.def("elliptic_phi", &elliptic_phi, py::arg("problem"));
  m.def("elliptic_psi", &elliptic_psi, py::arg("problem"), py::arg("phi"), py::arg("z"),
        py::arg("tol") = 1e-10);

  py::class_<EllipticFactorization>(m, "EllipticFactorization")
      .def_readonly("lambda_", &EllipticFactorization::lambda)
      .def_readonly("g_plus", &EllipticFactorization::g_plus)
      .def_readonly("g_minus", &EllipticFactorization::g_minus)
      .def_readonly("residual", &EllipticFactorization::residual)
      .def_readonly("identity_defect", &EllipticFactorization::identity_defect);
  m.def("elliptic_factorize", &elliptic_factorize, py::arg("problem"),
        py::arg("tol") = 1e-10);

  py::class_<HolderDatum>(m, "HolderDatum")
      .def(py::init([](std::vector<double> xs, std::vector<double> fs, double alpha) {
             HolderDatum d;
             d.xs = std::move(xs);
             d.fs = std::move(fs);
             d.alpha = alpha;
             return d;
           }),
           py::arg("xs"), py::arg("fs"), py::arg("alpha") = 0.5)
      .def_readwrite("xs", &HolderDatum::xs)
      .def_readwrite("fs", &HolderDatum::fs)
      .def_readwrite("alpha", &HolderDatum::alpha);
  m.def("holder_seminorm", &holder_seminorm, py::arg("datum"));

  py::class_<GlueResult>(m, "GlueResult")
      .def_readonly("glued", &GlueResult::glued)
      .def_readonly("m_minus", &GlueResult::m_minus)
      .def_readonly("m_plus", &GlueResult::m_plus)
      .def_readonly("m_glued", &GlueResult::m_glued)
      .def_readonly("bound_constant", &GlueResult::bound_constant)
      .def_readonly("bound_ok", &GlueResult::bound_ok);
  m.def("glue_half_lines", &glue_half_lines, py::arg("f_minus"), py::arg("f_plus"),
        py::arg("alpha"));

  py::class_<JetDatum>(m, "JetDatum")
      .def(py::init([](std::vector<double> coefficients) {
             JetDatum d;
             d.coefficients = std::move(coefficients);
             return d;
           }),
           py::arg("coefficients"))
      .def_readwrite("coefficients", &JetDatum::coefficients);
  py::class_<JetExtension>(m, "JetExtension")
      .def_readonly("coefficients", &JetExtension::coefficients)
      .def_readonly("halfwidth", &JetExtension::halfwidth)
      .def("__call__", &JetExtension::operator(), py::arg("x"))
      .def("sample", &JetExtension::sample, py::arg("n") = 512, py::arg("alpha") = 0.5);
  m.def("jet_extend_1d", &jet_extend_1d, py::arg("jet"), py::arg("halfwidth"));
}
