#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rhkit/cauchy.hpp"
#include "rhkit/curve.hpp"
#include "rhkit/errors.hpp"
#include "rhkit/json_io.hpp"
#include "rhkit/lipschitz.hpp"
#include "rhkit/rh_elliptic.hpp"
#include "rhkit/rh_scalar.hpp"
#include "rhkit/rh_vector.hpp"
#include "rhkit/version.hpp"

namespace {

using namespace rhkit;

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output = "-";
  double tol = 0.0;     // 0 = module default
  int truncation = 0;   // 0 = module default
  long long seed = 0;
  std::string csv;
  bool scalar = false;  // solve-rh only
};

ojson load_input(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw InputError("cannot open input file: " + cfg.input);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ojson::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
}

void write_output(const RunConfig& cfg, const ojson& report) {
  const std::string text = dump_deterministic(report);
  if (cfg.output == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + cfg.output);
  out << text;
}

void write_csv(const RunConfig& cfg, const std::string& text) {
  if (cfg.csv.empty()) return;
  std::ofstream out(cfg.csv, std::ios::binary);
  if (!out) throw InputError("cannot open csv file: " + cfg.csv);
  out << text;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ojson make_report(const RunConfig& cfg, double resolved_tol, int resolved_truncation) {
  ojson config;
  config["subcommand"] = cfg.subcommand;
  config["input"] = cfg.input;
  config["tol"] = resolved_tol;
  config["truncation"] = resolved_truncation;
  config["seed"] = cfg.seed;
  ojson report;
  report["version"] = library_version;
  report["config"] = std::move(config);
  return report;
}

CollocationOptions collocation_options(const RunConfig& cfg) {
  CollocationOptions opts;
  if (cfg.truncation > 0) opts.truncation = cfg.truncation;
  if (cfg.tol > 0.0) opts.tol = cfg.tol;
  return opts;
}

std::vector<cd> complex_list_from_json(const ojson& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("field \"") + what + "\" must be an array");
  std::vector<cd> out;
  out.reserve(j.size());
  for (const ojson& e : j) out.push_back(complex_from_json(e, what));
  return out;
}

ojson complex_list_to_json(const std::vector<cd>& v) {
  ojson out = ojson::array();
  for (const cd& z : v) out.push_back(complex_to_json(z));
  return out;
}

int run_cauchy(const RunConfig& cfg) {
  const ojson in = load_input(cfg);
  const ClosedCurve curve = curve_from_json(require_field(in, "curve"));
  const BoundaryFunction u = samples_from_json(require_field(in, "samples"));
  const BoundaryPair bv = boundary_values(curve, u);

  ojson report = make_report(cfg, 0.0, 0);
  report["curve"] = curve_to_json(curve);
  report["minus"] = samples_to_json(bv.minus);
  report["plus"] = samples_to_json(bv.plus);
  report["plemelj_residual"] = plemelj_residual(curve, u);
  report["at_infinity"] = matrix_to_json(value_at_infinity(curve, u), u.r);
  if (in.contains("points")) {
    ojson evals = ojson::array();
    for (const ojson& pj : in.at("points")) {
      const cd z = complex_from_json(pj, "entry of \"points\"");
      const OffCurveValue v = cauchy_offcurve(curve, u, z);
      ojson e;
      e["z"] = complex_to_json(z);
      e["value"] = matrix_to_json(v.value, u.r);
      e["distance"] = v.distance;
      e["low_accuracy"] = v.low_accuracy;
      evals.push_back(std::move(e));
    }
    report["offcurve"] = std::move(evals);
  }
  write_output(cfg, report);
  return 0;
}

int run_factorize_scalar(const RunConfig& cfg) {
  const ojson in = load_input(cfg);
  const ClosedCurve curve = curve_from_json(require_field(in, "curve"));
  const BoundaryFunction fm = samples_from_json(require_field(in, "f_minus"));
  const BoundaryFunction fp = samples_from_json(require_field(in, "f_plus"));
  const ScalarFactorization fac = factorize_scalar(curve, fm, fp);

  ojson report = make_report(cfg, 0.0, 0);
  report["curve"] = curve_to_json(curve);
  report["f"] = samples_to_json(fac.f);
  report["cm"] = samples_to_json(fac.cm);
  report["cp"] = samples_to_json(fac.cp);
  report["defect"] = fac.defect;
  write_output(cfg, report);
  return 0;
}

int run_indices(const RunConfig& cfg) {
  const ojson in = load_input(cfg);
  const ClosedCurve curve = curve_from_json(require_field(in, "curve"));
  const BoundaryFunction rho = samples_from_json(require_field(in, "rho"));
  const CollocationOptions opts = collocation_options(cfg);
  const JumpDatum jump = make_jump(curve, rho);
  const SplittingResult sp = splitting_type(curve, jump, opts);

  ojson report = make_report(cfg, opts.tol, opts.truncation);
  ojson splitting = ojson::array();
  for (int nj : sp.indices) splitting.push_back(nj);
  report["splitting"] = std::move(splitting);
  report["det_degree"] = jump.det_degree;
  ojson staircase = ojson::array();
  for (const StaircaseRow& row : sp.staircase) {
    ojson rj;
    rj["m"] = row.m;
    rj["dim"] = row.dim;
    staircase.push_back(std::move(rj));
  }
  report["staircase"] = std::move(staircase);
  write_output(cfg, report);

  std::string csv = "m,dim\n";
  for (const StaircaseRow& row : sp.staircase) {
    csv += std::to_string(row.m) + "," + std::to_string(row.dim) + "\n";
  }
  write_csv(cfg, csv);
  return 0;
}

int run_solve_rh(const RunConfig& cfg) {
  const ojson in = load_input(cfg);
  const ClosedCurve curve = curve_from_json(require_field(in, "curve"));
  const int m = require_int(in, "m");
  const int d = require_int(in, "d");
  std::vector<cd> gamma;
  if (in.contains("gamma_tilde")) {
    gamma = complex_list_from_json(in.at("gamma_tilde"), "gamma_tilde");
  }
  const CollocationOptions opts = collocation_options(cfg);

  if (cfg.scalar) {
    const BoundaryFunction upsilon = samples_from_json(require_field(in, "upsilon"));
    const ScalarRHReport rep = solve_scalar_rh(curve, upsilon, m, d, gamma, opts);
    ojson report = make_report(cfg, opts.tol, opts.truncation);
    report["index"] = rep.index;
    report["homogeneous_dimension"] = rep.homogeneous_dimension;
    report["solvable"] = rep.solvable;
    report["residual"] = rep.residual;
    report["affine_dimension"] = rep.affine_dimension;
    report["m"] = m;
    report["d"] = d;
    report["gamma_tilde"] = complex_list_to_json(gamma);
    report["interior_coeffs"] = complex_list_to_json(rep.interior_coeffs);
    report["exterior_coeffs"] = complex_list_to_json(rep.exterior_coeffs);
    write_output(cfg, report);
    return 0;
  }

  const BoundaryFunction rho = samples_from_json(require_field(in, "rho"));
  const JumpDatum jump = make_jump(curve, rho);
  const RHSolveReport rep = solve_rh(curve, jump, m, d, gamma, opts);
  ojson report = make_report(cfg, rep.tol, rep.truncation);
  report["solvable"] = rep.solvable;
  report["residual"] = rep.residual;
  report["affine_dimension"] = rep.affine_dimension;
  report["m"] = rep.m;
  report["d"] = rep.d;
  report["gamma_tilde"] = complex_list_to_json(rep.gamma_tilde);
  report["center"] = complex_to_json(rep.center);
  report["interior_coeffs"] = complex_list_to_json(rep.interior_coeffs);
  report["exterior_coeffs"] = complex_list_to_json(rep.exterior_coeffs);
  write_output(cfg, report);
  return 0;
}

int run_elliptic(const RunConfig& cfg) {
  const ojson in = load_input(cfg);
  const cd alpha = complex_from_json(require_field(in, "alpha"), "alpha");
  ClosedCurve curve = curve_from_json(require_field(in, "curve"));
  BoundaryFunction fp = samples_from_json(require_field(in, "f_plus"));
  BoundaryFunction fm = samples_from_json(require_field(in, "f_minus"));
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-10;
  const EllipticProblem p =
      EllipticProblem::create(alpha, std::move(curve), std::move(fp), std::move(fm));
  const EllipticFactorization fac = elliptic_factorize(p, tol);

  ojson report = make_report(cfg, tol, 0);
  report["alpha"] = complex_to_json(alpha);
  report["degree"] = p.n;
  report["lambda"] = complex_to_json(fac.lambda);
  report["residual"] = fac.residual;
  report["identity_defect"] = fac.identity_defect;
  report["g_plus"] = samples_to_json(fac.g_plus);
  report["g_minus"] = samples_to_json(fac.g_minus);
  write_output(cfg, report);

  if (!cfg.csv.empty()) {
    // The correction series on a polar grid of the annulus, for plotting.
    const BoundaryFunction phi = elliptic_phi(p);
    const double r0 = std::abs(alpha);
    const int nr = 9;
    const int na = 48;
    std::string csv = "radius,angle,re,im\n";
    for (int ir = 0; ir < nr; ++ir) {
      const double radius = r0 + (1.0 - r0) * ir / (nr - 1);
      for (int ia = 0; ia < na; ++ia) {
        const double angle = 2.0 * pi * ia / na;
        const cd z = radius * std::exp(cd(0.0, angle));
        const cd psi = elliptic_psi(p, phi, z, tol);
        csv += format_double(radius) + "," + format_double(angle) + "," +
               format_double(psi.real()) + "," + format_double(psi.imag()) + "\n";
      }
    }
    write_csv(cfg, csv);
  }
  return 0;
}

int run_moduli_roundtrip(const RunConfig& cfg) {
  const ojson in = load_input(cfg);
  const ClosedCurve curve = curve_from_json(require_field(in, "curve"));
  const BoundaryFunction f = samples_from_json(require_field(in, "f"));
  const int e = require_int(in, "e");
  const cd basepoint = in.contains("basepoint")
                           ? complex_from_json(in.at("basepoint"), "basepoint")
                           : curve.centroid();
  const ModuliSplit ms = moduli_split(curve, f, e, basepoint);
  const ClassEquivalence eq =
      class_equiv(curve, f, ms.class_minus, Side::Interior, cfg.tol);

  ojson report = make_report(cfg, cfg.tol, 0);
  report["basepoint"] = complex_to_json(basepoint);
  report["e"] = e;
  report["degree_minus"] = degree(curve, ms.class_minus);
  report["degree_plus"] = degree(curve, ms.class_plus);
  report["interior_equivalent"] = eq.equivalent;
  report["interior_defect"] = eq.defect;
  report["class_minus"] = samples_to_json(ms.class_minus);
  report["class_plus"] = samples_to_json(ms.class_plus);
  write_output(cfg, report);
  return 0;
}

HolderDatum holder_from_json(const ojson& j, double alpha) {
  const ojson& xs = require_field(j, "xs");
  const ojson& fs = require_field(j, "fs");
  if (!xs.is_array() || !fs.is_array()) {
    throw InputError("fields \"xs\" and \"fs\" must be arrays");
  }
  HolderDatum d;
  d.alpha = alpha;
  for (const ojson& x : xs) {
    if (!x.is_number()) throw InputError("entries of \"xs\" must be numbers");
    d.xs.push_back(x.get<double>());
  }
  for (const ojson& f : fs) {
    if (!f.is_number()) throw InputError("entries of \"fs\" must be numbers");
    d.fs.push_back(f.get<double>());
  }
  return d;
}

int run_holder(const RunConfig& cfg) {
  const ojson in = load_input(cfg);
  const double alpha = require_double(in, "alpha");
  ojson report = make_report(cfg, 0.0, 0);
  report["alpha"] = alpha;
  if (in.contains("minus") && in.contains("plus")) {
    const HolderDatum fm = holder_from_json(in.at("minus"), alpha);
    const HolderDatum fp = holder_from_json(in.at("plus"), alpha);
    const GlueResult g = glue_half_lines(fm, fp, alpha);
    report["seminorm"] = g.m_glued;
    report["seminorm_minus"] = g.m_minus;
    report["seminorm_plus"] = g.m_plus;
    report["bound_constant"] = g.bound_constant;
    report["bound_ok"] = g.bound_ok;
  } else {
    const HolderDatum d = holder_from_json(require_field(in, "samples"), alpha);
    report["seminorm"] = holder_seminorm(d);
  }
  write_output(cfg, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary transforms, transmission-problem solvers, and sampled "
               "Lipschitz utilities on closed curves"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Input JSON file")->required();
    sub->add_option("--output", cfg.output, "Output path, or - for standard output");
    sub->add_option("--tol", cfg.tol, "Tolerance override (module default when omitted)");
    sub->add_option("--truncation", cfg.truncation, "Expansion order override");
    sub->add_option("--seed", cfg.seed, "Seed echoed into the report");
    sub->add_option("--csv", cfg.csv, "Path for the CSV sidecar, where supported");
  };

  CLI::App* c_cauchy = app.add_subcommand(
      "cauchy", "Boundary values, off-curve values, and the jump identity defect");
  CLI::App* c_fact = app.add_subcommand(
      "factorize-scalar", "Multiplicative factorization of nowhere-zero scalar data");
  CLI::App* c_idx = app.add_subcommand(
      "indices", "Splitting type and dimension staircase of a matrix jump");
  CLI::App* c_solve = app.add_subcommand(
      "solve-rh", "Transmission problem with pole-order and leading-coefficient data");
  CLI::App* c_ell = app.add_subcommand(
      "elliptic", "Annulus factorization with the quasi-periodic twist factor");
  CLI::App* c_mod = app.add_subcommand(
      "moduli-roundtrip", "Split a class representative and verify the round trip");
  CLI::App* c_hold = app.add_subcommand(
      "holder", "Pairwise seminorms and the half-line gluing inequality");
  for (CLI::App* sub : {c_cauchy, c_fact, c_idx, c_solve, c_ell, c_mod, c_hold}) {
    add_common(sub);
  }
  c_solve->add_flag("--scalar", cfg.scalar, "Scalar problem (input holds \"upsilon\")");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_cauchy->parsed()) {
      cfg.subcommand = "cauchy";
      return run_cauchy(cfg);
    }
    if (c_fact->parsed()) {
      cfg.subcommand = "factorize-scalar";
      return run_factorize_scalar(cfg);
    }
    if (c_idx->parsed()) {
      cfg.subcommand = "indices";
      return run_indices(cfg);
    }
    if (c_solve->parsed()) {
      cfg.subcommand = "solve-rh";
      return run_solve_rh(cfg);
    }
    if (c_ell->parsed()) {
      cfg.subcommand = "elliptic";
      return run_elliptic(cfg);
    }
    if (c_mod->parsed()) {
      cfg.subcommand = "moduli-roundtrip";
      return run_moduli_roundtrip(cfg);
    }
    if (c_hold->parsed()) {
      cfg.subcommand = "holder";
      return run_holder(cfg);
    }
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
