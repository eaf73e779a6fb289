#include "rhkit/rh_scalar.hpp"

#include <algorithm>
#include <cmath>

namespace rhkit {

namespace {

void check_scalar(const ClosedCurve& curve, const BoundaryFunction& f, const char* who) {
  check_sampled_on(curve, f);
  if (f.r != 1) throw InputError(std::string(who) + ": expected scalar samples");
}

void check_nowhere_zero(const BoundaryFunction& f, const char* who) {
  for (const cd& v : f.values) {
    if (std::abs(v) == 0.0) throw ZeroValue(std::string(who) + ": sample vanishes");
  }
}

cd ipow(cd z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  cd r(1.0), b = z;
  for (int k = e; k != 0; k >>= 1) {
    if (k & 1) r *= b;
    b *= b;
  }
  return r;
}

// Principal-branch phase increments of consecutive quotients; the common
// workhorse of degree and continuous_log.
std::vector<double> phase_increments(const ClosedCurve& curve, const BoundaryFunction& f,
                                     const char* who) {
  check_scalar(curve, f, who);
  check_nowhere_zero(f, who);
  const int n = curve.n;
  std::vector<double> inc(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const cd q = f.at((k + 1) % n) / f.at(k);
    const double a = std::arg(q);
    if (!(std::abs(a) < pi / 2.0)) {
      throw PhaseJumpTooLarge(std::string(who) +
                              ": phase step of pi/2 or more between adjacent nodes");
    }
    inc[static_cast<size_t>(k)] = a;
  }
  return inc;
}

}  // namespace

int degree(const ClosedCurve& curve, const BoundaryFunction& f) {
  const std::vector<double> inc = phase_increments(curve, f, "degree");
  double total = 0.0;
  for (double a : inc) total += a;
  return static_cast<int>(std::lround(total / (2.0 * pi)));
}

BoundaryFunction continuous_log(const ClosedCurve& curve, const BoundaryFunction& q) {
  const std::vector<double> inc = phase_increments(curve, q, "continuous_log");
  double total = 0.0;
  for (double a : inc) total += a;
  if (std::lround(total / (2.0 * pi)) != 0) {
    throw NonzeroDegree("continuous_log: winding degree is not zero");
  }
  const int n = curve.n;
  std::vector<cd> out(static_cast<size_t>(n));
  double phase = std::arg(q.at(0));  // in (-pi, pi]
  for (int k = 0; k < n; ++k) {
    out[static_cast<size_t>(k)] = cd(std::log(std::abs(q.at(k))), phase);
    phase += inc[static_cast<size_t>(k)];
  }
  return BoundaryFunction::scalar(std::move(out));
}

ScalarFactorization factorize_scalar(const ClosedCurve& curve,
                                     const BoundaryFunction& f_minus,
                                     const BoundaryFunction& f_plus) {
  check_scalar(curve, f_minus, "factorize_scalar");
  check_scalar(curve, f_plus, "factorize_scalar");
  check_nowhere_zero(f_minus, "factorize_scalar");
  check_nowhere_zero(f_plus, "factorize_scalar");
  const int n = curve.n;
  std::vector<cd> qv(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) qv[static_cast<size_t>(k)] = f_plus.at(k) / f_minus.at(k);
  const BoundaryFunction q = BoundaryFunction::scalar(std::move(qv));
  const BoundaryFunction phi = continuous_log(curve, q);  // NonzeroDegree if degrees differ
  BoundaryPair bv = boundary_values(curve, phi);

  ScalarFactorization out;
  out.f = BoundaryFunction::zeros(1, n);
  double defect = 0.0;
  for (int k = 0; k < n; ++k) {
    const cd lhs = std::exp(bv.minus.at(k)) * f_minus.at(k);
    const cd rhs = std::exp(bv.plus.at(k)) * f_plus.at(k);
    out.f.at(k) = lhs;
    defect = std::max(defect, std::abs(lhs - rhs));
  }
  out.cm = std::move(bv.minus);
  out.cp = std::move(bv.plus);
  out.defect = defect;
  return out;
}

ModuliSplit moduli_split(const ClosedCurve& curve, const BoundaryFunction& f, int e,
                         cd basepoint) {
  check_scalar(curve, f, "moduli_split");
  check_nowhere_zero(f, "moduli_split");
  if (winding_number(curve, basepoint) != 1) {
    throw BasepointOutside("moduli_split: basepoint not on the bounded side");
  }
  ModuliSplit out;
  out.class_minus = f;
  out.class_plus = BoundaryFunction::zeros(1, curve.n);
  for (int k = 0; k < curve.n; ++k) {
    out.class_plus.at(k) = ipow(curve.z[k] - basepoint, -e) * f.at(k);
  }
  return out;
}

ClassEquivalence class_equiv(const ClosedCurve& curve, const BoundaryFunction& f,
                             const BoundaryFunction& g, Side side, double tol) {
  check_scalar(curve, f, "class_equiv");
  check_scalar(curve, g, "class_equiv");
  check_nowhere_zero(f, "class_equiv");
  check_nowhere_zero(g, "class_equiv");
  const int n = curve.n;
  std::vector<cd> qv(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) qv[static_cast<size_t>(k)] = f.at(k) / g.at(k);
  const BoundaryFunction q = BoundaryFunction::scalar(std::move(qv));

  const std::vector<double> inc = phase_increments(curve, q, "class_equiv");
  double total = 0.0;
  for (double a : inc) total += a;
  if (std::lround(total / (2.0 * pi)) != 0) {
    // Different degrees can never be equivalent; report a defect of one
    // full turn per unit of degree mismatch.
    ClassEquivalence out;
    out.equivalent = false;
    out.defect = 2.0 * pi * std::abs(total / (2.0 * pi));
    return out;
  }

  const BoundaryFunction phi = continuous_log(curve, q);
  const BoundaryPair bv = boundary_values(curve, phi);

  double scale = 1.0;
  for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(phi.at(k)));
  if (tol <= 0.0) tol = 1e-7 * scale;

  double defect = 0.0;
  if (side == Side::Interior) {
    // f/g extends to the bounded side iff the exterior projection vanishes.
    for (int k = 0; k < n; ++k) defect = std::max(defect, std::abs(bv.plus.at(k)));
  } else {
    // Holomorphic at infinity: the interior projection must be constant.
    cd mean(0.0);
    for (int k = 0; k < n; ++k) mean += bv.minus.at(k);
    mean /= static_cast<double>(n);
    for (int k = 0; k < n; ++k) defect = std::max(defect, std::abs(bv.minus.at(k) - mean));
  }
  ClassEquivalence out;
  out.defect = defect;
  out.equivalent = defect <= tol;
  return out;
}

ScalarRHReport solve_scalar_rh(const ClosedCurve& curve, const BoundaryFunction& upsilon,
                               int m, int d, const std::vector<cd>& gamma_tilde,
                               const CollocationOptions& opts) {
  check_scalar(curve, upsilon, "solve_scalar_rh");
  const int deg = degree(curve, upsilon);
  const int index = -deg;

  ScalarRHReport out;
  out.index = index;
  out.homogeneous_dimension = std::max(0, index + m + 1);

  const JumpDatum jump = make_jump(curve, upsilon);
  const int engine_dim = h0_dimension(curve, jump, m, opts);
  if (engine_dim != out.homogeneous_dimension) {
    throw RankAmbiguous("solve_scalar_rh: collocation dimension disagrees with the index law");
  }

  const RHSolveReport rep = solve_rh(curve, jump, m, d, gamma_tilde, opts);
  out.solvable = rep.solvable;
  out.residual = rep.residual;
  out.affine_dimension = rep.affine_dimension;
  out.interior_coeffs = rep.interior_coeffs;
  out.exterior_coeffs = rep.exterior_coeffs;

  const int affine_law = (d >= 0) ? std::max(0, index + m - d) : out.homogeneous_dimension;
  if (out.affine_dimension != affine_law) {
    throw RankAmbiguous("solve_scalar_rh: affine dimension disagrees with the index law");
  }
  return out;
}

}  // namespace rhkit
