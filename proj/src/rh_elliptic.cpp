#include "rhkit/rh_elliptic.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "rhkit/errors.hpp"
#include "rhkit/fourier.hpp"
#include "rhkit/rh_scalar.hpp"

namespace rhkit {

namespace {

// The scaled copy alpha*S as a curve in its own right (used for winding
// tests against the inner boundary of the annulus).
ClosedCurve scaled_copy(const ClosedCurve& c, cd alpha) {
  if (c.kind == ClosedCurve::Kind::UnitCircle) {
    return ClosedCurve::fourier({cd(0.0), cd(0.0), alpha}, c.n);
  }
  std::vector<cd> coeffs = c.coeffs;
  for (cd& x : coeffs) x *= alpha;
  return ClosedCurve::fourier(coeffs, c.n);
}

// Evaluates the two analytic continuations of the Cauchy transform of phi:
// inner(w) = C_-(phi)(w) - c0 on the closed disc bounded by the curve, and
// outer(w) = C_+(phi)(w) on the closed exterior.  On the unit circle both
// are exact finite mode sums; on general curves, node-coincident points
// use the one-sided boundary values and everything else the off-curve
// quadrature.
struct SeriesEvaluator {
  const ClosedCurve& curve;
  const BoundaryFunction& phi;
  bool circle = false;
  std::vector<cd> modes;  // circle only
  BoundaryPair bv;        // general curves only
  cd c0{0.0};
  double inner_scale = 0.0;  // sup |inner| over the curve nodes
  double outer_scale = 0.0;  // sup |outer| over the curve nodes
  double node_eps = 0.0;

  SeriesEvaluator(const ClosedCurve& c, const BoundaryFunction& f) : curve(c), phi(f) {
    circle = (c.kind == ClosedCurve::Kind::UnitCircle);
    c0 = cauchy_offcurve(c, f, cd(0.0)).value[0];
    node_eps = 1e-12 * c.diameter();
    if (circle) {
      modes = forward_modes(f.values);
    } else {
      bv = boundary_values(c, f);
    }
    for (int k = 0; k < c.n; ++k) {
      inner_scale = std::max(inner_scale, std::abs(at_node_inner(k)));
      outer_scale = std::max(outer_scale, std::abs(at_node_outer(k)));
    }
  }

  cd at_node_inner(int k) const {
    if (circle) return inner_modes(curve.z[static_cast<size_t>(k)]);
    return bv.minus.values[static_cast<size_t>(k)] - c0;
  }
  cd at_node_outer(int k) const {
    if (circle) return outer_modes(curve.z[static_cast<size_t>(k)]);
    return bv.plus.values[static_cast<size_t>(k)];
  }

  cd inner_modes(cd w) const {
    const int half = curve.n / 2;  // modes 0 .. half-1 are the nonnegative ones
    cd acc = 0.0;
    for (int m = half - 1; m >= 0; --m) acc = acc * w + modes[static_cast<size_t>(m)];
    return acc - c0;
  }
  cd outer_modes(cd w) const {
    const int half = curve.n / 2;  // modes -half .. -1 live at indices n-half .. n-1
    const cd v = 1.0 / w;
    cd acc = 0.0;
    for (int q = half; q >= 1; --q) acc = acc * v + modes[static_cast<size_t>(curve.n - q)];
    return -(acc * v);
  }

  int node_index(cd w) const {
    for (int k = 0; k < curve.n; ++k) {
      if (std::abs(w - curve.z[static_cast<size_t>(k)]) <= node_eps) return k;
    }
    return -1;
  }

  cd inner(cd w) const {
    if (circle) return inner_modes(w);
    const int k = node_index(w);
    if (k >= 0) return bv.minus.values[static_cast<size_t>(k)] - c0;
    return cauchy_offcurve(curve, phi, w).value[0] - c0;
  }
  cd outer(cd w) const {
    if (circle) return outer_modes(w);
    const int k = node_index(w);
    if (k >= 0) return bv.plus.values[static_cast<size_t>(k)];
    return cauchy_offcurve(curve, phi, w).value[0];
  }

  // Number of terms needed so the geometric tail with this leading scale
  // drops below tol.
  int terms_for(double scale, double abs_alpha, double tol) const {
    if (!(scale > tol)) return 1;
    const double target = tol * (1.0 - abs_alpha) / scale;
    const int k = static_cast<int>(std::ceil(std::log(target) / std::log(abs_alpha))) + 2;
    if (k > 10000) {
      throw SeriesNotConverged("elliptic: series truncation would exceed 10^4 terms");
    }
    return std::max(k, 1);
  }

  cd psi(cd z, cd alpha, double tol) const {
    const double aa = std::abs(alpha);
    const int ki = terms_for(inner_scale, aa, tol);
    const int ko = terms_for(outer_scale, aa, tol);
    cd acc = 0.0;
    cd w = z;
    for (int k = 0; k < ki; ++k) {
      acc += inner(w);
      w *= alpha;
    }
    cd v = z / alpha;
    for (int k = 1; k <= ko; ++k) {
      acc += outer(v);
      v /= alpha;
    }
    return acc;
  }
};

void require_in_annulus(const EllipticProblem& p, cd z) {
  const ClosedCurve& c = p.s_plus;
  if (c.kind == ClosedCurve::Kind::UnitCircle) {
    const double r = std::abs(z);
    if (r > 1.0 + 1e-12 || r < std::abs(p.alpha) - 1e-12) {
      throw OutsideAnnulus("elliptic: evaluation point outside the closed annulus");
    }
    return;
  }
  const double eps = 1e-12 * c.diameter();
  for (int k = 0; k < c.n; ++k) {
    const cd zk = c.z[static_cast<size_t>(k)];
    if (std::abs(z - zk) <= eps || std::abs(z - p.alpha * zk) <= eps) return;
  }
  const ClosedCurve inner_curve = scaled_copy(c, p.alpha);
  if (winding_number(c, z) != 1 || winding_number(inner_curve, z) != 0) {
    throw OutsideAnnulus("elliptic: evaluation point outside the closed annulus");
  }
}

}  // namespace

EllipticProblem EllipticProblem::create(cd alpha, ClosedCurve s_plus,
                                        BoundaryFunction f_plus, BoundaryFunction f_minus) {
  const double aa = std::abs(alpha);
  if (!(aa > 0.0 && aa < 1.0)) {
    throw InputError("elliptic: alpha must satisfy 0 < |alpha| < 1");
  }
  if (f_plus.r != 1 || f_minus.r != 1) {
    throw InputError("elliptic: boundary data must be scalar");
  }
  check_sampled_on(s_plus, f_plus);
  check_sampled_on(s_plus, f_minus);
  if (winding_number(s_plus, cd(0.0)) != 1) {
    throw InputError("elliptic: 0 must lie on the bounded side of S+");
  }
  for (int k = 0; k < s_plus.n; ++k) {
    if (winding_number(s_plus, alpha * s_plus.z[static_cast<size_t>(k)]) != 1) {
      throw InputError("elliptic: alpha*S+ must lie strictly inside S+");
    }
  }
  const int deg_plus = degree(s_plus, f_plus);
  const int deg_minus = degree(s_plus, f_minus);
  if (deg_plus != deg_minus) {
    throw InputError("elliptic: f+ and f- must share one winding degree about 0");
  }
  EllipticProblem p;
  p.alpha = alpha;
  p.s_plus = std::move(s_plus);
  p.f_plus = std::move(f_plus);
  p.f_minus = std::move(f_minus);
  p.n = deg_plus;
  return p;
}

BoundaryFunction elliptic_phi(const EllipticProblem& p) {
  BoundaryFunction q;
  q.r = 1;
  q.values.resize(p.s_plus.n);
  for (int k = 0; k < p.s_plus.n; ++k) {
    const size_t i = static_cast<size_t>(k);
    if (p.f_minus.values[i] == cd(0.0)) throw ZeroValue("elliptic: f- vanishes at a node");
    q.values[i] = p.f_plus.values[i] / p.f_minus.values[i];
  }
  return continuous_log(p.s_plus, q);
}

cd elliptic_psi(const EllipticProblem& p, const BoundaryFunction& phi, cd z, double tol) {
  check_sampled_on(p.s_plus, phi);
  require_in_annulus(p, z);
  const SeriesEvaluator ev(p.s_plus, phi);
  return ev.psi(z, p.alpha, tol);
}

EllipticFactorization elliptic_factorize(const EllipticProblem& p, double tol) {
  const BoundaryFunction phi = elliptic_phi(p);
  const SeriesEvaluator ev(p.s_plus, phi);
  const cd lambda = std::exp(-ev.c0);

  const int n = p.s_plus.n;
  EllipticFactorization out;
  out.lambda = lambda;
  out.g_plus = BoundaryFunction::scalar(std::vector<cd>(static_cast<size_t>(n)));
  out.g_minus = BoundaryFunction::scalar(std::vector<cd>(static_cast<size_t>(n)));

  for (int k = 0; k < n; ++k) {
    const size_t i = static_cast<size_t>(k);
    const cd z = p.s_plus.z[i];
    const cd psi_plus = ev.psi(z, p.alpha, tol);
    const cd psi_minus = ev.psi(p.alpha * z, p.alpha, tol);
    out.g_plus.values[i] = std::exp(-psi_plus) * p.f_plus.values[i];
    out.g_minus.values[i] = std::exp(-psi_minus) * p.f_minus.values[i];
    out.residual = std::max(out.residual,
                            std::abs(out.g_minus.values[i] - lambda * out.g_plus.values[i]));
    out.identity_defect =
        std::max(out.identity_defect,
                 std::abs(psi_plus - psi_minus - phi.values[i] + ev.c0));
  }
  return out;
}

}  // namespace rhkit
