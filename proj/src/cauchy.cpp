#include "rhkit/cauchy.hpp"

#include <algorithm>
#include <cmath>

#include "rhkit/fourier.hpp"

namespace rhkit {

namespace {

std::vector<cd> entry_samples(const BoundaryFunction& u, int i, int j) {
  const int n = u.nodes();
  std::vector<cd> s(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) s[static_cast<size_t>(k)] = u.at(k, i, j);
  return s;
}

// Interior-side principal value by the alternating (odd-offset, double
// weight) trapezoid rule.  The odd-offset nodes sit symmetrically around
// the singular node, so the Cauchy kernel's odd part cancels pairwise and
// the rule converges geometrically for analytic data.
cd pv_alternating(const ClosedCurve& c, const std::vector<cd>& s, int j) {
  cd acc(0.0);
  for (int k = (j + 1) % 2; k < c.n; k += 2) {
    acc += s[static_cast<size_t>(k)] * c.dz[k] / (c.z[k] - c.z[j]);
  }
  return acc * 2.0 / (cd(0.0, 1.0) * static_cast<double>(c.n));
}

// Exterior-side principal value by singularity subtraction: the smooth
// quotient (u - u_j)/(z - z_j) is integrated by the full trapezoid rule,
// with the diagonal limit du/dtheta supplied by spectral differentiation,
// and the subtracted kernel contributes the exact half residue u_j/2.
cd pv_subtracted(const ClosedCurve& c, const std::vector<cd>& s, const std::vector<cd>& sdot,
                 int j) {
  cd acc = sdot[static_cast<size_t>(j)];
  for (int k = 0; k < c.n; ++k) {
    if (k == j) continue;
    acc += (s[static_cast<size_t>(k)] - s[static_cast<size_t>(j)]) * c.dz[k] /
           (c.z[k] - c.z[j]);
  }
  return acc / (cd(0.0, 1.0) * static_cast<double>(c.n)) + 0.5 * s[static_cast<size_t>(j)];
}

}  // namespace

void check_sampled_on(const ClosedCurve& curve, const BoundaryFunction& u) {
  if (u.r < 1) throw InputError("boundary function: rank must be at least 1");
  if (u.nodes() != curve.n ||
      u.values.size() != static_cast<size_t>(curve.n) * u.r * u.r) {
    throw InputError("boundary function: sample count does not match the curve");
  }
}

OffCurveValue cauchy_offcurve(const ClosedCurve& curve, const BoundaryFunction& u, cd z) {
  check_sampled_on(curve, u);
  const int r = u.r;
  OffCurveValue out;
  out.value.assign(static_cast<size_t>(r) * r, cd(0.0));
  double dist = std::abs(z - curve.z[0]);
  for (int k = 0; k < curve.n; ++k) {
    dist = std::min(dist, std::abs(z - curve.z[k]));
    const cd w = curve.dz[k] / (curve.z[k] - z);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out.value[static_cast<size_t>(i) * r + j] += u.at(k, i, j) * w;
  }
  const cd scale = 1.0 / (cd(0.0, 1.0) * static_cast<double>(curve.n));
  for (cd& v : out.value) v *= scale;
  out.distance = dist;
  out.low_accuracy = dist < 5.0 * curve.mesh_width();
  return out;
}

BoundaryPair boundary_values(const ClosedCurve& curve, const BoundaryFunction& u) {
  check_sampled_on(curve, u);
  const int n = curve.n;
  const int r = u.r;
  BoundaryPair out;
  out.minus = BoundaryFunction::zeros(r, n);
  out.plus = BoundaryFunction::zeros(r, n);

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::vector<cd> s = entry_samples(u, i, j);
      if (curve.kind == ClosedCurve::Kind::UnitCircle) {
        // Riesz projections: minus keeps modes m >= 0, plus = -(modes m < 0).
        std::vector<cd> modes = forward_modes(s);
        std::vector<cd> lo(modes.size(), cd(0.0)), hi(modes.size(), cd(0.0));
        for (int t = 0; t < n; ++t) {
          const int m = (t <= (n - 1) / 2) ? t : t - n;
          if (m >= 0)
            lo[static_cast<size_t>(t)] = modes[static_cast<size_t>(t)];
          else
            hi[static_cast<size_t>(t)] = -modes[static_cast<size_t>(t)];
        }
        std::vector<cd> um = inverse_samples(lo), up = inverse_samples(hi);
        for (int k = 0; k < n; ++k) {
          out.minus.at(k, i, j) = um[static_cast<size_t>(k)];
          out.plus.at(k, i, j) = up[static_cast<size_t>(k)];
        }
      } else {
        std::vector<cd> sdot = spectral_derivative(s);
        for (int k = 0; k < n; ++k) {
          const cd uk = s[static_cast<size_t>(k)];
          out.minus.at(k, i, j) = pv_alternating(curve, s, k) + 0.5 * uk;
          out.plus.at(k, i, j) = pv_subtracted(curve, s, sdot, k) - 0.5 * uk;
        }
      }
    }
  }
  return out;
}

double plemelj_residual(const ClosedCurve& curve, const BoundaryFunction& u) {
  BoundaryPair bv = boundary_values(curve, u);
  double worst = 0.0;
  for (size_t t = 0; t < u.values.size(); ++t) {
    worst = std::max(worst, std::abs(bv.minus.values[t] - bv.plus.values[t] - u.values[t]));
  }
  return worst;
}

std::vector<cd> value_at_infinity(const ClosedCurve& curve, const BoundaryFunction& u) {
  const cd far = curve.centroid() + cd(1e6 * curve.diameter(), 0.0);
  return cauchy_offcurve(curve, u, far).value;
}

}  // namespace rhkit
