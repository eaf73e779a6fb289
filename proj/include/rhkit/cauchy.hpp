#pragma once

#include "rhkit/curve.hpp"

namespace rhkit {

// Node samples of an r x r matrix-valued function on a curve (r = 1 is the
// scalar case).  Entries are stored row-major per node:
//   values[(k*r + i)*r + j] = u(z_k)_{ij}.
struct BoundaryFunction {
  int r = 1;
  std::vector<cd> values;

  BoundaryFunction() = default;
  BoundaryFunction(int r_, std::vector<cd> v) : r(r_), values(std::move(v)) {}

  static BoundaryFunction scalar(std::vector<cd> v) {
    return BoundaryFunction{1, std::move(v)};
  }
  static BoundaryFunction zeros(int r, int n) {
    return BoundaryFunction{r, std::vector<cd>(static_cast<size_t>(n) * r * r)};
  }

  int nodes() const {
    return r == 0 ? 0 : static_cast<int>(values.size() / (static_cast<size_t>(r) * r));
  }
  cd& at(int k, int i = 0, int j = 0) {
    return values[(static_cast<size_t>(k) * r + i) * r + j];
  }
  const cd& at(int k, int i = 0, int j = 0) const {
    return values[(static_cast<size_t>(k) * r + i) * r + j];
  }
};

// Throws InputError unless u has one sample block per node of the curve.
void check_sampled_on(const ClosedCurve& curve, const BoundaryFunction& u);

// Value of the Cauchy transform (1/(2 pi i)) * oint u(zeta)/(zeta - z) dzeta
// at a point z off the curve, by the trapezoid rule.  low_accuracy is set
// when z is within five mesh widths of the nearest node; the value is still
// returned.
struct OffCurveValue {
  std::vector<cd> value;  // r x r, row-major
  bool low_accuracy = false;
  double distance = 0.0;  // min_k |z - z_k|
};
OffCurveValue cauchy_offcurve(const ClosedCurve& curve, const BoundaryFunction& u, cd z);

// Boundary values of the Cauchy transform from the two sides:
//   minus = limit from the bounded component, plus = from the unbounded one,
// normalized so that minus - plus = u (the jump identity).
//
// On the unit circle both sides come from exact Fourier mode projections:
// minus keeps modes m >= 0, plus is -(modes m < 0).  On other curves each
// side is computed by its own spectrally accurate principal-value rule
// (interior: alternating odd-offset trapezoid; exterior: singularity
// subtraction with the diagonal limit from spectral differentiation), each
// with its Sokhotski +/- u/2 term.  Keeping the two quadratures independent
// makes the jump defect below an honest convergence diagnostic instead of a
// quantity that vanishes by construction.
struct BoundaryPair {
  BoundaryFunction minus;
  BoundaryFunction plus;
};
BoundaryPair boundary_values(const ClosedCurve& curve, const BoundaryFunction& u);

// max over nodes and entries of |minus - plus - u|.
double plemelj_residual(const ClosedCurve& curve, const BoundaryFunction& u);

// Decay check at infinity: the transform evaluated at |z| = 1e6 * diameter
// (measured from the centroid).  Entries should be O(1e-6) for O(1) data.
std::vector<cd> value_at_infinity(const ClosedCurve& curve, const BoundaryFunction& u);

}  // namespace rhkit
