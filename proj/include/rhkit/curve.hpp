#pragma once

#include <complex>
#include <vector>

#include "rhkit/errors.hpp"

namespace rhkit {

using cd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// A closed analytic curve sampled at the n equispaced parameter values
// theta_k = 2*pi*k/n.  Stores the nodes z_k = z(theta_k) together with the
// exact parameter derivatives dz_k = z'(theta_k), so quadratures never
// differentiate the curve numerically.
//
// Orientation convention: the parametrization runs counterclockwise, the
// bounded complement component lies on the left, and the "minus" side of
// every boundary-value operator is that bounded side.
struct ClosedCurve {
  enum class Kind { UnitCircle, Fourier };

  Kind kind = Kind::UnitCircle;
  int n = 0;               // node count: even and >= 8
  std::vector<cd> z;       // z(theta_k)
  std::vector<cd> dz;      // z'(theta_k)
  int bandwidth = 0;       // K for the Fourier kind (0 for the circle)
  std::vector<cd> coeffs;  // c_{-K}..c_{K} for the Fourier kind

  // z_k = exp(i theta_k), dz_k = i z_k, both exact to the last ulp of the
  // trigonometric evaluations.
  static ClosedCurve unit_circle(int n);

  // z(theta) = sum_{m=-K}^{K} c_m e^{i m theta}; coeffs holds c_{-K}..c_{K}
  // (odd length 2K+1).  Requires n >= max(8, 4K) and throws
  // DegenerateParametrization if any |dz_k| < 1e-12 * max_j |dz_j|.
  static ClosedCurve fourier(const std::vector<cd>& coeffs, int n);

  double diameter() const;    // max pairwise node distance
  double mesh_width() const;  // max |z_{k+1} - z_k|
  cd centroid() const;        // node average
};

// (1/(2 pi i)) * integral of dz/(z - p), trapezoid value rounded to the
// nearest integer.  Throws AmbiguousWinding if the pre-rounding value is
// farther than 0.25 from every integer, which signals that p is too close
// to the curve or n is too small.
int winding_number(const ClosedCurve& curve, cd p);

}  // namespace rhkit
