#pragma once

#include "rhkit/cauchy.hpp"
#include "rhkit/curve.hpp"

namespace rhkit {

// Multiplicative factorization across the annulus between a closed curve
// S+ and its scaled copy S- = alpha*S+, 0 < |alpha| < 1.  The data are
// nowhere-zero scalar samples f+ on S+ and f- on S- (at the scaled nodes,
// index-aligned), sharing one winding degree n about 0.
struct EllipticProblem {
  cd alpha{0.0};
  ClosedCurve s_plus;
  BoundaryFunction f_plus;   // samples at s_plus nodes
  BoundaryFunction f_minus;  // samples at alpha * (s_plus nodes)
  int n = 0;                 // common winding degree about 0

  // Validates the geometry (0 strictly inside, alpha*S+ strictly inside
  // S+) and the data (scalar, nowhere zero, equal node counts, equal
  // winding degrees).
  static EllipticProblem create(cd alpha, ClosedCurve s_plus, BoundaryFunction f_plus,
                                BoundaryFunction f_minus);
};

// phi_k = log(f+(z_k) / f-(alpha z_k)), unwrapped continuously; the two
// degrees cancel, so the quotient winds zero times and the log is
// single-valued.
BoundaryFunction elliptic_phi(const EllipticProblem& p);

// The correction series
//   psi(z) = sum_{k>=0} cminus0(phi)(alpha^k z) + sum_{k>=1} C_+(phi)(alpha^-k z),
// where cminus0(phi) = C_-(phi) - C_-(phi)(0).  Both sums converge
// geometrically on the closed annulus; terms are truncated once the
// maximum-principle tail bound drops below tol.  Throws OutsideAnnulus
// for z beyond the closed annulus and SeriesNotConverged if more than
// 10^4 terms would be required.
cd elliptic_psi(const EllipticProblem& p, const BoundaryFunction& phi, cd z,
                double tol = 1e-10);

struct EllipticFactorization {
  cd lambda{1.0};
  BoundaryFunction g_plus;   // e^{-psi} f+ on S+
  BoundaryFunction g_minus;  // e^{-psi} f- on S-
  double residual = 0.0;        // max_k |g-(alpha z_k) - lambda g+(z_k)|
  double identity_defect = 0.0; // max_k |psi(z_k) - psi(alpha z_k) - phi(z_k) + c0|
};

// Factor the data through the annulus: with c0 = C_-(phi)(0) and
// lambda = e^{-c0}, the corrected sections g+- = e^{-psi} f+- satisfy the
// twist relation g-(alpha z) = lambda g+(z) up to quadrature error, which
// the residual reports.
EllipticFactorization elliptic_factorize(const EllipticProblem& p, double tol = 1e-10);

}  // namespace rhkit
