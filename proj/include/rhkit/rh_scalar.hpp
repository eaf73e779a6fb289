#pragma once

#include "rhkit/cauchy.hpp"
#include "rhkit/rh_vector.hpp"

namespace rhkit {

// Winding degree of a nowhere-zero scalar sample set, by accumulating the
// principal arguments of consecutive quotients f_{k+1}/f_k.  Every
// increment must be smaller than pi/2 in magnitude (PhaseJumpTooLarge
// otherwise: the sampling cannot certify the unwrapping).  Throws
// ZeroValue on a vanishing sample.
int degree(const ClosedCurve& curve, const BoundaryFunction& f);

// Continuous single-valued logarithm of a degree-0 sample set, normalized
// so the imaginary part at node 0 lies in (-pi, pi].  NonzeroDegree if the
// winding is not 0.
BoundaryFunction continuous_log(const ClosedCurve& curve, const BoundaryFunction& q);

// Multiplicative scalar factorization: given nowhere-zero boundary data
// f^- and f^+ whose quotient has degree 0, put phi = log(f^+/f^-) and let
// (cm, cp) be the two boundary values of its Cauchy transform; then
//   f = e^{cm} f^-  =  e^{cp} f^+
// up to quadrature error, and defect records the worst node disagreement.
struct ScalarFactorization {
  BoundaryFunction f;
  BoundaryFunction cm;
  BoundaryFunction cp;
  double defect = 0.0;
};
ScalarFactorization factorize_scalar(const ClosedCurve& curve,
                                     const BoundaryFunction& f_minus,
                                     const BoundaryFunction& f_plus);

// The two framed-class representatives of f: the interior one is f itself
// and the exterior one is (z - basepoint)^{-e} f, where e is the chosen
// twist.  The basepoint must lie on the bounded side (BasepointOutside).
struct ModuliSplit {
  BoundaryFunction class_minus;
  BoundaryFunction class_plus;
};
ModuliSplit moduli_split(const ClosedCurve& curve, const BoundaryFunction& f, int e,
                         cd basepoint);

// Same-class test modulo nowhere-zero holomorphic factors on one side.
// Interior side: f/g must extend holomorphically (and nonvanishing) to the
// bounded component, detected by the exterior projection of log(f/g)
// vanishing.  Exterior side: the extension must also be holomorphic at
// infinity, detected by the interior projection being constant.  tol <= 0
// selects the default 1e-7 relative to the data scale.
enum class Side { Interior, Exterior };
struct ClassEquivalence {
  bool equivalent = false;
  double defect = 0.0;
};
ClassEquivalence class_equiv(const ClosedCurve& curve, const BoundaryFunction& f,
                             const BoundaryFunction& g, Side side, double tol = 0.0);

// Scalar transmission problem with a degree-upsilon jump: the homogeneous
// solution dimension obeys the closed-form index law
//   dim = max(0, index + m + 1),   index = -degree(upsilon),
// and this is cross-checked against the collocation engine.  For d >= 0
// the constrained problem is solved least-squares exactly as in the
// vector case (gamma_tilde leading-first, length d+1).
struct ScalarRHReport {
  int index = 0;
  int homogeneous_dimension = 0;
  bool solvable = false;
  double residual = 0.0;
  int affine_dimension = 0;
  std::vector<cd> interior_coeffs;
  std::vector<cd> exterior_coeffs;
};
ScalarRHReport solve_scalar_rh(const ClosedCurve& curve, const BoundaryFunction& upsilon,
                               int m, int d, const std::vector<cd>& gamma_tilde,
                               const CollocationOptions& opts = {});

}  // namespace rhkit
