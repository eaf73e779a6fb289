#pragma once

#include "rhkit/cauchy.hpp"

namespace rhkit {

// Jump datum for the transmission problem Y^+ = rho * Y^- on a curve:
// r x r samples, invertible at every node, with the winding degree of the
// determinant cached at construction.
struct JumpDatum {
  BoundaryFunction rho;
  int det_degree = 0;
};
JumpDatum make_jump(const ClosedCurve& curve, const BoundaryFunction& rho);

struct CollocationOptions {
  int truncation = 32;       // N: highest interior/exterior expansion order
  double tol = 1e-8;         // relative singular-value threshold
  double gap = 1e3;          // required multiplicative gap at the rank cut
  bool use_centroid = true;  // expansion center z0 = node centroid
  cd center = cd(0.0);       // used when use_centroid is false
};

// Dimension of the space of solutions (Y^-, Y^+) with Y^- holomorphic on
// the bounded side, Y^+ holomorphic on the unbounded side with pole order
// at most m at infinity, and Y^+ = rho Y^- on the curve.  Computed as the
// numerical nullity of the truncated collocation system: interior Taylor
// powers (z-z0)^j and exterior powers (z-z0)^{m-j}, j = 0..N, collocated at
// all n nodes (requires n >= 2(N+1)).  Throws RankAmbiguous unless a
// multiplicative gap >= opts.gap separates kept from discarded singular
// values at the threshold tol * sigma_max.
int h0_dimension(const ClosedCurve& curve, const JumpDatum& jump, int m,
                 const CollocationOptions& opts = {});

// Explicit coefficient vectors spanning the numerical nullspace, raw
// (unscaled) coefficients: interior[v][j*r + c] multiplies (z-z0)^j in
// component c, exterior[v][j*r + c] multiplies (z-z0)^{m-j}.
struct H0Basis {
  int dimension = 0;
  std::vector<std::vector<cd>> interior;
  std::vector<std::vector<cd>> exterior;
};
H0Basis h0_basis(const ClosedCurve& curve, const JumpDatum& jump, int m,
                 const CollocationOptions& opts = {});

// Splitting type: the multiset of line-bundle degrees (n_1 >= ... >= n_r)
// recovered from the dimension staircase m -> h0_dimension(m); the
// increments count how many indices satisfy n_j + m >= 0.  The recovered
// indices must sum to -det_degree exactly, else SumMismatch.
struct StaircaseRow {
  int m = 0;
  int dim = 0;
};
struct SplittingResult {
  std::vector<int> indices;
  std::vector<StaircaseRow> staircase;
};
SplittingResult splitting_type(const ClosedCurve& curve, const JumpDatum& jump,
                               const CollocationOptions& opts = {});

// Inhomogeneous problem: find Y with pole order <= m at infinity whose
// exterior Laurent tail matches the constraint data gamma_tilde (entries
// gamma~_{-d}..gamma~_0, leading first, each a block of r components).
// The constraints pin the exterior coefficients of (z-z0)^{m-j}, j = 0..d;
// the remaining system is solved least-squares.  d = -1 means no
// constraint (the homogeneous problem).
struct RHSolveReport {
  bool solvable = false;
  double residual = 0.0;     // max node defect |Y^+ - rho Y^-| (max entry)
  int affine_dimension = 0;  // dim of the solution space over the returned one
  std::vector<cd> interior_coeffs;  // a_{c,j}: layout j*r + c, powers (z-z0)^j
  std::vector<cd> exterior_coeffs;  // b_{c,j}: layout j*r + c, powers (z-z0)^{m-j}
  // resolved parameters, echoed for reporting
  int m = 0;
  int d = -1;
  std::vector<cd> gamma_tilde;
  int truncation = 0;
  double tol = 0.0;
  cd center = cd(0.0);
};
RHSolveReport solve_rh(const ClosedCurve& curve, const JumpDatum& jump, int m, int d,
                       const std::vector<cd>& gamma_tilde,
                       const CollocationOptions& opts = {});

// Stratum of an SL(2,C)-valued jump: its splitting type is (n, -n); returns
// n >= 0.  Throws NotSL2 if |det rho - 1| > det_tol at any node.
int sl2_stratum(const ClosedCurve& curve, const JumpDatum& jump,
                const CollocationOptions& opts = {}, double det_tol = 1e-8);

}  // namespace rhkit
