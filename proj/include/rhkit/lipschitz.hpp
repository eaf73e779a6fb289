#pragma once

#include <vector>

#include "rhkit/errors.hpp"

namespace rhkit {

// Real samples (xs strictly increasing) with a Holder exponent in (0,1).
// The pairwise seminorm below is a certified lower bound for the true
// continuum seminorm of any function interpolating the samples.
struct HolderDatum {
  std::vector<double> xs;
  std::vector<double> fs;
  double alpha = 0.5;
};

// Exact maximum of |f(x)-f(y)| / |x-y|^alpha over all sample pairs.
double holder_seminorm(const HolderDatum& d);

struct GlueResult {
  HolderDatum glued;
  double m_minus = 0.0;
  double m_plus = 0.0;
  double m_glued = 0.0;
  double bound_constant = 0.0;  // 2^{1-alpha}
  bool bound_ok = false;        // m_glued <= bound_constant * max(m_minus, m_plus) + 1e-12
};

// Concatenate two half-line sample sets meeting at 0 (f_minus on xs <= 0,
// f_plus on xs >= 0, equal values at the shared origin) and check the
// gluing inequality  M_glued <= 2^{1-alpha} max(M-, M+).  Both grids must
// contain 0; InterfaceMismatch otherwise or when the origin values differ.
GlueResult glue_half_lines(const HolderDatum& f_minus, const HolderDatum& f_plus,
                           double alpha);

// Transverse derivative data A_0..A_k at the origin.
struct JetDatum {
  std::vector<double> coefficients;  // A_s, s = 0..k
};

// The compactly supported extension  A(x) = chi(x/halfwidth) sum_s A_s x^s/s!
// with chi a fixed C-infinity bump, identically 1 on [-1/2, 1/2] and 0
// outside [-1, 1]: central differences of A at 0 reproduce the jet.
struct JetExtension {
  std::vector<double> coefficients;
  double halfwidth = 1.0;

  double operator()(double x) const;

  // Symmetric grid restriction (at least 512 points across the support).
  HolderDatum sample(int n = 512, double alpha = 0.5) const;
};

JetExtension jet_extend_1d(const JetDatum& jet, double halfwidth);

}  // namespace rhkit
