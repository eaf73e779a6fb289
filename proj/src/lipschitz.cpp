#include "rhkit/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace rhkit {

namespace {

void check_datum(const HolderDatum& d) {
  if (d.xs.size() != d.fs.size()) {
    throw InputError("holder: sample point and value counts differ");
  }
  if (d.xs.size() < 2) throw InputError("holder: need at least 2 samples");
  if (!(d.alpha > 0.0 && d.alpha < 1.0)) throw InputError("holder: alpha must lie in (0,1)");
  for (size_t i = 1; i < d.xs.size(); ++i) {
    if (!(d.xs[i] > d.xs[i - 1])) {
      throw InputError("holder: sample points must be strictly increasing");
    }
  }
}

// Smooth one-sided ramp: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

// Even bump: 1 on [-1/2, 1/2], 0 outside (-1, 1), C-infinity throughout.
double bump(double t) {
  const double a = std::abs(t);
  if (a <= 0.5) return 1.0;
  if (a >= 1.0) return 0.0;
  return smooth_step(2.0 * (1.0 - a));
}

}  // namespace

double holder_seminorm(const HolderDatum& d) {
  check_datum(d);
  const size_t n = d.xs.size();
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double num = std::abs(d.fs[i] - d.fs[j]);
      const double den = std::pow(d.xs[j] - d.xs[i], d.alpha);
      worst = std::max(worst, num / den);
    }
  }
  return worst;
}

GlueResult glue_half_lines(const HolderDatum& f_minus, const HolderDatum& f_plus,
                           double alpha) {
  HolderDatum fm = f_minus;
  HolderDatum fp = f_plus;
  fm.alpha = fp.alpha = alpha;
  check_datum(fm);
  check_datum(fp);
  if (fm.xs.back() != 0.0 || fp.xs.front() != 0.0) {
    throw InterfaceMismatch("glue: both half-line grids must end/begin at 0");
  }
  if (fm.fs.back() != fp.fs.front()) {
    throw InterfaceMismatch("glue: the two samples at the origin disagree");
  }

  GlueResult out;
  out.m_minus = holder_seminorm(fm);
  out.m_plus = holder_seminorm(fp);
  out.glued.alpha = alpha;
  out.glued.xs = fm.xs;
  out.glued.fs = fm.fs;
  out.glued.xs.insert(out.glued.xs.end(), fp.xs.begin() + 1, fp.xs.end());
  out.glued.fs.insert(out.glued.fs.end(), fp.fs.begin() + 1, fp.fs.end());
  out.m_glued = holder_seminorm(out.glued);
  out.bound_constant = std::pow(2.0, 1.0 - alpha);
  out.bound_ok =
      out.m_glued <= out.bound_constant * std::max(out.m_minus, out.m_plus) + 1e-12;
  return out;
}

double JetExtension::operator()(double x) const {
  const double w = bump(x / halfwidth);
  if (w == 0.0) return 0.0;
  // Horner evaluation of sum_s A_s x^s / s!.
  double poly = 0.0;
  double factorial = 1.0;
  for (size_t s = 1; s < coefficients.size(); ++s) factorial *= static_cast<double>(s);
  for (size_t s = coefficients.size(); s-- > 0;) {
    poly = poly * x + coefficients[s] / factorial;
    if (s > 0) factorial /= static_cast<double>(s);
  }
  return w * poly;
}

HolderDatum JetExtension::sample(int n, double alpha) const {
  const int m = std::max(n, 512);
  HolderDatum d;
  d.alpha = alpha;
  d.xs.resize(static_cast<size_t>(m));
  d.fs.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double x = halfwidth * (2.0 * i / (m - 1) - 1.0);
    d.xs[static_cast<size_t>(i)] = x;
    d.fs[static_cast<size_t>(i)] = (*this)(x);
  }
  return d;
}

JetExtension jet_extend_1d(const JetDatum& jet, double halfwidth) {
  if (jet.coefficients.empty()) throw InputError("jet: need at least the order-0 value");
  if (!(halfwidth > 0.0)) throw InputError("jet: halfwidth must be positive");
  JetExtension ext;
  ext.coefficients = jet.coefficients;
  ext.halfwidth = halfwidth;
  return ext;
}

}  // namespace rhkit
