#include "rhkit/curve.hpp"

#include <algorithm>
#include <cmath>

namespace rhkit {

namespace {

void check_node_count(int n) {
  if (n < 8 || n % 2 != 0) {
    throw InputError("curve: node count must be even and at least 8");
  }
}

}  // namespace

ClosedCurve ClosedCurve::unit_circle(int n) {
  check_node_count(n);
  ClosedCurve c;
  c.kind = Kind::UnitCircle;
  c.n = n;
  c.z.resize(n);
  c.dz.resize(n);
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * pi * k / n;
    c.z[k] = cd(std::cos(th), std::sin(th));
    c.dz[k] = cd(0.0, 1.0) * c.z[k];
  }
  return c;
}

ClosedCurve ClosedCurve::fourier(const std::vector<cd>& coeffs, int n) {
  if (coeffs.empty() || coeffs.size() % 2 == 0) {
    throw InputError("curve: Fourier coefficient list must have odd length 2K+1");
  }
  const int K = static_cast<int>(coeffs.size() / 2);
  check_node_count(n);
  if (n < 4 * K) {
    throw InputError("curve: need n >= 4K nodes for bandwidth K");
  }
  ClosedCurve c;
  c.kind = Kind::Fourier;
  c.n = n;
  c.bandwidth = K;
  c.coeffs = coeffs;
  c.z.resize(n);
  c.dz.resize(n);
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * pi * k / n;
    cd zv(0.0), dv(0.0);
    for (int m = -K; m <= K; ++m) {
      const cd cm = coeffs[static_cast<size_t>(m + K)];
      const cd e(std::cos(m * th), std::sin(m * th));
      zv += cm * e;
      dv += cm * cd(0.0, static_cast<double>(m)) * e;
    }
    c.z[k] = zv;
    c.dz[k] = dv;
  }
  double dmax = 0.0;
  for (const cd& d : c.dz) dmax = std::max(dmax, std::abs(d));
  for (const cd& d : c.dz) {
    if (std::abs(d) < 1e-12 * dmax) {
      throw DegenerateParametrization("curve: parametrization speed vanishes at a node");
    }
  }
  return c;
}

double ClosedCurve::diameter() const {
  double d = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) d = std::max(d, std::abs(z[a] - z[b]));
  return d;
}

double ClosedCurve::mesh_width() const {
  double h = 0.0;
  for (int k = 0; k < n; ++k) h = std::max(h, std::abs(z[(k + 1) % n] - z[k]));
  return h;
}

cd ClosedCurve::centroid() const {
  cd s(0.0);
  for (const cd& p : z) s += p;
  return s / static_cast<double>(n);
}

int winding_number(const ClosedCurve& curve, cd p) {
  cd acc(0.0);
  for (int k = 0; k < curve.n; ++k) acc += curve.dz[k] / (curve.z[k] - p);
  // (1/(2 pi i)) * (2 pi / n) * sum = sum / (i n)
  const cd value = acc / (cd(0.0, 1.0) * static_cast<double>(curve.n));
  const double w = value.real();
  const double nearest = std::round(w);
  const double defect = std::hypot(w - nearest, value.imag());
  if (!(defect <= 0.25)) {  // negated so that NaN (p at a node) also trips
    throw AmbiguousWinding("winding_number: quadrature value too far from an integer");
  }
  return static_cast<int>(nearest);
}

}  // namespace rhkit
