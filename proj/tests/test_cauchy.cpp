#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "rhkit/cauchy.hpp"
#include "rhkit/curve.hpp"

using rhkit::BoundaryFunction;
using rhkit::cd;
using rhkit::ClosedCurve;

namespace {

ClosedCurve ellipse(int n) { return ClosedCurve::fourier({cd(0.3), cd(0.0), cd(1.0)}, n); }

// Sample a scalar function on the curve nodes.
template <typename F>
BoundaryFunction sample(const ClosedCurve& c, F f) {
  std::vector<cd> v(static_cast<size_t>(c.n));
  for (int k = 0; k < c.n; ++k) v[static_cast<size_t>(k)] = f(c.z[k]);
  return BoundaryFunction::scalar(std::move(v));
}

// Trig polynomial sum_m coeffs[m+deg] zeta^m, m = -deg..deg.
struct TrigPoly {
  int deg;
  std::vector<cd> c;  // c[m + deg]
  cd operator()(cd zeta) const {
    cd acc(0.0);
    cd zp(1.0);
    // positive and zero powers
    for (int m = 0; m <= deg; ++m) {
      acc += c[static_cast<size_t>(m + deg)] * zp;
      zp *= zeta;
    }
    cd zn = 1.0 / zeta;
    for (int m = 1; m <= deg; ++m) {
      acc += c[static_cast<size_t>(deg - m)] * zn;
      zn /= zeta;
    }
    return acc;
  }
  // Residue calculus: the interior Cauchy limit keeps powers m >= 0, the
  // exterior limit is minus the negative powers.
  cd interior(cd z) const {
    cd acc(0.0), zp(1.0);
    for (int m = 0; m <= deg; ++m) {
      acc += c[static_cast<size_t>(m + deg)] * zp;
      zp *= z;
    }
    return acc;
  }
  cd exterior(cd z) const {
    cd acc(0.0), zn = 1.0 / z;
    for (int m = 1; m <= deg; ++m) {
      acc -= c[static_cast<size_t>(deg - m)] * zn;
      zn /= z;
    }
    return acc;
  }
};

TrigPoly random_trig(int deg, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TrigPoly p;
  p.deg = deg;
  p.c.resize(static_cast<size_t>(2 * deg + 1));
  for (cd& x : p.c) x = cd(u(rng), u(rng));
  return p;
}

}  // namespace

TEST_CASE("off-curve transform matches residue calculus on the circle") {
  const auto c = ClosedCurve::unit_circle(64);
  const TrigPoly p = random_trig(5, 1234);
  const auto u = sample(c, [&](cd z) { return p(z); });

  for (const cd z : {cd(0.3, 0.2), cd(-0.1, -0.45), cd(0.0)}) {
    const auto got = rhkit::cauchy_offcurve(c, u, z);
    CHECK(!got.low_accuracy);
    CHECK(std::abs(got.value[0] - p.interior(z)) < 1e-12);
  }
  for (const cd z : {cd(3.0, 1.0), cd(-2.0, 0.7)}) {
    const auto got = rhkit::cauchy_offcurve(c, u, z);
    CHECK(std::abs(got.value[0] - p.exterior(z)) < 1e-12);
  }
}

TEST_CASE("off-curve transform near the curve is flagged low accuracy") {
  const auto c = ClosedCurve::unit_circle(64);
  const auto u = sample(c, [](cd z) { return z; });
  const auto got = rhkit::cauchy_offcurve(c, u, cd(0.99, 0.0));
  CHECK(got.low_accuracy);
  CHECK(got.distance == doctest::Approx(0.01).epsilon(0.3));
}

TEST_CASE("boundary values on the circle reproduce the mode split exactly") {
  const int n = 64;
  const auto c = ClosedCurve::unit_circle(n);
  const TrigPoly p = random_trig(8, 99);
  const auto u = sample(c, [&](cd z) { return p(z); });
  const auto bv = rhkit::boundary_values(c, u);
  for (int k = 0; k < n; ++k) {
    CHECK(std::abs(bv.minus.at(k) - p.interior(c.z[k])) < 1e-13);
    CHECK(std::abs(bv.plus.at(k) - p.exterior(c.z[k])) < 1e-13);
  }
  CHECK(rhkit::plemelj_residual(c, u) < 1e-12);
}

TEST_CASE("jump identity at roundoff for trig polynomials, circle n = 64") {
  const auto c = ClosedCurve::unit_circle(64);
  for (unsigned seed : {7u, 8u, 9u, 10u}) {
    const TrigPoly p = random_trig(8, seed);
    const auto u = sample(c, [&](cd z) { return p(z); });
    CHECK(rhkit::plemelj_residual(c, u) <= 1e-10);
  }
}

TEST_CASE("boundary values on the ellipse: polynomial data") {
  // u = z^2 restricted to the ellipse extends holomorphically inside, so the
  // interior limit is z^2 itself and the exterior limit vanishes.
  const int n = 256;
  const auto c = ellipse(n);
  const auto u = sample(c, [](cd z) { return z * z; });
  const auto bv = rhkit::boundary_values(c, u);
  double worst_minus = 0.0, worst_plus = 0.0;
  for (int k = 0; k < n; ++k) {
    worst_minus = std::max(worst_minus, std::abs(bv.minus.at(k) - c.z[k] * c.z[k]));
    worst_plus = std::max(worst_plus, std::abs(bv.plus.at(k)));
  }
  CHECK(worst_minus < 1e-10);
  CHECK(worst_plus < 1e-10);
  CHECK(rhkit::plemelj_residual(c, u) <= 1e-8);
}

TEST_CASE("boundary values on the ellipse: exterior data") {
  // u = 1/(z - p) with p inside is the boundary value of an exterior
  // function vanishing at infinity: interior limit 0, exterior limit -u.
  const int n = 256;
  const auto c = ellipse(n);
  const cd p(0.4, 0.1);
  const auto u = sample(c, [&](cd z) { return 1.0 / (z - p); });
  const auto bv = rhkit::boundary_values(c, u);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    worst = std::max(worst, std::abs(bv.minus.at(k)));
    worst = std::max(worst, std::abs(bv.plus.at(k) + u.at(k)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("jump defect decays by 10x per grid doubling on the ellipse") {
  // A pole near the curve keeps the quadrature error above roundoff at
  // n = 256, so the decay of the defect is actually observable.
  const cd p(1.2, 0.0);  // just inside the right vertex 1.3
  auto defect = [&](int n) {
    const auto c = ellipse(n);
    const auto u = sample(c, [&](cd z) { return 1.0 / (z - p); });
    return rhkit::plemelj_residual(c, u);
  };
  const double e256 = defect(256), e512 = defect(512);
  CHECK(e256 <= 1e-8);
  CHECK(e256 > 1e-13);  // still resolvable, i.e. the study is meaningful
  CHECK(e512 <= e256 / 10.0);
}

TEST_CASE("off-curve values agree with the continued interior limit, ellipse") {
  const int n = 256;
  const auto c = ellipse(n);
  const auto u = sample(c, [](cd z) { return z * z; });
  for (const cd z : {cd(0.2, 0.1), cd(-0.3, 0.2), cd(0.5, -0.2)}) {
    const auto got = rhkit::cauchy_offcurve(c, u, z);
    CHECK(got.distance >= 0.1);
    CHECK(std::abs(got.value[0] - z * z) < 1e-8);
  }
}

TEST_CASE("transform decays at infinity") {
  const auto c = ClosedCurve::unit_circle(128);
  const auto one = sample(c, [](cd) { return cd(1.0); });
  CHECK(std::abs(rhkit::value_at_infinity(c, one)[0]) <= 1e-6);

  const auto zinv = sample(c, [](cd z) { return 1.0 / z; });
  const cd far = c.centroid() + cd(1e6 * c.diameter(), 0.0);
  const cd expect = -1.0 / far;
  const cd got = rhkit::value_at_infinity(c, zinv)[0];
  CHECK(std::abs(got - expect) <= 1e-3 * std::abs(expect));
}

TEST_CASE("matrix samples transform entrywise") {
  const int n = 64;
  const auto c = ClosedCurve::unit_circle(n);
  BoundaryFunction u = BoundaryFunction::zeros(2, n);
  for (int k = 0; k < n; ++k) {
    u.at(k, 0, 0) = c.z[k];
    u.at(k, 0, 1) = 1.0 / c.z[k];
    u.at(k, 1, 0) = cd(1.0);
    u.at(k, 1, 1) = c.z[k] * c.z[k] + 2.0 / c.z[k];
  }
  const auto bv = rhkit::boundary_values(c, u);
  for (int k = 0; k < n; ++k) {
    const cd z = c.z[k];
    CHECK(std::abs(bv.minus.at(k, 0, 0) - z) < 1e-13);
    CHECK(std::abs(bv.plus.at(k, 0, 1) + 1.0 / z) < 1e-13);
    CHECK(std::abs(bv.minus.at(k, 1, 0) - 1.0) < 1e-13);
    CHECK(std::abs(bv.minus.at(k, 1, 1) - z * z) < 1e-13);
    CHECK(std::abs(bv.plus.at(k, 1, 1) + 2.0 / z) < 1e-13);
  }
  CHECK(rhkit::plemelj_residual(c, u) < 1e-12);
}

TEST_CASE("sample count must match the curve") {
  const auto c = ClosedCurve::unit_circle(16);
  BoundaryFunction u = BoundaryFunction::scalar(std::vector<cd>(8, cd(1.0)));
  CHECK_THROWS_AS(rhkit::boundary_values(c, u), rhkit::InputError);
}
