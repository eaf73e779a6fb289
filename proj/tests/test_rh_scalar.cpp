#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "rhkit/cauchy.hpp"
#include "rhkit/curve.hpp"
#include "rhkit/errors.hpp"
#include "rhkit/fourier.hpp"
#include "rhkit/rh_scalar.hpp"

using namespace rhkit;

namespace {

template <class F>
BoundaryFunction sample(const ClosedCurve& c, F f) {
  BoundaryFunction u;
  u.r = 1;
  u.values.resize(c.n);
  for (int k = 0; k < c.n; ++k) u.values[static_cast<size_t>(k)] = f(c.z[static_cast<size_t>(k)]);
  return u;
}

BoundaryFunction power(const ClosedCurve& c, int k) {
  return sample(c, [k](cd z) { return std::pow(z, k); });
}

double max_abs(const std::vector<cd>& v) {
  double m = 0.0;
  for (const cd& x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_dist(const std::vector<cd>& a, const std::vector<cd>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Nowhere-zero density with known smooth logarithm, for quadrature stress
// tests: exp of a random real-coefficient trig polynomial plus i*(small).
BoundaryFunction random_nonvanishing(const ClosedCurve& c, int deg, unsigned seed,
                                     std::vector<cd>* log_out = nullptr) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> coef(-0.4, 0.4);
  std::vector<cd> modes(static_cast<size_t>(2 * deg + 1));
  for (auto& m : modes) m = cd(coef(gen), coef(gen));
  BoundaryFunction u;
  u.r = 1;
  u.values.resize(c.n);
  if (log_out) log_out->resize(c.n);
  for (int k = 0; k < c.n; ++k) {
    const cd z = c.z[static_cast<size_t>(k)];
    cd phi = 0.0;
    for (int m = -deg; m <= deg; ++m) phi += modes[static_cast<size_t>(m + deg)] * std::pow(z, m);
    if (log_out) (*log_out)[static_cast<size_t>(k)] = phi;
    u.values[static_cast<size_t>(k)] = std::exp(phi);
  }
  return u;
}

}  // namespace

TEST_CASE("winding degree of boundary densities") {
  const ClosedCurve c = ClosedCurve::unit_circle(64);
  for (int k = -3; k <= 3; ++k) {
    CHECK(degree(c, power(c, k)) == k);
  }
  CHECK(degree(c, sample(c, [](cd) { return cd(5.0, 2.0); })) == 0);
  CHECK(degree(c, sample(c, [](cd z) { return std::pow(z, -3) * (2.0 + z); })) == -3);
}

TEST_CASE("degree is additive under pointwise products") {
  const ClosedCurve c = ClosedCurve::unit_circle(128);
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 6; ++trial) {
    const int a = pick(gen), b = pick(gen);
    const BoundaryFunction fa = sample(c, [a](cd z) { return std::pow(z, a) * (2.0 + 0.5 * z); });
    const BoundaryFunction fb = sample(c, [b](cd z) { return std::pow(z, b) * (1.5 + 0.3 / z); });
    BoundaryFunction fab;
    fab.r = 1;
    fab.values.resize(c.n);
    for (int k = 0; k < c.n; ++k)
      fab.values[static_cast<size_t>(k)] =
          fa.values[static_cast<size_t>(k)] * fb.values[static_cast<size_t>(k)];
    CHECK(degree(c, fab) == degree(c, fa) + degree(c, fb));
  }
}

TEST_CASE("degree rejects vanishing samples and undersampled phases") {
  const ClosedCurve c = ClosedCurve::unit_circle(16);
  BoundaryFunction u = power(c, 1);
  u.values[3] = 0.0;
  CHECK_THROWS_AS(degree(c, u), ZeroValue);
  // z^9 on 16 nodes advances the phase by 9*2pi/16 > pi/2 per step.
  CHECK_THROWS_AS(degree(c, power(c, 9)), PhaseJumpTooLarge);
}

TEST_CASE("continuous logarithm on the circle") {
  const ClosedCurve c = ClosedCurve::unit_circle(64);
  SUBCASE("constant one") {
    const BoundaryFunction lg = continuous_log(c, sample(c, [](cd) { return cd(1.0); }));
    CHECK(max_abs(lg.values) == 0.0);
  }
  SUBCASE("constant e^2") {
    const BoundaryFunction lg =
        continuous_log(c, sample(c, [](cd) { return cd(std::exp(2.0)); }));
    for (const cd& v : lg.values) CHECK(std::abs(v - 2.0) < 1e-12);
  }
  SUBCASE("exp of a band-limited symbol is recovered exactly") {
    const BoundaryFunction f = sample(c, [](cd z) { return std::exp(z + 1.0 / z); });
    const BoundaryFunction lg = continuous_log(c, f);
    for (int k = 0; k < c.n; ++k) {
      const cd z = c.z[static_cast<size_t>(k)];
      CHECK(std::abs(lg.values[static_cast<size_t>(k)] - (z + 1.0 / z)) < 1e-12);
    }
  }
  SUBCASE("nonzero winding is rejected") {
    CHECK_THROWS_AS(continuous_log(c, power(c, 1)), NonzeroDegree);
    CHECK_THROWS_AS(continuous_log(c, power(c, -2)), NonzeroDegree);
  }
}

TEST_CASE("scalar factorization of elementary jumps") {
  const ClosedCurve c = ClosedCurve::unit_circle(64);
  const BoundaryFunction one = sample(c, [](cd) { return cd(1.0); });

  SUBCASE("trivial jump") {
    const ScalarFactorization fac = factorize_scalar(c, one, one);
    CHECK(max_dist(fac.f.values, one.values) < 1e-14);
    CHECK(max_abs(fac.cm.values) < 1e-14);
    CHECK(max_abs(fac.cp.values) < 1e-14);
    CHECK(fac.defect < 1e-14);
  }
  SUBCASE("constant jump lands in the interior factor") {
    const cd cval(2.0, 1.0);
    const BoundaryFunction fp = sample(c, [cval](cd) { return cval; });
    const ScalarFactorization fac = factorize_scalar(c, one, fp);
    const cd logc = std::log(cval);
    for (int k = 0; k < c.n; ++k) {
      CHECK(std::abs(fac.cm.values[static_cast<size_t>(k)] - logc) < 1e-12);
      CHECK(std::abs(fac.cp.values[static_cast<size_t>(k)]) < 1e-12);
      CHECK(std::abs(fac.f.values[static_cast<size_t>(k)] - cval) < 1e-12);
    }
    CHECK(fac.defect < 1e-12);
  }
  SUBCASE("equal sides leave the representative untouched") {
    const BoundaryFunction zeta = power(c, 1);
    const ScalarFactorization fac = factorize_scalar(c, zeta, zeta);
    CHECK(max_abs(fac.cm.values) < 1e-13);
    CHECK(max_abs(fac.cp.values) < 1e-13);
    CHECK(max_dist(fac.f.values, zeta.values) < 1e-13);
  }
}

TEST_CASE("scalar factorization defect stays small for generic smooth jumps") {
  const ClosedCurve c = ClosedCurve::unit_circle(256);
  for (unsigned seed : {11u, 12u, 13u}) {
    const BoundaryFunction fm = random_nonvanishing(c, 6, seed);
    const BoundaryFunction fp = random_nonvanishing(c, 6, seed + 100);
    const ScalarFactorization fac = factorize_scalar(c, fm, fp);
    CHECK(fac.defect <= 1e-8);
    // The two reconstructions agree with the stored representative.
    for (int k = 0; k < c.n; ++k) {
      const size_t i = static_cast<size_t>(k);
      const cd lhs = std::exp(fac.cm.values[i]) * fm.values[i];
      CHECK(std::abs(lhs - fac.f.values[i]) < 1e-12);
    }
  }
}

TEST_CASE("scalar factorization on a fourier curve") {
  const ClosedCurve c = ClosedCurve::fourier({0.3, 0.0, 1.0}, 256);
  const BoundaryFunction fm = sample(c, [](cd z) { return std::exp(0.4 * z); });
  const BoundaryFunction fp = sample(c, [](cd z) { return cd(2.0) + 0.1 * z; });
  const ScalarFactorization fac = factorize_scalar(c, fm, fp);
  CHECK(fac.defect <= 1e-8);
}

TEST_CASE("moduli splitting against power normal forms") {
  const ClosedCurve c = ClosedCurve::unit_circle(64);
  SUBCASE("degree zero splits into a pair of copies") {
    for (int h : {0, 1, 2}) {
      const ModuliSplit ms = moduli_split(c, power(c, h), 0, cd(0.0));
      CHECK(max_dist(ms.class_minus.values, power(c, h).values) < 1e-14);
      CHECK(max_dist(ms.class_plus.values, power(c, h).values) < 1e-14);
    }
  }
  SUBCASE("full-degree split trivializes the exterior class") {
    const ModuliSplit ms = moduli_split(c, power(c, 1), 1, cd(0.0));
    CHECK(max_dist(ms.class_minus.values, power(c, 1).values) < 1e-14);
    for (const cd& v : ms.class_plus.values) CHECK(std::abs(v - 1.0) < 1e-14);
  }
  SUBCASE("shifted representative keeps its degrees split as (0, -e)") {
    const BoundaryFunction f = sample(c, [](cd z) { return 2.0 + z; });
    const ModuliSplit ms = moduli_split(c, f, 2, cd(0.0));
    CHECK(max_dist(ms.class_minus.values, f.values) < 1e-14);
    for (int k = 0; k < c.n; ++k) {
      const cd z = c.z[static_cast<size_t>(k)];
      CHECK(std::abs(ms.class_plus.values[static_cast<size_t>(k)] -
                     (2.0 + z) / (z * z)) < 1e-13);
    }
    CHECK(degree(c, ms.class_minus) == 0);
    CHECK(degree(c, ms.class_plus) == -2);
  }
  SUBCASE("basepoint must lie inside") {
    CHECK_THROWS_AS(moduli_split(c, power(c, 1), 1, cd(3.0, 0.0)), BasepointOutside);
  }
}

TEST_CASE("class equivalence on both sides") {
  const ClosedCurve c = ClosedCurve::unit_circle(64);
  const BoundaryFunction one = sample(c, [](cd) { return cd(1.0); });
  const BoundaryFunction zeta = power(c, 1);
  const BoundaryFunction expz = sample(c, [](cd z) { return std::exp(z); });

  SUBCASE("reflexivity") {
    const BoundaryFunction f = sample(c, [](cd z) { return std::exp(0.3 * z + 0.2 / z); });
    CHECK(class_equiv(c, f, f, Side::Interior).equivalent);
    CHECK(class_equiv(c, f, f, Side::Exterior).equivalent);
  }
  SUBCASE("degree mismatch is an immediate failure") {
    const ClassEquivalence eq = class_equiv(c, one, zeta, Side::Interior);
    CHECK_FALSE(eq.equivalent);
    CHECK(eq.defect > 1.0);
  }
  SUBCASE("interior twists are invisible to the interior class") {
    CHECK(class_equiv(c, one, expz, Side::Interior).equivalent);
    CHECK_FALSE(class_equiv(c, one, expz, Side::Exterior).equivalent);
  }
  SUBCASE("exterior twists are invisible to the exterior class") {
    const BoundaryFunction expw = sample(c, [](cd z) { return std::exp(0.7 / z); });
    CHECK(class_equiv(c, one, expw, Side::Exterior).equivalent);
    CHECK_FALSE(class_equiv(c, one, expw, Side::Interior).equivalent);
  }
  SUBCASE("constant rescalings are invisible to both sides") {
    BoundaryFunction g = expz;
    for (auto& v : g.values) v *= cd(3.0, -1.0);
    CHECK(class_equiv(c, expz, g, Side::Interior).equivalent);
    CHECK(class_equiv(c, expz, g, Side::Exterior).equivalent);
  }
}

TEST_CASE("moduli split composes with class equivalence as a round trip") {
  // Splitting f by its full degree and multiplying the halves back together
  // reproduces a function in both one-sided classes of f.
  const ClosedCurve c = ClosedCurve::unit_circle(128);
  const BoundaryFunction f = sample(c, [](cd z) { return z * std::exp(0.2 * z + 0.1 / z); });
  const int e = degree(c, f);
  REQUIRE(e == 1);
  const ModuliSplit ms = moduli_split(c, f, e, cd(0.0));
  CHECK(class_equiv(c, f, ms.class_minus, Side::Interior).equivalent);
  CHECK(degree(c, ms.class_plus) == 0);
}

TEST_CASE("scalar problems solve with the expected dimensions") {
  const ClosedCurve c = ClosedCurve::unit_circle(128);
  const BoundaryFunction one = sample(c, [](cd) { return cd(1.0); });
  const BoundaryFunction two = sample(c, [](cd) { return cd(2.0); });
  const BoundaryFunction zeta = power(c, 1);

  SUBCASE("trivial jump, no constraint: the constants") {
    const ScalarRHReport rep = solve_scalar_rh(c, one, 0, -1, {});
    CHECK(rep.index == 0);
    CHECK(rep.homogeneous_dimension == 1);
    CHECK(rep.solvable);
  }
  SUBCASE("index minus one kills the homogeneous space") {
    const ScalarRHReport rep = solve_scalar_rh(c, zeta, 0, -1, {});
    CHECK(rep.index == -1);
    CHECK(rep.homogeneous_dimension == 0);
  }
  SUBCASE("constant jump with first-order normalization") {
    const ScalarRHReport rep = solve_scalar_rh(c, two, 0, 0, {cd(1.0)});
    CHECK(rep.solvable);
    CHECK(rep.residual <= 1e-10);
    CHECK(rep.affine_dimension == 0);
    // Y^- = 1/2 and Y^+ = 1: constant interior coefficient, top exterior one.
    CHECK(std::abs(rep.interior_coeffs[0] - 0.5) < 1e-10);
    CHECK(std::abs(rep.exterior_coeffs[0] - 1.0) < 1e-10);
    double rest = 0.0;
    for (size_t j = 1; j < rep.interior_coeffs.size(); ++j) {
      rest = std::max(rest, std::abs(rep.interior_coeffs[j]));
      rest = std::max(rest, std::abs(rep.exterior_coeffs[j]));
    }
    CHECK(rest < 1e-10);
  }
  SUBCASE("an index obstruction shows up as a fat residual") {
    for (int N : {16, 24, 32}) {
      CollocationOptions opts;
      opts.truncation = N;
      const ScalarRHReport rep = solve_scalar_rh(c, zeta, 0, 0, {cd(1.0)}, opts);
      CHECK_FALSE(rep.solvable);
      CHECK(rep.residual >= 1e-2);
    }
  }
  SUBCASE("gamma data size must match the normalization order") {
    CHECK_THROWS_AS(solve_scalar_rh(c, one, 0, 0, {}), InputError);
    CHECK_THROWS_AS(solve_scalar_rh(c, one, 0, -1, {cd(1.0)}), InputError);
  }
}

TEST_CASE("scalar dimension law across degrees and pole orders") {
  const ClosedCurve c = ClosedCurve::unit_circle(128);
  for (int k = -3; k <= 3; ++k) {
    for (int m = -3; m <= 3; ++m) {
      const BoundaryFunction f = power(c, k);
      const ScalarRHReport rep = solve_scalar_rh(c, f, m, -1, {});
      CHECK(rep.index == -k);
      CHECK(rep.homogeneous_dimension == std::max(0, -k + m + 1));
    }
  }
}
