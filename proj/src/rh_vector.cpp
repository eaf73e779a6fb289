#include "rhkit/rh_vector.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "rhkit/rh_scalar.hpp"

namespace rhkit {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

cd expansion_center(const ClosedCurve& curve, const CollocationOptions& opts) {
  return opts.use_centroid ? curve.centroid() : opts.center;
}

// Generalized binomial coefficient C(p, q) for integer p of either sign.
double binom(int p, int q) {
  double acc = 1.0;
  for (int t = 0; t < q; ++t) acc *= static_cast<double>(p - t) / static_cast<double>(t + 1);
  return acc;
}

cd ipow(cd z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  cd r(1.0), b = z;
  for (int k = e; k != 0; k >>= 1) {
    if (k & 1) r *= b;
    b *= b;
  }
  return r;
}

// The truncated transmission system: unknowns are the scaled interior
// coefficients a_{c,j} of (z-z0)^j and exterior coefficients b_{c,j} of
// (z-z0)^{m-j}, j = 0..N; equations are Y^+(z_k) - rho_k Y^-(z_k) = 0 at
// every node.  Columns are equilibrated by the max modulus of their basis
// function over the nodes, which keeps the rank decision meaningful on
// curves away from the unit circle.
struct CollocationSystem {
  MatrixXcd M;
  std::vector<double> s_int, s_ext;  // column scalings, indexed by power j
  std::vector<std::vector<cd>> p_int, p_ext;  // basis values [j][k] (unscaled)
  cd z0;
  int n = 0, r = 0, N = 0, m = 0;

  int col_a(int j, int c) const { return j * r + c; }
  int col_b(int j, int c) const { return r * (N + 1) + j * r + c; }
};

CollocationSystem build_system(const ClosedCurve& curve, const JumpDatum& jump, int m,
                               const CollocationOptions& opts) {
  check_sampled_on(curve, jump.rho);
  const int n = curve.n;
  const int r = jump.rho.r;
  const int N = opts.truncation;
  if (N < 1) throw InputError("collocation: truncation must be positive");
  if (n < 2 * (N + 1)) {
    throw InputError("collocation: need n >= 2(N+1) nodes for oversampling");
  }

  CollocationSystem sys;
  sys.z0 = expansion_center(curve, opts);
  sys.n = n;
  sys.r = r;
  sys.N = N;
  sys.m = m;
  sys.p_int.assign(static_cast<size_t>(N + 1), std::vector<cd>(static_cast<size_t>(n)));
  sys.p_ext.assign(static_cast<size_t>(N + 1), std::vector<cd>(static_cast<size_t>(n)));
  sys.s_int.assign(static_cast<size_t>(N + 1), 0.0);
  sys.s_ext.assign(static_cast<size_t>(N + 1), 0.0);

  for (int k = 0; k < n; ++k) {
    const cd w = curve.z[k] - sys.z0;
    cd pj(1.0);
    for (int j = 0; j <= N; ++j) {
      sys.p_int[static_cast<size_t>(j)][static_cast<size_t>(k)] = pj;
      pj *= w;
    }
    cd qj = ipow(w, m);
    for (int j = 0; j <= N; ++j) {
      sys.p_ext[static_cast<size_t>(j)][static_cast<size_t>(k)] = qj;
      qj /= w;
    }
  }
  for (int j = 0; j <= N; ++j) {
    for (int k = 0; k < n; ++k) {
      sys.s_int[static_cast<size_t>(j)] =
          std::max(sys.s_int[static_cast<size_t>(j)],
                   std::abs(sys.p_int[static_cast<size_t>(j)][static_cast<size_t>(k)]));
      sys.s_ext[static_cast<size_t>(j)] =
          std::max(sys.s_ext[static_cast<size_t>(j)],
                   std::abs(sys.p_ext[static_cast<size_t>(j)][static_cast<size_t>(k)]));
    }
  }

  sys.M = MatrixXcd::Zero(static_cast<Eigen::Index>(n) * r,
                          static_cast<Eigen::Index>(2) * r * (N + 1));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j <= N; ++j) {
      const cd pv = sys.p_int[static_cast<size_t>(j)][static_cast<size_t>(k)] /
                    sys.s_int[static_cast<size_t>(j)];
      const cd qv = sys.p_ext[static_cast<size_t>(j)][static_cast<size_t>(k)] /
                    sys.s_ext[static_cast<size_t>(j)];
      for (int i = 0; i < r; ++i) {
        for (int c = 0; c < r; ++c) {
          sys.M(static_cast<Eigen::Index>(k) * r + i, sys.col_a(j, c)) -=
              jump.rho.at(k, i, c) * pv;
        }
        sys.M(static_cast<Eigen::Index>(k) * r + i, sys.col_b(j, i)) = qv;
      }
    }
  }
  return sys;
}

// Numerical nullity at the relative threshold tol, certified by a
// multiplicative gap at the cut.
int certified_nullity(const Eigen::VectorXd& sv, double tol, double gap) {
  const int q = static_cast<int>(sv.size());
  if (q == 0) return 0;
  const double smax = sv(0);
  if (smax == 0.0) return q;
  const double cut = tol * smax;
  int nullity = 0;
  while (nullity < q && sv(q - 1 - nullity) <= cut) ++nullity;
  if (nullity == q) return q;
  const double kept = sv(q - 1 - nullity);           // smallest kept
  const double discarded = (nullity > 0) ? sv(q - nullity) : 0.0;  // largest discarded
  if (nullity > 0) {
    if (kept < gap * discarded) {
      throw RankAmbiguous("collocation: no clear gap between kept and discarded singular values");
    }
  } else if (kept < gap * cut) {
    throw RankAmbiguous("collocation: smallest singular value sits too close to the threshold");
  }
  return nullity;
}

}  // namespace

JumpDatum make_jump(const ClosedCurve& curve, const BoundaryFunction& rho) {
  check_sampled_on(curve, rho);
  const int n = curve.n;
  const int r = rho.r;
  std::vector<cd> dets(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    if (r == 1) {
      dets[static_cast<size_t>(k)] = rho.at(k);
    } else {
      MatrixXcd A(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) A(i, j) = rho.at(k, i, j);
      dets[static_cast<size_t>(k)] = A.determinant();
    }
    if (std::abs(dets[static_cast<size_t>(k)]) == 0.0) {
      throw ZeroValue("make_jump: jump matrix is singular at a node");
    }
  }
  JumpDatum out;
  out.rho = rho;
  out.det_degree = degree(curve, BoundaryFunction::scalar(std::move(dets)));
  return out;
}

int h0_dimension(const ClosedCurve& curve, const JumpDatum& jump, int m,
                 const CollocationOptions& opts) {
  const CollocationSystem sys = build_system(curve, jump, m, opts);
  Eigen::JacobiSVD<MatrixXcd> svd(sys.M);
  return certified_nullity(svd.singularValues(), opts.tol, opts.gap);
}

H0Basis h0_basis(const ClosedCurve& curve, const JumpDatum& jump, int m,
                 const CollocationOptions& opts) {
  const CollocationSystem sys = build_system(curve, jump, m, opts);
  Eigen::JacobiSVD<MatrixXcd> svd(sys.M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int nullity = certified_nullity(svd.singularValues(), opts.tol, opts.gap);
  const int cols = static_cast<int>(sys.M.cols());

  H0Basis out;
  out.dimension = nullity;
  for (int v = 0; v < nullity; ++v) {
    const VectorXcd x = svd.matrixV().col(cols - 1 - v);
    std::vector<cd> ai(static_cast<size_t>(sys.r) * (sys.N + 1));
    std::vector<cd> bi(static_cast<size_t>(sys.r) * (sys.N + 1));
    for (int j = 0; j <= sys.N; ++j) {
      for (int c = 0; c < sys.r; ++c) {
        ai[static_cast<size_t>(j) * sys.r + c] =
            x(sys.col_a(j, c)) / sys.s_int[static_cast<size_t>(j)];
        bi[static_cast<size_t>(j) * sys.r + c] =
            x(sys.col_b(j, c)) / sys.s_ext[static_cast<size_t>(j)];
      }
    }
    out.interior.push_back(std::move(ai));
    out.exterior.push_back(std::move(bi));
  }
  return out;
}

SplittingResult splitting_type(const ClosedCurve& curve, const JumpDatum& jump,
                               const CollocationOptions& opts) {
  const int r = jump.rho.r;
  const int maxguess = std::abs(jump.det_degree) + r + 2;
  int lo = -(maxguess + 1);
  int hi = maxguess + 1;
  const int hard_lo = lo - 3 * maxguess - 8;
  const int hard_hi = hi + 3 * maxguess + 8;

  std::map<int, int> dims;
  auto dim_at = [&](int m) {
    auto it = dims.find(m);
    if (it == dims.end()) it = dims.emplace(m, h0_dimension(curve, jump, m, opts)).first;
    return it->second;
  };

  // The staircase flattens once the bottom is identically zero and the top
  // increments at the full rank r; extend adaptively until both hold.
  while (dim_at(lo) != 0) {
    lo -= 2;
    if (lo < hard_lo) throw RankAmbiguous("splitting_type: staircase does not vanish below");
  }
  while (dim_at(hi) - dim_at(hi - 1) != r) {
    hi += 2;
    if (hi > hard_hi) throw RankAmbiguous("splitting_type: staircase does not saturate above");
  }

  SplittingResult out;
  std::vector<int> indices;
  int prev_inc = 0;
  for (int m = lo; m <= hi; ++m) {
    const int dm = dim_at(m);
    out.staircase.push_back({m, dm});
    if (m == lo) continue;
    const int inc = dm - dim_at(m - 1);
    if (inc < prev_inc || inc > r) {
      throw RankAmbiguous("splitting_type: staircase increments are not monotone");
    }
    for (int t = 0; t < inc - prev_inc; ++t) indices.push_back(-m);
    prev_inc = inc;
  }
  std::sort(indices.begin(), indices.end(), std::greater<int>());

  long long sum = 0;
  for (int v : indices) sum += v;
  if (static_cast<int>(indices.size()) != r || sum != -static_cast<long long>(jump.det_degree)) {
    throw SumMismatch("splitting_type: recovered indices do not sum to -deg det");
  }
  out.indices = std::move(indices);
  return out;
}

RHSolveReport solve_rh(const ClosedCurve& curve, const JumpDatum& jump, int m, int d,
                       const std::vector<cd>& gamma_tilde, const CollocationOptions& opts) {
  const int r = jump.rho.r;
  if (d < -1) throw InputError("solve_rh: d must be >= -1");
  if (d >= 0 && static_cast<int>(gamma_tilde.size()) != (d + 1) * r) {
    throw InputError("solve_rh: gamma_tilde must have (d+1) blocks of r components");
  }
  if (d == -1 && !gamma_tilde.empty()) {
    throw InputError("solve_rh: gamma_tilde must be empty when d = -1");
  }
  const CollocationSystem sys = build_system(curve, jump, m, opts);
  if (d + 1 > sys.N) throw InputError("solve_rh: truncation too small for the constraint order");

  RHSolveReport out;
  out.m = m;
  out.d = d;
  out.gamma_tilde = gamma_tilde;
  out.truncation = sys.N;
  out.tol = opts.tol;
  out.center = sys.z0;
  out.interior_coeffs.assign(static_cast<size_t>(r) * (sys.N + 1), cd(0.0));
  out.exterior_coeffs.assign(static_cast<size_t>(r) * (sys.N + 1), cd(0.0));

  // Affine dimension over a particular solution: homogeneous solutions with
  // the constrained exterior orders removed, i.e. pole order m-d-1.
  out.affine_dimension = h0_dimension(curve, jump, m - d - 1, opts);

  if (d < 0) {
    // No constraint: the zero solution represents the homogeneous space.
    out.solvable = true;
    out.residual = 0.0;
    return out;
  }

  // Leading block gamma~_{-d} must not vanish (the constraint data is a
  // nowhere-zero section on the divisor at infinity).
  double lead = 0.0;
  for (int c = 0; c < r; ++c) lead = std::max(lead, std::abs(gamma_tilde[static_cast<size_t>(c)]));
  if (lead == 0.0) {
    throw DegenerateConstraint("solve_rh: leading gamma_tilde block vanishes");
  }

  // Pin the exterior coefficients beta_0..beta_d of (z-z0)^{m-j} from the
  // z-power matching at infinity.  With g_i = gamma_tilde block i, the
  // triangular system reads
  //   sum_{j<=i} C(m-j, i-j) (-z0)^{i-j} beta_j = g_i,   i = 0..d.
  std::vector<std::vector<cd>> beta(static_cast<size_t>(d + 1), std::vector<cd>(r));
  for (int i = 0; i <= d; ++i) {
    for (int c = 0; c < r; ++c) {
      cd acc = gamma_tilde[static_cast<size_t>(i) * r + c];
      for (int j = 0; j < i; ++j) {
        acc -= binom(m - j, i - j) * ipow(-sys.z0, i - j) * beta[static_cast<size_t>(j)][static_cast<size_t>(c)];
      }
      beta[static_cast<size_t>(i)][static_cast<size_t>(c)] = acc;
    }
  }

  // Substitute the pinned columns and solve the rest least-squares.
  const int cols = static_cast<int>(sys.M.cols());
  const int pinned = (d + 1) * r;
  VectorXcd rhs = VectorXcd::Zero(sys.M.rows());
  for (int j = 0; j <= d; ++j) {
    for (int c = 0; c < r; ++c) {
      const cd scaled = beta[static_cast<size_t>(j)][static_cast<size_t>(c)] *
                        sys.s_ext[static_cast<size_t>(j)];
      rhs -= sys.M.col(sys.col_b(j, c)) * scaled;
    }
  }
  MatrixXcd A(sys.M.rows(), cols - pinned);
  A.leftCols(r * (sys.N + 1)) = sys.M.leftCols(r * (sys.N + 1));
  for (int j = d + 1; j <= sys.N; ++j) {
    for (int c = 0; c < r; ++c) {
      A.col(r * (sys.N + 1) + (j - d - 1) * r + c) = sys.M.col(sys.col_b(j, c));
    }
  }
  Eigen::JacobiSVD<MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int reduced_nullity = certified_nullity(svd.singularValues(), opts.tol, opts.gap);
  if (reduced_nullity != out.affine_dimension) {
    throw RankAmbiguous("solve_rh: constrained nullity disagrees with the homogeneous dimension");
  }
  svd.setThreshold(opts.tol);
  const VectorXcd x = svd.solve(rhs);

  // Assemble raw coefficients.
  for (int j = 0; j <= sys.N; ++j) {
    for (int c = 0; c < r; ++c) {
      out.interior_coeffs[static_cast<size_t>(j) * r + c] =
          x(sys.col_a(j, c)) / sys.s_int[static_cast<size_t>(j)];
    }
  }
  for (int j = 0; j <= d; ++j) {
    for (int c = 0; c < r; ++c) {
      out.exterior_coeffs[static_cast<size_t>(j) * r + c] = beta[static_cast<size_t>(j)][static_cast<size_t>(c)];
    }
  }
  for (int j = d + 1; j <= sys.N; ++j) {
    for (int c = 0; c < r; ++c) {
      out.exterior_coeffs[static_cast<size_t>(j) * r + c] =
          x(r * (sys.N + 1) + (j - d - 1) * r + c) / sys.s_ext[static_cast<size_t>(j)];
    }
  }

  // Node-by-node defect of the assembled solution.
  double resid = 0.0;
  for (int k = 0; k < sys.n; ++k) {
    for (int i = 0; i < r; ++i) {
      cd yplus(0.0), rhominus(0.0);
      for (int j = 0; j <= sys.N; ++j) {
        yplus += out.exterior_coeffs[static_cast<size_t>(j) * r + i] *
                 sys.p_ext[static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
      for (int c = 0; c < r; ++c) {
        cd ym(0.0);
        for (int j = 0; j <= sys.N; ++j) {
          ym += out.interior_coeffs[static_cast<size_t>(j) * r + c] *
                sys.p_int[static_cast<size_t>(j)][static_cast<size_t>(k)];
        }
        rhominus += jump.rho.at(k, i, c) * ym;
      }
      resid = std::max(resid, std::abs(yplus - rhominus));
    }
  }
  out.residual = resid;

  double scale = 1.0;
  for (const cd& g : gamma_tilde) scale = std::max(scale, std::abs(g));
  out.solvable = resid <= opts.tol * scale;
  return out;
}

int sl2_stratum(const ClosedCurve& curve, const JumpDatum& jump,
                const CollocationOptions& opts, double det_tol) {
  if (jump.rho.r != 2) throw InputError("sl2_stratum: rank must be 2");
  for (int k = 0; k < curve.n; ++k) {
    const cd det = jump.rho.at(k, 0, 0) * jump.rho.at(k, 1, 1) -
                   jump.rho.at(k, 0, 1) * jump.rho.at(k, 1, 0);
    if (std::abs(det - cd(1.0)) > det_tol) {
      throw NotSL2("sl2_stratum: determinant differs from 1 at a node");
    }
  }
  const SplittingResult split = splitting_type(curve, jump, opts);
  return split.indices[0];
}

}  // namespace rhkit
