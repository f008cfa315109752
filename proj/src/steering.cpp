#include "symsteer/steering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "symsteer/errors.hpp"
#include "symsteer/lorentz.hpp"
#include "symsteer/numerics.hpp"

namespace symsteer {

namespace {

constexpr double kNullTol = 1e-7;
constexpr double kTypeTwoTol = 1e-6;

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}

const std::array<Eigen::Matrix4cd, 16>& pauli_pairs() {
  static const std::array<Eigen::Matrix4cd, 16> pp = [] {
    std::array<Eigen::Matrix4cd, 16> out;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) out[4 * mu + nu] = kron(pauli(mu), pauli(nu));
    return out;
  }();
  return pp;
}

struct Tetrad {
  Eigen::Vector4d x;
  double eigenvalue;
};

}  // namespace

const Eigen::Matrix4d& minkowski() {
  static const Eigen::Matrix4d g = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return g;
}

RealRep real_rep(const DensityMatrix2& rho) {
  RealRep rep;
  const auto& pp = pauli_pairs();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      rep.lambda(mu, nu) = (rho.m * pp[4 * mu + nu]).trace().real();
  return rep;
}

DensityMatrix2 density_from_real_rep(const RealRep& rep) {
  DensityMatrix2 rho;
  const auto& pp = pauli_pairs();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) rho.m += 0.25 * rep.lambda(mu, nu) * pp[4 * mu + nu];
  return rho;
}

OmegaPair omega(const RealRep& rep) {
  OmegaPair o;
  o.omega = rep.lambda * minkowski() * rep.lambda.transpose();
  o.omega = 0.5 * (o.omega + o.omega.transpose()).eval();
  o.g_omega = minkowski() * o.omega;
  return o;
}

CanonicalForm canonical_form(const RealRep& rep) {
  const Eigen::Matrix4d& g = minkowski();
  const OmegaPair op = omega(rep);
  const EigenSystem4 es = real_eig4(op.g_omega);
  const double scale = std::max(1.0, op.g_omega.cwiseAbs().maxCoeff());

  CanonicalForm cf;
  for (int k = 0; k < 4; ++k) {
    if (es.eigenvalues[k] < -1e-9 * scale) {
      throw NonPhysicalError("G Omega has a negative eigenvalue");
    }
    cf.g_omega_eigs[k] = std::max(0.0, es.eigenvalues[k]);
  }
  const EigenGroup& top = es.groups.front();
  if (top.eigenvalue <= 1e-12 * scale) {
    throw NonPhysicalError("G Omega vanishes (product marginal); no Lorentz canonical form");
  }

  // G-diagonalise every eigenspace. Columns of each basis are Euclidean
  // orthonormal, so the restricted metric's eigenvalues are Minkowski norms
  // of unit vectors.
  std::vector<Tetrad> spatial;
  Eigen::Vector4d x0 = Eigen::Vector4d::Zero();
  double x0_norm = -2.0;
  for (std::size_t gi = 0; gi < es.groups.size(); ++gi) {
    const EigenGroup& grp = es.groups[gi];
    if (grp.basis.cols() == 0) continue;
    const Eigen::MatrixXd metric = grp.basis.transpose() * g * grp.basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ms(metric);
    const Eigen::Matrix<double, 4, Eigen::Dynamic> y = grp.basis * ms.eigenvectors();
    const int cols = static_cast<int>(y.cols());
    int skip = -1;
    if (gi == 0) {
      skip = cols - 1;  // largest metric value sits last
      x0 = y.col(skip);
      x0_norm = ms.eigenvalues()[skip];
    }
    for (int c = 0; c < cols; ++c) {
      if (c == skip) continue;
      const double mu = ms.eigenvalues()[c];
      if (mu < -kNullTol) spatial.push_back({y.col(c) / std::sqrt(-mu), grp.eigenvalue});
    }
  }
  if (x0[0] < 0.0) x0 = -x0;
  cf.x0 = x0;
  cf.x0_minkowski_norm = x0_norm;
  if (x0_norm < -kNullTol) {
    throw NonPhysicalError("top eigenvector of G Omega is spacelike");
  }

  const double det_lambda = rep.lambda.determinant();

  if (x0_norm <= kNullTol) {
    cf.type = CanonicalType::TypeII;
    TypeTwoFit fit = fit_type_two(rep.lambda, x0);
    if (fit.a1 < 0.0) {
      const Eigen::Matrix4d flip = Eigen::Vector4d(1.0, -1.0, -1.0, 1.0).asDiagonal();
      fit.alice = flip * fit.alice;
      fit.normalised = flip * fit.normalised;
      fit.a1 = -fit.a1;
    }
    cf.phi0 = fit.scale * fit.scale;
    if (!(cf.phi0 > 0.0)) throw ConvergenceError("Type II search failed", fit.residual);
    cf.a0 = cf.g_omega_eigs[0] / cf.phi0;
    cf.a1 = std::sqrt(cf.g_omega_eigs[2] / cf.phi0);
    cf.residual = std::max({fit.residual, std::abs(fit.a0 - cf.a0), std::abs(fit.a1 - cf.a1)});
    cf.lambda_canonical = fit.normalised;
    cf.alice_lorentz = fit.alice;
    cf.bob_lorentz = fit.bob;
    if (cf.residual > kTypeTwoTol) {
      throw ConvergenceError("Type II canonical form not reached", cf.residual);
    }
    return cf;
  }

  cf.type = CanonicalType::TypeI;
  x0 /= std::sqrt(x0_norm);
  // Complete a defective tetrad with G-orthogonal unit vectors; the
  // eigen-residual then records the shortfall.
  for (int axis = 1; spatial.size() < 3 && axis <= 3; ++axis) {
    Eigen::Vector4d v = Eigen::Vector4d::Unit(axis);
    v -= (x0.transpose() * g * v)(0) * x0;
    for (const Tetrad& t : spatial) v += (t.x.transpose() * g * v)(0) * t.x;
    const double n = -(v.transpose() * g * v)(0);
    if (n > 1e-6) spatial.push_back({v / std::sqrt(n), 0.0});
  }
  if (spatial.size() != 3) throw NonPhysicalError("could not build a Lorentz tetrad");
  std::stable_sort(spatial.begin(), spatial.end(),
                   [](const Tetrad& a, const Tetrad& b) { return a.eigenvalue > b.eigenvalue; });

  // Assign spatial eigenvectors to coordinate axes.
  std::array<int, 3> perm{0, 1, 2}, best{0, 1, 2};
  double best_score = -1.0;
  do {
    double score = 0.0;
    for (int k = 0; k < 3; ++k) {
      score += std::abs(spatial[k].x[1 + perm[k]]) / spatial[k].x.tail<3>().norm();
    }
    if (score > best_score + 1e-12) {
      best_score = score;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const double lam0 = top.eigenvalue;
  Eigen::Matrix4d la;
  la.row(0) = x0.transpose();
  for (int k = 0; k < 3; ++k) {
    const int axis = best[k];
    Eigen::Vector4d x = spatial[k].x;
    if (x[1 + axis] < 0.0) x = -x;
    la.row(1 + axis) = x.transpose();
    cf.axis_semiaxes[axis] = std::sqrt(std::max(0.0, spatial[k].eigenvalue) / lam0);
    cf.semiaxes[k] = std::sqrt(cf.g_omega_eigs[k + 1] / lam0);
  }
  std::sort(cf.semiaxes.begin(), cf.semiaxes.end(), std::greater<>());

  int smallest = 2;
  for (int axis = 1; axis >= 0; --axis) {
    if (cf.axis_semiaxes[axis] < cf.axis_semiaxes[smallest]) smallest = axis;
  }
  if (la.determinant() < 0.0) la.row(1 + smallest) *= -1.0;
  cf.sign = det_lambda < -1e-14 ? -1 : 1;
  cf.alice_lorentz = la;
  cf.lambda_canonical = Eigen::Matrix4d::Zero();
  cf.lambda_canonical(0, 0) = 1.0;
  for (int axis = 0; axis < 3; ++axis) {
    cf.lambda_canonical(1 + axis, 1 + axis) = cf.axis_semiaxes[axis];
  }
  cf.lambda_canonical(1 + smallest, 1 + smallest) *= cf.sign;

  Eigen::Matrix4d x = la.transpose();
  Eigen::Vector4d target(lam0, 0, 0, 0);
  for (int k = 0; k < 3; ++k) target[1 + best[k]] = -spatial[k].eigenvalue;
  const double metric_err = (x.transpose() * g * x - g).cwiseAbs().maxCoeff();
  const double eig_err =
      (x.transpose() * op.omega * x - Eigen::Matrix4d(target.asDiagonal())).cwiseAbs().maxCoeff() /
      scale;
  cf.residual = std::max(metric_err, eig_err);
  return cf;
}

EllipsoidGeometry ellipsoid(const CanonicalForm& cf) {
  EllipsoidGeometry e;
  if (cf.type == CanonicalType::TypeI) {
    e.semiaxes = cf.axis_semiaxes;
  } else {
    e.center = Eigen::Vector3d(0.0, 0.0, 1.0 - cf.a0);
    e.semiaxes = {cf.a1, cf.a1, cf.a0};
  }
  e.principal_semiaxes = e.semiaxes;
  std::sort(e.principal_semiaxes.begin(), e.principal_semiaxes.end(), std::greater<>());
  e.volume_fraction = e.semiaxes[0] * e.semiaxes[1] * e.semiaxes[2];
  e.degenerate = e.principal_semiaxes[2] < 1e-12;
  return e;
}

EllipsoidGeometry steering_ellipsoid(const RealRep& rep) {
  const Eigen::Vector3d a = rep.alice_bloch();
  const Eigen::Vector3d b = rep.bob_bloch();
  const Eigen::Matrix3d t = rep.lambda.block<3, 3>(1, 1);
  const double s = 1.0 - b.squaredNorm();
  if (s < 1e-12) throw DegenerateSteeringError("Bob's marginal is pure; ellipsoid undefined");
  EllipsoidGeometry e;
  e.center = (a - t * b) / s;
  const Eigen::Matrix3d k = t - a * b.transpose();
  const Eigen::Matrix3d q =
      k * (Eigen::Matrix3d::Identity() + b * b.transpose() / s) * k.transpose() / s;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (q + q.transpose()));
  for (int i = 0; i < 3; ++i) {
    e.principal_semiaxes[i] = std::sqrt(std::max(0.0, es.eigenvalues()[2 - i]));
  }
  e.semiaxes = e.principal_semiaxes;
  e.volume_fraction = e.semiaxes[0] * e.semiaxes[1] * e.semiaxes[2];
  e.degenerate = e.principal_semiaxes[2] < 1e-12;
  return e;
}

Eigen::Vector3d steer(const RealRep& rep, const Eigen::Vector3d& q) {
  if (std::abs(q.norm() - 1.0) > 1e-10) throw InvalidInput("measurement direction must be a unit vector");
  const Eigen::Vector4d v = rep.lambda * Eigen::Vector4d(1.0, q[0], q[1], q[2]);
  if (v[0] <= 1e-12) throw DegenerateSteeringError("measurement outcome has zero probability");
  return v.tail<3>() / v[0];
}

MonogamyReport volume_monogamy(const RealRep& rep, const Eigen::Vector3d& bloch) {
  MonogamyReport m;
  m.det_lambda = rep.lambda.determinant();
  m.r = bloch.norm();
  const double s = 1.0 - m.r * m.r;
  if (s < 1e-12) {
    if (std::abs(m.det_lambda) >= 1e-12) {
      throw SingularVolumeError("pure marginal with nonzero det Lambda");
    }
    m.v = 0.0;
  } else {
    m.v = std::abs(m.det_lambda) / (s * s);
  }
  const double c = std::cbrt(m.v);
  m.lhs = c * c;
  m.satisfied = m.lhs <= m.bound + 1e-12;
  return m;
}

std::vector<MeshPoint> ellipsoid_mesh(const CanonicalForm& cf) {
  RealRep rep;
  rep.lambda = cf.lambda_canonical;
  std::vector<MeshPoint> mesh;
  mesh.reserve(kMeshAzimuth * kMeshPolar);
  for (int u = 0; u < kMeshAzimuth; ++u) {
    const double f = 2.0 * std::numbers::pi * u / kMeshAzimuth;
    for (int v = 0; v < kMeshPolar; ++v) {
      const double t = std::numbers::pi * v / (kMeshPolar - 1);
      const Eigen::Vector3d q(std::sin(t) * std::cos(f), std::sin(t) * std::sin(f), std::cos(t));
      mesh.push_back({u, v, steer(rep, q.normalized())});
    }
  }
  return mesh;
}

std::string mesh_csv(const std::vector<MeshPoint>& mesh) {
  std::string out = "u_index,v_index,p1,p2,p3\n";
  char buf[128];
  for (const MeshPoint& m : mesh) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g\n", m.u, m.v, m.p[0], m.p[1], m.p[2]);
    out += buf;
  }
  return out;
}

}  // namespace symsteer
