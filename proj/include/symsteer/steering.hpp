#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symsteer/reductions.hpp"

namespace symsteer {

// Lambda_{mu nu} = Tr[rho (sigma_mu x sigma_nu)]. Row index belongs to the
// first slot (Alice), column index to the second (Bob), so column 0 holds
// Alice's Bloch vector and row 0 Bob's.
struct RealRep {
  Eigen::Matrix4d lambda = Eigen::Matrix4d::Identity();

  Eigen::Vector3d alice_bloch() const { return lambda.block<3, 1>(1, 0); }
  Eigen::Vector3d bob_bloch() const { return lambda.block<1, 3>(0, 1).transpose(); }
};

RealRep real_rep(const DensityMatrix2& rho);
// rho = 1/4 sum Lambda_{mu nu} sigma_mu x sigma_nu
DensityMatrix2 density_from_real_rep(const RealRep& rep);

const Eigen::Matrix4d& minkowski();  // G = diag(1, -1, -1, -1)

struct OmegaPair {
  Eigen::Matrix4d omega;    // Lambda G Lambda^T
  Eigen::Matrix4d g_omega;  // G Omega
};
OmegaPair omega(const RealRep& rep);

enum class CanonicalType { TypeI, TypeII };

struct CanonicalForm {
  CanonicalType type = CanonicalType::TypeI;
  std::array<double, 4> g_omega_eigs{};  // lambda_0 >= ... >= lambda_3
  Eigen::Vector4d x0 = Eigen::Vector4d::Zero();  // unit Euclidean, x0[0] > 0
  double x0_minkowski_norm = 0.0;

  // Type I: a1 >= a2 >= a3 >= 0 and the sign carried by the third axis.
  std::array<double, 3> semiaxes{};
  int sign = 1;
  // Type I semiaxes as they sit on the x, y, z axes after Alice's transform
  // (unsigned).
  std::array<double, 3> axis_semiaxes{};

  // Type II parameters.
  double a0 = 0.0;
  double a1 = 0.0;
  double phi0 = 0.0;

  // Normalised canonical matrix (diag(1, sx, sy, sz) for Type I).
  Eigen::Matrix4d lambda_canonical = Eigen::Matrix4d::Identity();
  // Alice's Lorentz matrix; Bob's is only computed for Type II.
  Eigen::Matrix4d alice_lorentz = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d bob_lorentz = Eigen::Matrix4d::Identity();
  // Type I: eigen-decomposition residual. Type II: template fit residual.
  double residual = 0.0;
};

// Throws NonPhysicalError for complex or negative GOmega spectra, spacelike
// top eigenvectors and vanishing GOmega (product marginals); ConvergenceError
// if the Type II search misses the 1e-6 target.
CanonicalForm canonical_form(const RealRep& rep);

struct EllipsoidGeometry {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  // Coordinate-aligned semiaxes (x, y, z) of the canonical ellipsoid.
  std::array<double, 3> semiaxes{};
  // The same values sorted descending.
  std::array<double, 3> principal_semiaxes{};
  double volume_fraction = 0.0;  // unit ball = 1
  bool degenerate = false;
};

EllipsoidGeometry ellipsoid(const CanonicalForm& cf);

// Alice's steering ellipsoid of the state itself (no canonicalisation):
// center (a - T b)/(1 - b^2), shape matrix
// Q = (T - a b^T)(I + b b^T/(1 - b^2))(T - a b^T)^T / (1 - b^2).
// principal_semiaxes are sqrt(eig Q); semiaxes carries the same values.
EllipsoidGeometry steering_ellipsoid(const RealRep& rep);

// (1, p) ~ Lambda (1, q). Throws InvalidInput if |q| != 1 and
// DegenerateSteeringError if the outcome has zero probability.
Eigen::Vector3d steer(const RealRep& rep, const Eigen::Vector3d& q);

struct MonogamyReport {
  double det_lambda = 0.0;
  double r = 0.0;
  double v = 0.0;
  double lhs = 0.0;  // v^(2/3)
  double bound = 0.5;
  bool satisfied = true;
};

// v = |det Lambda| / (1 - r^2)^2 with r = |bloch|. For 1 - r^2 < 1e-12 the
// volume is 0 if det Lambda also vanishes, otherwise SingularVolumeError.
MonogamyReport volume_monogamy(const RealRep& rep, const Eigen::Vector3d& bloch);

inline constexpr int kMeshAzimuth = 64;
inline constexpr int kMeshPolar = 32;

struct MeshPoint {
  int u = 0;
  int v = 0;
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
};

// q(u, v) = (sin t cos f, sin t sin f, cos t), f = 2 pi u / 64,
// t = pi v / 31, pushed through the canonical matrix.
std::vector<MeshPoint> ellipsoid_mesh(const CanonicalForm& cf);

std::string mesh_csv(const std::vector<MeshPoint>& mesh);

}  // namespace symsteer
