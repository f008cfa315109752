#pragma once

#include <Eigen/Dense>

namespace symsteer {

// Proper orthochronous Lorentz matrices acting on (t, x, y, z).
Eigen::Matrix4d lorentz_rotation(const Eigen::Vector3d& axis_angle);
Eigen::Matrix4d lorentz_boost(const Eigen::Vector3d& rapidity);
// Boost taking the 4-vector (1, b), |b| < 1, to a multiple of (1, 0, 0, 0).
Eigen::Matrix4d boost_to_rest(const Eigen::Vector3d& b);

struct TypeTwoFit {
  Eigen::Matrix4d alice = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d bob = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d normalised = Eigen::Matrix4d::Identity();  // M / M00
  double scale = 0.0;  // M00 of L_A Lambda L_B^T
  double a0 = 0.0;     // template read-off from the normalised matrix
  double a1 = 0.0;
  double residual = 0.0;  // Frobenius distance to the template
};

// Searches for L_A, L_B with L_A Lambda L_B^T proportional to
//   [[1,0,0,0],[0,a1,0,0],[0,0,-a1,0],[1-a0,0,0,a0]].
// x0 is the null eigenvector of G Omega. Never throws; the caller checks
// the residual.
TypeTwoFit fit_type_two(const Eigen::Matrix4d& lambda, const Eigen::Vector4d& x0);

}  // namespace symsteer
