#include "symsteer/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "symsteer/errors.hpp"

namespace symsteer {

namespace {

constexpr double kNegativeFail = -1e-6;

Eigen::Matrix4cd spin_flip() {
  Eigen::Matrix4cd yy;
  yy.setZero();
  // sigma_y x sigma_y in the {00,01,10,11} basis.
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

}  // namespace

ConcurrenceResult concurrence(const DensityMatrix2& rho) {
  static const Eigen::Matrix4cd yy = spin_flip();
  const Eigen::Matrix4cd h = 0.5 * (rho.m + rho.m.adjoint());
  const Eigen::Matrix4cd tilde = yy * h.conjugate() * yy;

  // R is similar to sqrt(rho) tilde sqrt(rho) = K K^dag with
  // K = sqrt(rho) sqrt(tilde), so sqrt of R's spectrum is K's singular values.
  // Taking them directly avoids square roots of rounding noise.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
  Eigen::Vector4d w = es.eigenvalues();
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  for (int i = 0; i < 4; ++i) {
    if (w[i] < -1e-10 * scale) throw NonPhysicalError("two-qubit state is not positive");
    if (w[i] < 1e-14 * scale) w[i] = 0.0;
  }
  const Eigen::Matrix4cd sq =
      es.eigenvectors() * w.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  const Eigen::Matrix4cd sq_tilde = yy * sq.conjugate() * yy;

  Eigen::Matrix4cd m = sq * tilde * sq;
  m = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> rs(m, Eigen::EigenvaluesOnly);
  if (rs.eigenvalues().minCoeff() < kNegativeFail) {
    throw NonPhysicalError("R matrix has a negative eigenvalue");
  }
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(sq * sq_tilde);

  ConcurrenceResult out;
  for (int i = 0; i < 4; ++i) {
    const double sv = svd.singularValues()[i];
    out.sqrt_r_eigs[i] = sv;
    out.r_eigs[i] = sv * sv;
  }
  const auto& s = out.sqrt_r_eigs;
  out.concurrence = std::max(0.0, s[0] - s[1] - s[2] - s[3]);
  return out;
}

std::array<double, 4> r_matrix_eigs_closed_form(int n) {
  if (n < 5) throw InvalidInput("closed-form R spectrum needs N >= 5");
  const double a = (n - 2.0) / (2.0 * n);
  return {a, a, 2.0 / n, 0.0};
}

TangleReport n_tangle(const SymmetricState& state) {
  const int n = state.n_qubits();
  if (n < 3) throw InvalidInput("N-tangle needs N >= 3");
  const ConcurrenceResult c = concurrence(reduce_two(state));
  TangleReport t;
  t.concurrence = c.concurrence;
  t.r_eigs = c.r_eigs;
  t.det_rho1 = reduce_one(state).det();
  const double c2 = c.concurrence * c.concurrence;
  t.tau = 4.0 * t.det_rho1 - (n - 1) * c2;
  if (n == 3) {
    // Pure state: C_{1(23)}^2 = 4 det rho1; C12 = C13 by symmetry.
    t.ckw_residual = 4.0 * t.det_rho1 - 2.0 * c2;
  }
  return t;
}

}  // namespace symsteer
