#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "symsteer/numerics.hpp"
#include "symsteer/states.hpp"

namespace oracle {

using symsteer::cplx;

inline std::vector<cplx> random_dicke(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> d(n + 1);
  for (auto& c : d) c = cplx(g(rng), g(rng));
  return d;
}

inline symsteer::SymmetricState random_state(std::mt19937_64& rng, int n) {
  return symsteer::SymmetricState::from_dicke(random_dicke(rng, n));
}

inline cplx random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return cplx(g(rng), g(rng));
}

inline Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  return qr.householderQ();
}

inline Eigen::Matrix2cd random_sl2(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m / std::sqrt(m.determinant());
}

// Register amplitudes written out by listing every basis string.
inline std::vector<cplx> register_from_dicke(const std::vector<cplx>& d) {
  const int n = static_cast<int>(d.size()) - 1;
  std::vector<cplx> amps(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    int zeros = 0;
    for (int q = 0; q < n; ++q) zeros += ((idx >> q) & 1) == 0;
    double binom = 1.0;
    for (int i = 1; i <= zeros; ++i) binom = binom * (n - zeros + i) / i;
    amps[idx] = d[zeros] / std::sqrt(binom);
  }
  double norm = 0.0;
  for (auto a : amps) norm += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(norm);
  return amps;
}

// Two-qubit marginal on qubits (i, j) by direct summation over the rest.
inline Eigen::Matrix4cd marginal_pair(const std::vector<cplx>& amps, int n, int i, int j) {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const std::size_t total = amps.size();
  const int si = n - 1 - i, sj = n - 1 - j;
  for (std::size_t x = 0; x < total; ++x) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        std::size_t y = x;
        y = (y & ~(std::size_t{1} << si)) | (std::size_t(a) << si);
        y = (y & ~(std::size_t{1} << sj)) | (std::size_t(b) << sj);
        const int row = 2 * int((x >> si) & 1) + int((x >> sj) & 1);
        rho(row, 2 * a + b) += amps[x] * std::conj(amps[y]);
      }
    }
  }
  return rho;
}

inline Eigen::Matrix2cd pauli(int mu) {
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd s;
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

inline Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd k;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) k(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
  return k;
}

// C = max(0, sqrt l1 - sqrt l2 - sqrt l3 - sqrt l4) from the raw
// non-Hermitian R matrix.
inline double wootters(const Eigen::Matrix4cd& rho, std::vector<double>* eigs = nullptr) {
  const Eigen::Matrix4cd yy = kron(pauli(2), pauli(2));
  const Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
  std::vector<double> l;
  for (int k = 0; k < 4; ++k) l.push_back(std::max(0.0, es.eigenvalues()[k].real()));
  std::sort(l.begin(), l.end(), std::greater<>());
  if (eigs) *eigs = l;
  return std::max(0.0, std::sqrt(l[0]) - std::sqrt(l[1]) - std::sqrt(l[2]) - std::sqrt(l[3]));
}

// Steered Bloch vector computed from the density matrix: Bob projects onto
// (I + q.sigma)/2 and Alice's conditional state is read off.
inline Eigen::Vector3d steer_from_rho(const Eigen::Matrix4cd& rho, const Eigen::Vector3d& q) {
  Eigen::Matrix2cd proj = pauli(0);
  for (int k = 0; k < 3; ++k) proj += q[k] * pauli(k + 1);
  proj *= 0.5;
  const Eigen::Matrix4cd m = kron(pauli(0), proj);
  const Eigen::Matrix4cd post = rho * m;
  Eigen::Matrix2cd alice = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) alice(a, b) += post(2 * a + k, 2 * b + k);
  alice /= alice.trace();
  Eigen::Vector3d p;
  for (int k = 0; k < 3; ++k) p[k] = (alice * pauli(k + 1)).trace().real();
  return p;
}

inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  return v.normalized();
}

}  // namespace oracle
