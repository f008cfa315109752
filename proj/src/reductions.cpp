#include "symsteer/reductions.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "symsteer/errors.hpp"

namespace symsteer {

namespace {

// Number of zeros in a 2-bit pattern ab (a is the high bit).
int zeros_in(int pattern, int bits) {
  int z = 0;
  for (int b = 0; b < bits; ++b) z += ((pattern >> b) & 1) == 0;
  return z;
}

// rho[p, p'] = sum_t C(N-m, t) d_{z+t} conj(d_{z'+t}) / sqrt(C(N,z+t) C(N,z'+t))
// where z, z' count zeros among the m kept qubits and t the zeros among the
// traced ones.
Eigen::MatrixXcd reduce_m(const SymmetricState& state, int m) {
  const int n = state.n_qubits();
  const int dim = 1 << m;
  std::vector<double> inv_sqrt(n + 1);
  for (int j = 0; j <= n; ++j) inv_sqrt[j] = 1.0 / std::sqrt(binomial(n, j));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int p = 0; p < dim; ++p) {
    const int z = zeros_in(p, m);
    for (int q = 0; q < dim; ++q) {
      const int zq = zeros_in(q, m);
      cplx acc = 0.0;
      for (int t = 0; t <= n - m; ++t) {
        acc += binomial(n - m, t) * state[z + t] * std::conj(state[zq + t]) *
               inv_sqrt[z + t] * inv_sqrt[zq + t];
      }
      rho(p, q) = acc;
    }
  }
  return rho;
}

}  // namespace

const Eigen::Matrix2cd& pauli(int mu) {
  static const std::array<Eigen::Matrix2cd, 4> s = [] {
    std::array<Eigen::Matrix2cd, 4> out;
    const cplx i(0.0, 1.0);
    out[0] << 1, 0, 0, 1;
    out[1] << 0, 1, 1, 0;
    out[2] << 0, -i, i, 0;
    out[3] << 1, 0, 0, -1;
    return out;
  }();
  if (mu < 0 || mu > 3) throw InvalidInput("Pauli index out of range");
  return s[mu];
}

Eigen::Matrix2cd DensityMatrix2::trace_out(int slot) const {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) {
        r(a, b) += slot == 0 ? m(2 * k + a, 2 * k + b) : m(2 * a + k, 2 * b + k);
      }
    }
  }
  return r;
}

Eigen::Vector3d DensityMatrix1::bloch() const {
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) r[i] = (m * pauli(i + 1)).trace().real();
  return r;
}

DensityMatrix2 reduce_two(const SymmetricState& state) {
  if (state.n_qubits() < 2) throw InvalidInput("two-qubit marginal needs N >= 2");
  DensityMatrix2 out;
  out.m = reduce_m(state, 2);
  return out;
}

DensityMatrix1 reduce_one(const SymmetricState& state) {
  if (state.n_qubits() < 1) throw InvalidInput("single-qubit marginal needs N >= 1");
  DensityMatrix1 out;
  out.m = reduce_m(state, 1);
  return out;
}

Eigen::MatrixXcd partial_trace_register(const QubitRegisterState& reg,
                                        const std::vector<int>& keep) {
  const int n = reg.n_qubits;
  if (n > kMaxRegisterQubits) throw SizeError("register too large for partial trace");
  if (reg.amplitudes.size() != (std::size_t{1} << n)) {
    throw InvalidInput("register amplitude count does not match qubit count");
  }
  const int m = static_cast<int>(keep.size());
  if (m < 1 || m > 3) throw InvalidInput("partial trace keeps 1 to 3 qubits");
  for (int i = 0; i < m; ++i) {
    if (keep[i] < 0 || keep[i] >= n) throw InvalidInput("kept qubit index out of range");
    for (int j = 0; j < i; ++j) {
      if (keep[i] == keep[j]) throw InvalidInput("duplicate kept qubit index");
    }
  }
  // Bit position of qubit q in the basis index (qubit 0 is the MSB).
  auto bit = [n](std::size_t idx, int q) { return static_cast<int>((idx >> (n - 1 - q)) & 1); };
  std::size_t keep_mask = 0;
  for (int q : keep) keep_mask |= std::size_t{1} << (n - 1 - q);

  const int dim = 1 << m;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  const std::size_t total = reg.amplitudes.size();
  for (std::size_t i = 0; i < total; ++i) {
    const cplx ai = reg.amplitudes[i];
    if (ai == 0.0) continue;
    int pi = 0;
    for (int q : keep) pi = (pi << 1) | bit(i, q);
    const std::size_t rest = i & ~keep_mask;
    // Enumerate all j that agree with i outside the kept qubits.
    for (int pj = 0; pj < dim; ++pj) {
      std::size_t j = rest;
      for (int s = 0; s < m; ++s) {
        if ((pj >> (m - 1 - s)) & 1) j |= std::size_t{1} << (n - 1 - keep[s]);
      }
      rho(pi, pj) += ai * std::conj(reg.amplitudes[j]);
    }
  }
  const cplx tr = rho.trace();
  if (std::abs(tr) > 0.0) rho /= tr.real();
  return rho;
}

DensityCheck check_density(const Eigen::MatrixXcd& rho) {
  DensityCheck c;
  c.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  c.trace_error = std::abs(rho.trace() - cplx(1.0, 0.0));
  Eigen::MatrixXcd h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

}  // namespace symsteer
