#include "symsteer/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "symsteer/errors.hpp"

namespace symsteer {

SymmetricState SymmetricState::from_dicke(std::vector<cplx> coeffs) {
  if (coeffs.empty()) throw InvalidInput("state needs at least one Dicke coefficient");
  if (static_cast<int>(coeffs.size()) - 1 > kMaxQubits) {
    throw SizeError("qubit count exceeds " + std::to_string(kMaxQubits));
  }
  double norm2 = 0.0;
  for (cplx c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidInput("non-finite Dicke coefficient");
    }
    norm2 += std::norm(c);
  }
  if (!(norm2 > 0.0)) throw InvalidInput("all Dicke coefficients are zero");
  const double inv = 1.0 / std::sqrt(norm2);
  cplx phase = 1.0;
  for (cplx c : coeffs) {
    if (std::abs(c) * inv > 1e-15) {
      phase = std::conj(c) / std::abs(c);
      break;
    }
  }
  for (cplx& c : coeffs) c *= phase * inv;
  for (cplx& c : coeffs) {
    if (std::abs(c) <= 1e-15) c = 0.0;
  }
  return SymmetricState(std::move(coeffs));
}

SymmetricState make_state(StateKind kind, int n, std::optional<double> theta,
                          std::optional<int> k) {
  if (n < 2) throw InvalidInput("named states need N >= 2");
  if (n > kMaxQubits) throw SizeError("qubit count exceeds " + std::to_string(kMaxQubits));
  const bool wwbar = kind == StateKind::WWBar || kind == StateKind::WWBarGen;
  if (wwbar && n < 3) throw InvalidInput("WWbar states need N >= 3");
  const bool gen = kind == StateKind::GhzGen || kind == StateKind::WWBarGen;
  if (gen) {
    if (!theta) throw InvalidInput("generalized states need theta");
    if (!(*theta > 0.0 && *theta < std::numbers::pi)) {
      throw InvalidInput("theta must lie in (0, pi)");
    }
  }

  std::vector<cplx> d(n + 1, 0.0);
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case StateKind::Ghz:
      d[0] = d[n] = h;
      break;
    case StateKind::W:
      d[n - 1] = 1.0;
      break;
    case StateKind::WBar:
      d[1] = 1.0;
      break;
    case StateKind::WWBar:
      d[1] = d[n - 1] = h;
      break;
    case StateKind::GhzGen:
      d[0] = std::sin(*theta / 2.0);
      d[n] = std::cos(*theta / 2.0);
      break;
    case StateKind::WWBarGen:
      d[1] = std::sin(*theta / 2.0);
      d[n - 1] = std::cos(*theta / 2.0);
      break;
    case StateKind::Dicke:
      if (!k) throw InvalidInput("Dicke states need k");
      if (*k < 0 || *k > n) throw InvalidInput("Dicke index k must lie in [0, N]");
      d[*k] = 1.0;
      break;
  }
  return SymmetricState::from_dicke(std::move(d));
}

QubitRegisterState to_register(const SymmetricState& state) {
  const int n = state.n_qubits();
  if (n > kMaxRegisterQubits) {
    throw SizeError("register expansion is capped at " +
                    std::to_string(kMaxRegisterQubits) + " qubits");
  }
  std::vector<double> inv_sqrt_binom(n + 1);
  for (int j = 0; j <= n; ++j) inv_sqrt_binom[j] = 1.0 / std::sqrt(binomial(n, j));
  QubitRegisterState reg;
  reg.n_qubits = n;
  reg.amplitudes.resize(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < reg.amplitudes.size(); ++idx) {
    const int zeros = n - std::popcount(idx);
    reg.amplitudes[idx] = state[zeros] * inv_sqrt_binom[zeros];
  }
  return reg;
}

double fidelity(const SymmetricState& a, const SymmetricState& b) {
  if (a.n_qubits() != b.n_qubits()) throw InvalidInput("qubit counts differ");
  cplx overlap = 0.0;
  for (int k = 0; k <= a.n_qubits(); ++k) overlap += std::conj(a[k]) * b[k];
  return std::norm(overlap);
}

double fidelity(const QubitRegisterState& a, const QubitRegisterState& b) {
  if (a.n_qubits != b.n_qubits) throw InvalidInput("qubit counts differ");
  cplx overlap = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    na += std::norm(a.amplitudes[i]);
    nb += std::norm(b.amplitudes[i]);
  }
  return std::norm(overlap) / (na * nb);
}

}  // namespace symsteer
