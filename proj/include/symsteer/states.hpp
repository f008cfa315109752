#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symsteer/numerics.hpp"

namespace symsteer {

inline constexpr int kMaxQubits = 512;
inline constexpr int kMaxRegisterQubits = 14;

// Pure permutation-symmetric N-qubit state in the Dicke basis.
//
// Index convention: dicke()[k] multiplies the Dicke vector with k qubits in
// |0> and N-k in |1>, i.e. |N/2, k - N/2>. So
//
//   k = N      |00...0>           (all zeros)
//   k = N-1    W  = |N/2, N/2-1>  (one excitation)
//   k = 1      W~ = |N/2, 1-N/2>  (one zero)
//   k = 0      |11...1>
//
// Construction normalises the coefficients and fixes the global phase so the
// first nonzero coefficient is real and positive.
class SymmetricState {
 public:
  static SymmetricState from_dicke(std::vector<cplx> coeffs);

  int n_qubits() const noexcept { return static_cast<int>(dicke_.size()) - 1; }
  const std::vector<cplx>& dicke() const noexcept { return dicke_; }
  cplx operator[](int k) const { return dicke_[k]; }

 private:
  explicit SymmetricState(std::vector<cplx> d) : dicke_(std::move(d)) {}
  std::vector<cplx> dicke_;
};

// Full 2^N amplitude vector. Qubit 0 is the most significant bit of the basis
// index, and a 0 bit means |0> at that qubit.
struct QubitRegisterState {
  int n_qubits = 0;
  std::vector<cplx> amplitudes;
};

enum class StateKind { Ghz, W, WBar, WWBar, GhzGen, WWBarGen, Dicke };

// Named states. theta is required for GhzGen / WWBarGen and must lie in
// (0, pi); k is required for Dicke (0 <= k <= N, k counting |0> factors).
SymmetricState make_state(StateKind kind, int n_qubits,
                          std::optional<double> theta = std::nullopt,
                          std::optional<int> k = std::nullopt);

// Throws SizeError when N exceeds kMaxRegisterQubits.
QubitRegisterState to_register(const SymmetricState& state);

// |<a|b>|^2 on state vectors.
double fidelity(const SymmetricState& a, const SymmetricState& b);
double fidelity(const QubitRegisterState& a, const QubitRegisterState& b);

// Parses the CLI state grammar:
//   ghz:N  w:N  wbar:N  wwbar:N  ghz-gen:N:theta  wwbar-gen:N:theta
//   dicke:N:k  roots:[z1,z2,...]  (entries: a, bi, a+bi, a-bi, i, inf)
// Throws ParseError on malformed input; range violations surface as
// InvalidInput from make_state.
SymmetricState parse_state(std::string_view spec);

// Parses a single complex literal of the roots grammar.
ExtendedComplex parse_extended_complex(std::string_view text);

}  // namespace symsteer
