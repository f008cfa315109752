#pragma once

#include <span>
#include <vector>

#include "symsteer/numerics.hpp"
#include "symsteer/states.hpp"

namespace symsteer {

// Single-qubit pure state c0|0> + c1|1>, unit norm, with c0 real and >= 0
// (c1 = 1 when c0 = 0). Equivalent to the Majorana point
// z = tan(beta/2) e^{i alpha} = c1 / c0.
class Spinor {
 public:
  Spinor(cplx c0, cplx c1);  // normalises and fixes the phase convention

  cplx c0() const noexcept { return c0_; }
  cplx c1() const noexcept { return c1_; }
  // Azimuth in [0, 2pi); 0 at the poles.
  double alpha() const;
  // Polar angle in [0, pi].
  double beta() const;
  ExtendedComplex root() const;

 private:
  cplx c0_;
  cplx c1_;
};

// Majorana polynomial sum_k (-1)^k sqrt(C(N,k)) d_k z^k, ascending order.
ComplexPoly majorana_polynomial(const SymmetricState& state);

MajoranaRootSet roots_from_dicke(const SymmetricState& state);

// Inverse map by Vieta expansion. Throws ScaleError for |z| > 1e8 (use the
// point at infinity instead).
SymmetricState dicke_from_roots(const MajoranaRootSet& roots);

// Same state from homogeneous spinor coordinates: the polynomial is
// prod_s (c0_s z - c1_s), so spinors near the south pole need no large
// numbers.
SymmetricState dicke_from_spinors(std::span<const Spinor> spinors);

// Finite z -> (1, z)/sqrt(1+|z|^2); infinity -> |1>; alpha = 0 at the poles.
Spinor spinor_from_root(const ExtendedComplex& root);
std::vector<Spinor> spinors_from_roots(const MajoranaRootSet& roots);

inline constexpr int kMaxSymmetrizeQubits = 8;

// Brute-force sum over all N! orderings of the product state, normalised,
// first nonzero amplitude real positive. Throws SizeError for N > 8.
QubitRegisterState symmetrize(std::span<const Spinor> spinors);

}  // namespace symsteer
