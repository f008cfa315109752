#pragma once

#include <array>
#include <optional>

#include "symsteer/reductions.hpp"
#include "symsteer/states.hpp"

namespace symsteer {

struct ConcurrenceResult {
  double concurrence = 0.0;
  // Eigenvalues of R = rho (sy x sy) rho* (sy x sy), descending, >= 0.
  std::array<double, 4> r_eigs{};
  // Their square roots, the quantities entering C = sqrt(l1) - sqrt(l2) - ...
  std::array<double, 4> sqrt_r_eigs{};
};

// Throws NonPhysicalError when an R eigenvalue is below -1e-6.
ConcurrenceResult concurrence(const DensityMatrix2& rho);

// ((N-2)/2N, (N-2)/2N, 2/N, 0) for the WWbar family, N >= 5. These are the
// square roots of R's eigenvalues (rho2 is real and unchanged by the spin
// flip, so R = rho2^2). Throws InvalidInput for N < 5.
std::array<double, 4> r_matrix_eigs_closed_form(int n_qubits);

struct TangleReport {
  double concurrence = 0.0;
  std::array<double, 4> r_eigs{};
  double det_rho1 = 0.0;
  double tau = 0.0;                    // 4 det rho1 - (N-1) C^2
  std::optional<double> ckw_residual;  // N = 3 only
};

// Requires N >= 3.
TangleReport n_tangle(const SymmetricState& state);

}  // namespace symsteer
