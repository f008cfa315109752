#pragma once

#include <vector>

#include <Eigen/Dense>

#include "symsteer/states.hpp"

namespace symsteer {

// Basis order {|00>, |01>, |10>, |11>}; the left factor is the first slot.
struct DensityMatrix2 {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();

  // Traces out `slot` (0 = left factor) and returns the other qubit.
  Eigen::Matrix2cd trace_out(int slot) const;
};

struct DensityMatrix1 {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();

  // r_i = Tr(rho sigma_i)
  Eigen::Vector3d bloch() const;
  double det() const { return m.determinant().real(); }
};

// Closed-form marginals from the Dicke coefficients.
DensityMatrix2 reduce_two(const SymmetricState& state);
DensityMatrix1 reduce_one(const SymmetricState& state);

// Brute-force marginal over the listed qubits (at most 3). Qubit keep[0]
// becomes the most significant index of the result.
Eigen::MatrixXcd partial_trace_register(const QubitRegisterState& reg,
                                        const std::vector<int>& keep);

// Largest deviation from Hermiticity, trace 1 and positivity; used by tests
// and the CLI's sanity checks.
struct DensityCheck {
  double hermiticity = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
};
DensityCheck check_density(const Eigen::MatrixXcd& rho);

const Eigen::Matrix2cd& pauli(int mu);  // mu = 0..3, sigma_0 = I

}  // namespace symsteer
