#pragma once

#include <array>

#include <Eigen/Dense>

#include "symsteer/numerics.hpp"
#include "symsteer/states.hpp"

namespace symsteer {

// Invertible single-qubit operation rescaled to det A = 1. Of the two square
// roots the one with Re tr A >= 0 (tie: Im tr A >= 0) is kept.
class LocalOp {
 public:
  explicit LocalOp(const Eigen::Matrix2cd& a);  // throws InvalidInput if singular

  const Eigen::Matrix2cd& matrix() const noexcept { return a_; }
  LocalOp inverse() const;

 private:
  Eigen::Matrix2cd a_;
};

// The spinor-level operation whose action on Majorana roots sends
// src[i] -> dst[i]. Points of each triple must be pairwise distinct
// (chordal distance > 1e-9), else InvalidInput.
LocalOp moebius_from_triples(const std::array<ExtendedComplex, 3>& src,
                             const std::array<ExtendedComplex, 3>& dst);

// Image of a Majorana root under A: spinor (1, z) -> A (1, z).
ExtendedComplex moebius_apply(const LocalOp& a, const ExtendedComplex& z);

// (A x ... x A)|psi>, renormalised, computed on the roots.
SymmetricState apply_identical_local(const LocalOp& a, const SymmetricState& state);

// sqrt(2 - 2 |<A, B>| / (|A| |B|)) with the Frobenius inner product; zero iff
// the matrices are proportional.
double projective_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

}  // namespace symsteer
