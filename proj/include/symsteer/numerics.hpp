#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace symsteer {

using cplx = std::complex<double>;

// A point of the extended complex plane (the Riemann sphere).
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  ExtendedComplex(cplx z) : value_(z) {}  // NOLINT: implicit by design
  ExtendedComplex(double x) : value_(x, 0.0) {}  // NOLINT

  static ExtendedComplex infinity() {
    ExtendedComplex p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }
  // Undefined for the point at infinity.
  cplx value() const noexcept { return value_; }

  friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  cplx value_{0.0, 0.0};
  bool infinite_ = false;
};

// Euclidean distance between the Bloch-sphere images of two points
// (stereographic projection onto the unit sphere). Range [0, 2]; infinity is
// the south pole, at distance 2/sqrt(1+|z|^2) from z.
double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b);

// Polynomial with coefficients in ascending degree order (coeffs[k] * z^k).
// Trailing zeros are allowed; they encode a degree deficiency.
class ComplexPoly {
 public:
  explicit ComplexPoly(std::vector<cplx> coeffs);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  // Highest index with a nonzero coefficient.
  int degree() const;
  cplx operator()(cplx z) const;
  double max_abs_coeff() const;

 private:
  std::vector<cplx> coeffs_;
};

// Roots of a polynomial on the extended plane: finite roots plus the number
// of roots sitting at infinity.
struct MajoranaRootSet {
  std::vector<cplx> finite_roots;
  int infinity_count = 0;

  int total() const noexcept {
    return static_cast<int>(finite_roots.size()) + infinity_count;
  }
  std::vector<ExtendedComplex> points() const;
  static MajoranaRootSet from_points(std::span<const ExtendedComplex> pts);
};

// Largest pairwise chordal distance after greedy minimal-distance matching.
// Root sets of different size compare as +infinity.
double root_set_distance(const MajoranaRootSet& a, const MajoranaRootSet& b);

// Returns exactly `nominal_degree` roots counted with multiplicity. Missing
// top-degree coefficients become roots at infinity (the z' = 1/z = 0 roots of
// the reversed polynomial); lost low-degree coefficients become exact zeros.
// Finite roots come from Aberth-Ehrlich iteration (200-iteration cap, random
// restarts), with a companion-matrix fallback.
//
// Throws InvalidInput for an all-zero polynomial or nominal_degree < degree,
// ConvergenceError when no route reaches the residual target.
MajoranaRootSet poly_roots(const ComplexPoly& p, int nominal_degree);

// Expands prod (z - r) over the finite roots, ascending order.
std::vector<cplx> poly_from_roots(std::span<const cplx> roots);

// Backward-style residual |P(z)| / (max|c| * max(1,|z|)^deg).
double scaled_residual(const ComplexPoly& p, cplx z);

struct HermitianEigen4 {
  Eigen::Vector4d values;      // descending
  Eigen::Matrix4cd vectors;    // columns, unitary
};

// Throws InvalidInput if H deviates from Hermitian by more than 1e-12.
HermitianEigen4 hermitian_eig4(const Eigen::Matrix4cd& h);

struct EigenGroup {
  double eigenvalue = 0.0;        // mean of the clustered eigenvalues
  int algebraic_multiplicity = 0;
  // Euclidean-orthonormal basis of the eigenspace, one column per vector.
  Eigen::Matrix<double, 4, Eigen::Dynamic> basis;
  bool defective = false;         // geometric < algebraic multiplicity
};

struct EigenSystem4 {
  std::array<double, 4> eigenvalues{};  // descending
  // Column k pairs with eigenvalues[k]; columns past a defective group's
  // geometric multiplicity are zero.
  Eigen::Matrix4d eigenvectors = Eigen::Matrix4d::Zero();
  std::vector<EigenGroup> groups;       // descending by eigenvalue
};

inline constexpr double kDegeneracyTol = 1e-7;

// Real spectrum required; a genuinely complex pair raises NonPhysicalError.
EigenSystem4 real_eig4(const Eigen::Matrix4d& m);

// C(n, k) as a double; exact for n <= 20.
double binomial(int n, int k);

}  // namespace symsteer
