#include "symsteer/locops.hpp"

#include <cmath>

#include "symsteer/errors.hpp"
#include "symsteer/majorana.hpp"

namespace symsteer {

namespace {

using Mat2 = Eigen::Matrix2cd;

Mat2 make(cplx a, cplx b, cplx c, cplx d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

// Moebius matrix [[a, b], [c, d]] (z -> (a z + b)/(c z + d)) sending
// z1 -> 0, z2 -> 1, z3 -> inf.
Mat2 to_standard(const ExtendedComplex& p1, const ExtendedComplex& p2, const ExtendedComplex& p3) {
  if (p1.is_infinite()) {
    const cplx z2 = p2.value(), z3 = p3.value();
    return make(0.0, z2 - z3, 1.0, -z3);
  }
  if (p2.is_infinite()) {
    const cplx z1 = p1.value(), z3 = p3.value();
    return make(1.0, -z1, 1.0, -z3);
  }
  if (p3.is_infinite()) {
    const cplx z1 = p1.value(), z2 = p2.value();
    return make(1.0, -z1, 0.0, z2 - z1);
  }
  const cplx z1 = p1.value(), z2 = p2.value(), z3 = p3.value();
  return make(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1));
}

void check_distinct(const std::array<ExtendedComplex, 3>& t, const char* which) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (chordal_distance(t[i], t[j]) <= 1e-9) {
        throw InvalidInput(std::string(which) + " triple has coincident points");
      }
}

}  // namespace

LocalOp::LocalOp(const Eigen::Matrix2cd& a) {
  if (!a.allFinite()) throw InvalidInput("local operation has non-finite entries");
  const cplx det = a.determinant();
  const double scale = a.cwiseAbs2().sum();
  if (!(std::abs(det) > 1e-14 * scale) || scale == 0.0) {
    throw InvalidInput("local operation is singular");
  }
  a_ = a / std::sqrt(det);
  const cplx tr = a_.trace();
  const double eps = 1e-12 * std::sqrt(a_.cwiseAbs2().sum());
  if (tr.real() < -eps || (std::abs(tr.real()) <= eps && tr.imag() < 0.0)) a_ = -a_;
}

LocalOp LocalOp::inverse() const { return LocalOp(a_.inverse()); }

LocalOp moebius_from_triples(const std::array<ExtendedComplex, 3>& src,
                             const std::array<ExtendedComplex, 3>& dst) {
  check_distinct(src, "source");
  check_distinct(dst, "target");
  const Mat2 m = to_standard(dst[0], dst[1], dst[2]).inverse() *
                 to_standard(src[0], src[1], src[2]);
  // A spinor matrix [[a, b], [c, d]] acts on roots as z -> (d z + c)/(b z + a).
  return LocalOp(make(m(1, 1), m(1, 0), m(0, 1), m(0, 0)));
}

ExtendedComplex moebius_apply(const LocalOp& op, const ExtendedComplex& z) {
  const Mat2& a = op.matrix();
  Eigen::Vector2cd s;
  if (z.is_infinite()) {
    s << 0.0, 1.0;
  } else {
    s << 1.0, z.value();
  }
  const Eigen::Vector2cd t = a * s;
  if (std::abs(t[0]) <= 1e-300 || std::abs(t[1]) > 1e15 * std::abs(t[0])) {
    return ExtendedComplex::infinity();
  }
  return ExtendedComplex(t[1] / t[0]);
}

SymmetricState apply_identical_local(const LocalOp& op, const SymmetricState& state) {
  std::vector<Spinor> image;
  for (const Spinor& s : spinors_from_roots(roots_from_dicke(state))) {
    const Eigen::Vector2cd t = op.matrix() * Eigen::Vector2cd(s.c0(), s.c1());
    image.emplace_back(t[0], t[1]);
  }
  return dicke_from_spinors(image);
}

double projective_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw InvalidInput("zero matrix has no projective class");
  // Same as sqrt(2 - 2|<A, B>|/(|A||B|)), but without the cancellation that
  // floors that form at sqrt(eps).
  const cplx ip = (a.adjoint() * b).trace();
  const cplx phase = std::abs(ip) > 0.0 ? std::conj(ip) / std::abs(ip) : cplx(1.0);
  return (a / na - phase * b / nb).norm();
}

}  // namespace symsteer
