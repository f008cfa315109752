#include "symsteer/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "symsteer/errors.hpp"

namespace symsteer {

namespace {

constexpr double kMaxFiniteRoot = 1e8;

void fix_register_phase(std::vector<cplx>& amps) {
  double norm2 = 0.0;
  for (cplx a : amps) norm2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(norm2);
  cplx phase = 1.0;
  for (cplx a : amps) {
    if (std::abs(a) * inv > 1e-12) {
      phase = std::conj(a) / std::abs(a);
      break;
    }
  }
  for (cplx& a : amps) a *= phase * inv;
}

}  // namespace

Spinor::Spinor(cplx c0, cplx c1) {
  const double n = std::sqrt(std::norm(c0) + std::norm(c1));
  if (!(n > 0.0)) throw InvalidInput("spinor has zero norm");
  c0 /= n;
  c1 /= n;
  if (std::abs(c0) > 1e-15) {
    cplx phase = std::conj(c0) / std::abs(c0);
    c0_ = std::abs(c0);
    c1_ = c1 * phase;
  } else {
    c0_ = 0.0;
    c1_ = 1.0;
  }
}

double Spinor::alpha() const {
  if (std::abs(c0_) < 1e-15 || std::abs(c1_) < 1e-15) return 0.0;
  double a = std::arg(c1_);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

double Spinor::beta() const { return 2.0 * std::atan2(std::abs(c1_), std::abs(c0_)); }

ExtendedComplex Spinor::root() const {
  if (c0_ == 0.0) return ExtendedComplex::infinity();
  return ExtendedComplex(c1_ / c0_);
}

ComplexPoly majorana_polynomial(const SymmetricState& state) {
  const int n = state.n_qubits();
  std::vector<cplx> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    c[k] = sign * std::sqrt(binomial(n, k)) * state[k];
  }
  return ComplexPoly(std::move(c));
}

MajoranaRootSet roots_from_dicke(const SymmetricState& state) {
  return poly_roots(majorana_polynomial(state), state.n_qubits());
}

SymmetricState dicke_from_roots(const MajoranaRootSet& roots) {
  const int n = roots.total();
  if (n < 1) throw InvalidInput("root set is empty");
  for (cplx z : roots.finite_roots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidInput("non-finite root");
    }
    if (std::abs(z) > kMaxFiniteRoot) {
      throw ScaleError("root magnitude above 1e8; use inf for the south pole");
    }
  }
  std::vector<cplx> c = poly_from_roots(roots.finite_roots);
  std::vector<cplx> d(n + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    d[k] = sign * c[k] / std::sqrt(binomial(n, static_cast<int>(k)));
  }
  return SymmetricState::from_dicke(std::move(d));
}

SymmetricState dicke_from_spinors(std::span<const Spinor> spinors) {
  const int n = static_cast<int>(spinors.size());
  if (n < 1) throw InvalidInput("no spinors given");
  std::vector<cplx> c{1.0};
  for (const Spinor& s : spinors) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k] * s.c0();
      next[k] -= c[k] * s.c1();
    }
    c.swap(next);
  }
  std::vector<cplx> d(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    d[k] = sign * c[k] / std::sqrt(binomial(n, k));
  }
  return SymmetricState::from_dicke(std::move(d));
}

Spinor spinor_from_root(const ExtendedComplex& root) {
  if (root.is_infinite()) return Spinor(0.0, 1.0);
  return Spinor(1.0, root.value());
}

std::vector<Spinor> spinors_from_roots(const MajoranaRootSet& roots) {
  std::vector<Spinor> out;
  for (const ExtendedComplex& p : roots.points()) out.push_back(spinor_from_root(p));
  return out;
}

QubitRegisterState symmetrize(std::span<const Spinor> spinors) {
  const int n = static_cast<int>(spinors.size());
  if (n < 1) throw InvalidInput("no spinors to symmetrize");
  if (n > kMaxSymmetrizeQubits) {
    throw SizeError("factorial symmetrization is capped at 8 spinors; use the Dicke route");
  }
  QubitRegisterState reg;
  reg.n_qubits = n;
  reg.amplitudes.assign(std::size_t{1} << n, 0.0);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<cplx> product;
  do {
    // Qubit 0 is the most significant bit, so build the product left to right.
    product.assign(1, 1.0);
    for (int q = 0; q < n; ++q) {
      const Spinor& s = spinors[order[q]];
      std::vector<cplx> next(product.size() * 2);
      for (std::size_t i = 0; i < product.size(); ++i) {
        next[2 * i] = product[i] * s.c0();
        next[2 * i + 1] = product[i] * s.c1();
      }
      product.swap(next);
    }
    for (std::size_t i = 0; i < product.size(); ++i) reg.amplitudes[i] += product[i];
  } while (std::next_permutation(order.begin(), order.end()));

  fix_register_phase(reg.amplitudes);
  return reg;
}

}  // namespace symsteer
