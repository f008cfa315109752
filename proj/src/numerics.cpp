#include "symsteer/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "symsteer/errors.hpp"

namespace symsteer {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kAberthMaxIter = 200;
constexpr int kAberthRestarts = 4;
constexpr double kRootResidualTol = 1e-10;
// Relative size below which an end coefficient is treated as zero. In the
// chordal metric this moves a root by at most ~1e-14.
constexpr double kEndCoeffZeroTol = 1e-14;

struct HornerResult {
  cplx value;
  cplx derivative;
  double bound;  // sum |c_k| |z|^k, the rounding-error scale of the value
};

HornerResult horner(const std::vector<cplx>& c, cplx z) {
  cplx p = c.back();
  cplx dp = 0.0;
  double az = std::abs(z);
  double b = std::abs(c.back());
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[k];
    b = b * az + std::abs(c[k]);
  }
  return {p, dp, b};
}

// Newton step on P at small |z|, on the reversed polynomial at large |z|.
cplx polish_root(const std::vector<cplx>& c, const std::vector<cplx>& rev, cplx z) {
  for (int it = 0; it < 3; ++it) {
    if (std::abs(z) <= 1.0) {
      HornerResult h = horner(c, z);
      if (h.derivative == 0.0 || std::abs(h.value) <= kEps * h.bound) break;
      cplx next = z - h.value / h.derivative;
      if (std::abs(horner(c, next).value) >= std::abs(h.value)) break;
      z = next;
    } else {
      cplx w = 1.0 / z;
      HornerResult h = horner(rev, w);
      if (h.derivative == 0.0 || std::abs(h.value) <= kEps * h.bound) break;
      cplx next = w - h.value / h.derivative;
      if (next == 0.0 || std::abs(horner(rev, next).value) >= std::abs(h.value)) break;
      z = 1.0 / next;
    }
  }
  return z;
}

double worst_residual(const std::vector<cplx>& c, const std::vector<cplx>& roots) {
  ComplexPoly p(c);
  double worst = 0.0;
  for (cplx z : roots) worst = std::max(worst, scaled_residual(p, z));
  return worst;
}

// One Aberth-Ehrlich run from the given start; returns true when every root
// reached the rounding-error level of its residual.
bool aberth(const std::vector<cplx>& c, std::vector<cplx>& z) {
  const int n = static_cast<int>(z.size());
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kAberthMaxIter; ++iter) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      HornerResult h = horner(c, z[k]);
      if (std::abs(h.value) <= 8.0 * kEps * h.bound) {
        done[k] = true;
        continue;
      }
      all_done = false;
      cplx ratio = h.value / h.derivative;
      cplx repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k && z[k] != z[j]) repulsion += 1.0 / (z[k] - z[j]);
      }
      cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[k] -= step;
      if (std::abs(step) <= 4.0 * kEps * std::abs(z[k])) done[k] = true;
    }
    if (all_done) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

std::vector<cplx> companion_roots(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

// Clusters that are the rounding-level splitting of a multiple root are
// replaced by their mean, which is accurate to O(eps) rather than eps^(1/m).
void merge_multiple_roots(const std::vector<cplx>& c, std::vector<cplx>& z) {
  const int n = static_cast<int>(z.size());
  if (n < 2) return;
  std::vector<int> label(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    for (int j = i + 1; j < n; ++j) {
      if (label[j] < 0 && std::abs(z[i] - z[j]) <= 1e-4 * std::max(1.0, std::abs(z[i]))) {
        label[j] = next;
      }
    }
    ++next;
  }
  for (int g = 0; g < next; ++g) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i) if (label[i] == g) members.push_back(i);
    const int m = static_cast<int>(members.size());
    if (m < 2) continue;
    cplx mean = 0.0;
    for (int i : members) mean += z[i];
    mean /= static_cast<double>(m);
    // Derivatives 1..m-1 must vanish at a genuine multiple root.
    std::vector<cplx> d = c;
    bool multiple = true;
    for (int order = 1; order < m && multiple; ++order) {
      std::vector<cplx> nd(d.size() - 1);
      for (std::size_t k = 1; k < d.size(); ++k) nd[k - 1] = d[k] * static_cast<double>(k);
      d = std::move(nd);
      HornerResult h = horner(d, mean);
      if (std::abs(h.value) > 1e-6 * h.bound) multiple = false;
    }
    if (!multiple) continue;
    // P^(m-1) has a simple root at an m-fold root of P; Newton on it fixes
    // the mean of iterates that stopped early inside the flat region.
    std::vector<cplx> dd(d.size() > 1 ? d.size() - 1 : 1, 0.0);
    for (std::size_t k = 1; k < d.size(); ++k) dd[k - 1] = d[k] * static_cast<double>(k);
    cplx root = mean;
    for (int it = 0; it < 20; ++it) {
      const cplx f = horner(d, root).value;
      const cplx fp = horner(dd, root).value;
      if (fp == 0.0) break;
      const cplx step = f / fp;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      root -= step;
      if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(root))) break;
    }
    if (std::abs(root - mean) > 1e-4 * std::max(1.0, std::abs(mean))) root = mean;
    for (int i : members) z[i] = root;
  }
}

}  // namespace

double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  cplx z = a.value(), w = b.value();
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() ||
      std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx x) { return x == 0.0; })) {
    throw InvalidInput("polynomial has no nonzero coefficient");
  }
}

int ComplexPoly::degree() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[k] != 0.0) return k;
  }
  return 0;
}

cplx ComplexPoly::operator()(cplx z) const { return horner(coeffs_, z).value; }

double ComplexPoly::max_abs_coeff() const {
  double m = 0.0;
  for (cplx x : coeffs_) m = std::max(m, std::abs(x));
  return m;
}

std::vector<ExtendedComplex> MajoranaRootSet::points() const {
  std::vector<ExtendedComplex> pts(finite_roots.begin(), finite_roots.end());
  for (int i = 0; i < infinity_count; ++i) pts.push_back(ExtendedComplex::infinity());
  return pts;
}

MajoranaRootSet MajoranaRootSet::from_points(std::span<const ExtendedComplex> pts) {
  MajoranaRootSet r;
  for (const auto& p : pts) {
    if (p.is_infinite()) {
      ++r.infinity_count;
    } else {
      r.finite_roots.push_back(p.value());
    }
  }
  return r;
}

double root_set_distance(const MajoranaRootSet& a, const MajoranaRootSet& b) {
  if (a.total() != b.total()) return std::numeric_limits<double>::infinity();
  std::vector<ExtendedComplex> pa = a.points(), pb = b.points();
  const std::size_t n = pa.size();
  std::vector<bool> used_a(n, false), used_b(n, false);
  double worst = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used_b[j]) continue;
        double d = chordal_distance(pa[i], pb[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_a[bi] = used_b[bj] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

double scaled_residual(const ComplexPoly& p, cplx z) {
  const double scale =
      p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(z)), p.degree());
  return std::abs(p(z)) / scale;
}

std::vector<cplx> poly_from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{1.0};
  for (cplx r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

MajoranaRootSet poly_roots(const ComplexPoly& p, int nominal_degree) {
  const std::vector<cplx>& all = p.coeffs();
  const double cmax = p.max_abs_coeff();
  int top = static_cast<int>(all.size()) - 1;
  while (top > 0 && std::abs(all[top]) <= kEndCoeffZeroTol * cmax) --top;
  if (top > nominal_degree) {
    throw InvalidInput("nominal degree is below the polynomial degree");
  }
  int low = 0;
  while (low < top && std::abs(all[low]) <= kEndCoeffZeroTol * cmax) ++low;

  MajoranaRootSet out;
  out.infinity_count = nominal_degree - top;
  out.finite_roots.assign(low, cplx(0.0, 0.0));
  const int n = top - low;
  if (n == 0) return out;

  std::vector<cplx> c(all.begin() + low, all.begin() + top + 1);
  std::vector<cplx> rev(c.rbegin(), c.rend());

  if (n == 1) {
    out.finite_roots.push_back(-c[0] / c[1]);
    return out;
  }

  // Start on a circle at the geometric mean of the root moduli.
  const double radius = std::pow(std::abs(c[0] / c[n]), 1.0 / n);
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);

  std::vector<cplx> z(n);
  bool converged = false;
  for (int attempt = 0; attempt <= kAberthRestarts && !converged; ++attempt) {
    for (int k = 0; k < n; ++k) {
      double angle = 2.0 * std::numbers::pi * k / n + 0.4;
      double r = radius;
      if (attempt > 0) {
        angle += 0.5 * jitter(rng);
        r *= 1.0 + 0.3 * jitter(rng);
      }
      z[k] = std::polar(r, angle);
    }
    converged = aberth(c, z);
  }
  if (!converged || worst_residual(c, z) > kRootResidualTol) {
    std::vector<cplx> zc = companion_roots(c);
    if (!converged || worst_residual(c, zc) < worst_residual(c, z)) z = std::move(zc);
  }
  for (cplx& r : z) r = polish_root(c, rev, r);
  merge_multiple_roots(c, z);

  const double worst = worst_residual(c, z);
  if (worst > kRootResidualTol) {
    std::ostringstream msg;
    msg << "polynomial root finding did not converge (worst residual " << worst << ")";
    throw ConvergenceError(msg.str(), worst);
  }
  out.finite_roots.insert(out.finite_roots.end(), z.begin(), z.end());
  return out;
}

HermitianEigen4 hermitian_eig4(const Eigen::Matrix4cd& h) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidInput("matrix is not Hermitian");
  }
  Eigen::Matrix4cd sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(sym);
  HermitianEigen4 out;
  for (int i = 0; i < 4; ++i) {
    out.values(i) = es.eigenvalues()(3 - i);
    out.vectors.col(i) = es.eigenvectors().col(3 - i);
  }
  return out;
}

EigenSystem4 real_eig4(const Eigen::Matrix4d& m) {
  Eigen::EigenSolver<Eigen::Matrix4d> es(m, false);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigenvalue iteration failed");
  }
  std::array<cplx, 4> lam;
  for (int i = 0; i < 4; ++i) lam[i] = es.eigenvalues()(i);
  std::sort(lam.begin(), lam.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });

  const double scale = std::max(m.norm(), std::numeric_limits<double>::min());
  const double group_tol = kDegeneracyTol * scale;

  EigenSystem4 out;
  int col = 0;
  for (int i = 0; i < 4;) {
    int j = i + 1;
    while (j < 4 && std::abs(lam[j] - lam[j - 1]) <= group_tol) ++j;
    const int size = j - i;
    cplx mean = 0.0;
    for (int k = i; k < j; ++k) mean += lam[k];
    mean /= static_cast<double>(size);
    for (int k = i; k < j; ++k) {
      const double im_tol = (size == 1 ? 1e-9 : kDegeneracyTol) * scale;
      if (std::abs(lam[k].imag()) > im_tol || std::abs(mean.imag()) > 1e-9 * scale) {
        std::ostringstream msg;
        msg << "non-physical spectrum: complex eigenvalue " << lam[k].real()
            << (lam[k].imag() >= 0 ? "+" : "") << lam[k].imag() << "i";
        throw NonPhysicalError(msg.str());
      }
    }

    EigenGroup g;
    g.eigenvalue = mean.real();
    g.algebraic_multiplicity = size;
    Eigen::Matrix4d shifted = m - g.eigenvalue * Eigen::Matrix4d::Identity();
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(shifted, Eigen::ComputeFullV);
    int nullity = 0;
    for (int k = 3; k >= 0; --k) {
      if (svd.singularValues()(k) <= 1e-9 * scale) ++nullity;
    }
    nullity = std::clamp(nullity, 1, size);
    g.basis = svd.matrixV().rightCols(nullity);
    g.defective = nullity < size;

    for (int k = 0; k < size; ++k) {
      out.eigenvalues[i + k] = g.eigenvalue;
      if (k < nullity) out.eigenvectors.col(col + k) = g.basis.col(k);
    }
    col += size;
    out.groups.push_back(std::move(g));
    i = j;
  }
  return out;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  if (n <= 20) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return static_cast<double>(r);
  }
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace symsteer
