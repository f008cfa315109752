#include "symsteer/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "symsteer/entanglement.hpp"
#include "symsteer/errors.hpp"
#include "symsteer/locops.hpp"
#include "symsteer/majorana.hpp"
#include "symsteer/reductions.hpp"
#include "symsteer/report.hpp"
#include "symsteer/steering.hpp"

namespace symsteer {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kOmega = std::polar(1.0, 2.0 * kPi / 3.0);

class Suite {
 public:
  // body returns the worst error; the check passes when it is <= tol.
  void check(const std::string& name, double tol, const std::function<double()>& body) {
    SelftestCheck c;
    c.name = name;
    try {
      const double err = body();
      c.passed = err <= tol;
      char buf[96];
      std::snprintf(buf, sizeof buf, "error %.3g (tol %.1g)", err, tol);
      c.detail = buf;
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("threw: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }
  std::vector<SelftestCheck> take() { return std::move(checks_); }

 private:
  std::vector<SelftestCheck> checks_;
};

MajoranaRootSet roots_of(std::vector<ExtendedComplex> pts) {
  return MajoranaRootSet::from_points(pts);
}

double register_error(const QubitRegisterState& got, const std::vector<cplx>& want) {
  // Compare up to a global phase.
  cplx overlap = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) overlap += std::conj(got.amplitudes[i]) * want[i];
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  double err = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    err = std::max(err, std::abs(got.amplitudes[i] * phase - want[i]));
  }
  return err;
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Eigen::Matrix4cd wwbar_marginal(int n) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(3, 3) = (n - 2.0) / (2.0 * n);
  m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = 1.0 / n;
  return m;
}

RealRep rep_of(const SymmetricState& s) { return real_rep(reduce_two(s)); }

double axes_error(const std::array<double, 3>& got, const std::array<double, 3>& want) {
  double e = 0.0;
  for (int i = 0; i < 3; ++i) e = std::max(e, std::abs(got[i] - want[i]));
  return e;
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  Suite s;
  const auto ghz3 = make_state(StateKind::Ghz, 3);
  const auto ghz4 = make_state(StateKind::Ghz, 4);
  const auto ww3 = make_state(StateKind::WWBar, 3);
  const auto ww4 = make_state(StateKind::WWBar, 4);

  s.check("roots GHZ3 = cube roots of unity", 1e-10, [&] {
    return root_set_distance(roots_from_dicke(ghz3), roots_of({1.0, kOmega, kOmega * kOmega}));
  });
  s.check("roots GHZ4 = fourth roots of -1", 1e-10, [&] {
    std::vector<ExtendedComplex> want;
    for (int k : {1, 3, 5, 7}) want.push_back(std::polar(1.0, k * kPi / 4.0));
    return root_set_distance(roots_from_dicke(ghz4), roots_of(want));
  });
  s.check("roots WWbar_N = {0, inf} + (N-2)-th roots of (-1)^(N+1)", 1e-10, [&] {
    double worst = 0.0;
    for (int n = 3; n <= 12; ++n) {
      std::vector<ExtendedComplex> want{0.0, ExtendedComplex::infinity()};
      const double offset = (n % 2 == 1) ? 0.0 : kPi;
      for (int k = 0; k < n - 2; ++k) want.push_back(std::polar(1.0, (offset + 2 * kPi * k) / (n - 2)));
      worst = std::max(worst, root_set_distance(roots_from_dicke(make_state(StateKind::WWBar, n)),
                                                roots_of(want)));
    }
    return worst;
  });

  s.check("symmetrized GHZ3 spinors", 1e-10, [&] {
    const cplx w = kOmega;
    const std::vector<Spinor> sp{Spinor(1.0, 1.0), Spinor(1.0, w * w), Spinor(1.0, w)};
    std::vector<cplx> want(8, 0.0);
    want[0] = want[7] = 1.0 / std::sqrt(2.0);
    return register_error(symmetrize(sp), want);
  });
  s.check("symmetrized GHZ4 spinors", 1e-10, [&] {
    std::vector<Spinor> sp;
    for (int k : {1, 3, 5, 7}) sp.emplace_back(1.0, std::polar(1.0, k * kPi / 4.0));
    std::vector<cplx> want(16, 0.0);
    want[0] = want[15] = 1.0 / std::sqrt(2.0);
    return register_error(symmetrize(sp), want);
  });
  s.check("symmetrized WWbar3 spinors", 1e-10, [&] {
    const std::vector<Spinor> sp{Spinor(1.0, 0.0), Spinor(1.0, 1.0), Spinor(0.0, 1.0)};
    std::vector<cplx> want(8, 0.0);
    for (int i : {1, 2, 3, 4, 5, 6}) want[i] = 1.0 / std::sqrt(6.0);
    return register_error(symmetrize(sp), want);
  });

  s.check("rho2 WWbar3", 1e-12, [&] {
    Eigen::Matrix4cd want;
    want << 1, 1, 1, 0, 1, 2, 2, 1, 1, 2, 2, 1, 0, 1, 1, 1;
    return max_diff(reduce_two(ww3).m, want / 6.0);
  });
  s.check("rho2 WWbar4", 1e-12, [&] {
    Eigen::Matrix4cd want;
    want << 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1;
    return max_diff(reduce_two(ww4).m, want / 4.0);
  });
  s.check("rho2 WWbar_N, N = 5, 6, 20, 50", 1e-12, [&] {
    double worst = 0.0;
    for (int n : {5, 6, 20, 50}) {
      worst = std::max(worst, max_diff(reduce_two(make_state(StateKind::WWBar, n)).m, wwbar_marginal(n)));
    }
    return worst;
  });
  s.check("rho2 GHZ_N = diag(1/2, 0, 0, 1/2)", 1e-12, [&] {
    Eigen::Matrix4cd want = Eigen::Matrix4cd::Zero();
    want(0, 0) = want(3, 3) = 0.5;
    double worst = 0.0;
    for (int n = 3; n <= 30; ++n) {
      worst = std::max(worst, max_diff(reduce_two(make_state(StateKind::Ghz, n)).m, want));
    }
    return worst;
  });
  s.check("rho1 WWbar3, Bloch (2/3, 0, 0)", 1e-12, [&] {
    return (reduce_one(ww3).bloch() - Eigen::Vector3d(2.0 / 3.0, 0, 0)).cwiseAbs().maxCoeff();
  });

  s.check("concurrence WWbar3 = 1/3, R eigs (1/4, 1/36, 0, 0)", 1e-10, [&] {
    const auto c = concurrence(reduce_two(ww3));
    const std::array<double, 4> want{0.25, 1.0 / 36.0, 0.0, 0.0};
    double e = std::abs(c.concurrence - 1.0 / 3.0);
    for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(c.r_eigs[i] - want[i]));
    return e;
  });
  s.check("sqrt R spectrum WWbar_N, N = 5, 6 closed form", 1e-10, [&] {
    double e = 0.0;
    for (int n : {5, 6}) {
      auto c = concurrence(reduce_two(make_state(StateKind::WWBar, n)));
      auto want = r_matrix_eigs_closed_form(n);
      std::sort(want.begin(), want.end(), std::greater<>());
      for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(c.sqrt_r_eigs[i] - want[i]));
    }
    return e;
  });
  s.check("concurrence WWbar_N = 0, 4 <= N <= 50", 1e-10, [&] {
    double e = 0.0;
    for (int n = 4; n <= 50; ++n) {
      e = std::max(e, concurrence(reduce_two(make_state(StateKind::WWBar, n))).concurrence);
    }
    return e;
  });

  s.check("tau_3 WWbar3 = 1/3", 1e-10, [&] { return std::abs(n_tangle(ww3).tau - 1.0 / 3.0); });
  s.check("tau_N WWbar_N = 1, 4 <= N <= 50", 1e-10, [&] {
    double e = 0.0;
    for (int n = 4; n <= 50; ++n) e = std::max(e, std::abs(n_tangle(make_state(StateKind::WWBar, n)).tau - 1.0));
    return e;
  });
  s.check("tau_3 GHZ3 = 1", 1e-10, [&] { return std::abs(n_tangle(ghz3).tau - 1.0); });
  s.check("tau_3 W3 = 0", 1e-10, [&] { return std::abs(n_tangle(make_state(StateKind::W, 3)).tau); });

  s.check("G Omega spectrum WWbar3 = (4/9, 4/9, 1/9, 1/9), axes (1, 1/2, 1/2)", 1e-9, [&] {
    const CanonicalForm cf = canonical_form(rep_of(ww3));
    const std::array<double, 4> want{4.0 / 9, 4.0 / 9, 1.0 / 9, 1.0 / 9};
    double e = axes_error(cf.semiaxes, {1.0, 0.5, 0.5});
    for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(cf.g_omega_eigs[i] - want[i]));
    return cf.type == CanonicalType::TypeI ? e : 1.0;
  });
  s.check("GHZ_N and WWbar4 are Type I segments (1, 0, 0)", 1e-9, [&] {
    double e = 0.0;
    std::vector<SymmetricState> states{ww4};
    for (int n = 3; n <= 10; ++n) states.push_back(make_state(StateKind::Ghz, n));
    for (const auto& st : states) {
      const CanonicalForm cf = canonical_form(rep_of(st));
      if (cf.type != CanonicalType::TypeI) return 1.0;
      e = std::max(e, axes_error(ellipsoid(cf).principal_semiaxes, {1.0, 0.0, 0.0}));
    }
    return e;
  });
  s.check("ellipsoid semiaxes WWbar_N, N = 5, 6, 20, 50", 1e-9, [&] {
    double e = 0.0;
    for (int n : {5, 6, 20, 50}) {
      const EllipsoidGeometry g = ellipsoid(canonical_form(rep_of(make_state(StateKind::WWBar, n))));
      e = std::max(e, axes_error(g.semiaxes, {2.0 / n, 2.0 / n, (n - 4.0) / n}));
    }
    return e;
  });
  s.check("W5 is Type II (null X0)", 1e-6, [&] {
    const CanonicalForm cf = canonical_form(rep_of(make_state(StateKind::W, 5)));
    if (cf.type != CanonicalType::TypeII) return 1.0;
    return std::max({cf.residual, std::abs(cf.a0 - 0.25), std::abs(cf.a1 - 0.5)});
  });

  s.check("v3 WWbar = 4/25, |det Lambda| = 4/81", 1e-10, [&] {
    const RealRep rep = rep_of(ww3);
    const MonogamyReport m = volume_monogamy(rep, rep.bob_bloch());
    return std::max(std::abs(m.v - 4.0 / 25.0), std::abs(std::abs(m.det_lambda) - 4.0 / 81.0));
  });
  s.check("v3^(2/3) WWbar = 0.29473", 1e-5, [&] {
    const RealRep rep = rep_of(ww3);
    return std::abs(volume_monogamy(rep, rep.bob_bloch()).lhs - 0.29473);
  });
  s.check("v(GHZ_N) = 0", 1e-12, [&] {
    double e = 0.0;
    for (int n = 3; n <= 50; ++n) {
      const RealRep rep = rep_of(make_state(StateKind::Ghz, n));
      e = std::max(e, volume_monogamy(rep, rep.bob_bloch()).v);
    }
    return e;
  });
  s.check("volume lhs closed forms, 5 <= N <= 50", 1e-10, [&] {
    double e = 0.0;
    for (SweepFamily f : {SweepFamily::WWBar, SweepFamily::W}) {
      for (const SweepRow& r : sweep(f, 5, 50)) {
        e = std::max(e, std::abs(r.lhs - sweep_closed_form(f, r.n)));
        if (r.lhs > 0.5 + 1e-12) return 1.0;
      }
    }
    return e;
  });
  s.check("W stricter than WWbar exactly for N >= 7", 0.0, [&] {
    double bad = 0.0;
    for (int n = 5; n <= 50; ++n) {
      const bool w_stricter = sweep_closed_form(SweepFamily::W, n) < sweep_closed_form(SweepFamily::WWBar, n);
      if (w_stricter != (n >= 7)) bad += 1.0;
    }
    return bad;
  });

  s.check("convert WWbar3 -> GHZ3 proportional to the (1, w; 1, w^2) matrix", 1e-8, [&] {
    const Conversion c = convert(ww3, ghz3);
    Eigen::Matrix2cd eq;
    eq << 1.0, kOmega, 1.0, kOmega * kOmega;
    return std::max(1.0 - c.fidelity, projective_distance(c.op.matrix(), eq));
  });
  return s.take();
}

}  // namespace symsteer
