#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "symsteer/errors.hpp"
#include "symsteer/locops.hpp"
#include "symsteer/majorana.hpp"
#include "symsteer/report.hpp"

using namespace symsteer;

namespace {

const cplx kW = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

ExtendedComplex ec(cplx z) { return ExtendedComplex(z); }

// Worst chordal mismatch between two root multisets after greedy matching.
double multiset_gap(std::vector<ExtendedComplex> a, std::vector<ExtendedComplex> b) {
  double worst = 0.0;
  for (const auto& p : a) {
    std::size_t best = 0;
    double d = 10.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double dj = chordal_distance(p, b[j]);
      if (dj < d) d = dj, best = j;
    }
    worst = std::max(worst, d);
    b.erase(b.begin() + best);
  }
  return worst;
}

std::array<ExtendedComplex, 3> random_triple(std::mt19937_64& rng) {
  return {ec(oracle::random_point(rng)), ec(oracle::random_point(rng)), ec(oracle::random_point(rng))};
}

}  // namespace

TEST(local_op, normalisation_and_branch) {
  Eigen::Matrix2cd a;
  a << 2.0, 0.0, 0.0, 8.0;
  const LocalOp op(a);
  EXPECT_NEAR(std::abs(op.matrix().determinant() - 1.0), 0.0, 1e-14);
  EXPECT_GE(op.matrix().trace().real(), 0.0);
  EXPECT_NEAR(op.matrix()(0, 0).real(), 0.5, 1e-15);
  const LocalOp flipped(-a);
  EXPECT_LT((flipped.matrix() - op.matrix()).norm(), 1e-15);
  Eigen::Matrix2cd sing;
  sing << 1.0, 2.0, 2.0, 4.0;
  EXPECT_THROW(LocalOp{sing}, InvalidInput);
  EXPECT_THROW(LocalOp{Eigen::Matrix2cd::Zero()}, InvalidInput);
  std::mt19937_64 rng(3);
  const LocalOp r(oracle::random_sl2(rng));
  EXPECT_LT((r.matrix() * r.inverse().matrix() - Eigen::Matrix2cd::Identity()).norm(), 1e-12);
}

TEST(moebius_from_triples, wwbar3_to_ghz3) {
  const std::array<ExtendedComplex, 3> src{ec(0.0), ec(1.0), ExtendedComplex::infinity()};
  const std::array<ExtendedComplex, 3> dst{ec(1.0), ec(kW * kW), ec(kW)};
  const LocalOp op = moebius_from_triples(src, dst);
  Eigen::Matrix2cd eq;
  eq << 1.0, kW, 1.0, kW * kW;
  EXPECT_LT(projective_distance(op.matrix(), eq), 1e-12);
  for (int i = 0; i < 3; ++i) EXPECT_LT(chordal_distance(moebius_apply(op, src[i]), dst[i]), 1e-12);
  const SymmetricState out = apply_identical_local(op, make_state(StateKind::WWBar, 3));
  EXPECT_GE(fidelity(out, make_state(StateKind::Ghz, 3)), 1.0 - 1e-12);
}

TEST(moebius_from_triples, identity_and_inversion) {
  const std::array<ExtendedComplex, 3> t{ec(0.3), ec(cplx(-1, 2)), ExtendedComplex::infinity()};
  EXPECT_LT(projective_distance(moebius_from_triples(t, t).matrix(), Eigen::Matrix2cd::Identity()), 1e-12);
  // z -> 1/z swaps the poles and fixes 1
  const LocalOp inv = moebius_from_triples({ec(0.0), ec(1.0), ExtendedComplex::infinity()},
                                           {ExtendedComplex::infinity(), ec(1.0), ec(0.0)});
  Eigen::Matrix2cd x;
  x << 0.0, 1.0, 1.0, 0.0;
  EXPECT_LT(projective_distance(inv.matrix(), x), 1e-12);
  EXPECT_LT(std::abs(moebius_apply(inv, ec(cplx(0, 2))).value() - cplx(0, -0.5)), 1e-14);
}

TEST(moebius_from_triples, random_triples_map_exactly) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const auto src = random_triple(rng);
    auto dst = random_triple(rng);
    if (k % 10 == 0) dst[k % 3] = ExtendedComplex::infinity();
    const LocalOp op = moebius_from_triples(src, dst);
    for (int i = 0; i < 3; ++i) EXPECT_LT(chordal_distance(moebius_apply(op, src[i]), dst[i]), 1e-9);
  }
}

TEST(moebius_from_triples, rejects_coincident_points) {
  const std::array<ExtendedComplex, 3> ok{ec(0.0), ec(1.0), ec(2.0)};
  EXPECT_THROW(moebius_from_triples({ec(1.0), ec(1.0), ec(2.0)}, ok), InvalidInput);
  EXPECT_THROW(moebius_from_triples(ok, {ExtendedComplex::infinity(), ec(1.0), ExtendedComplex::infinity()}),
               InvalidInput);
}

TEST(apply_identical_local, roots_move_covariantly) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 7;
    const SymmetricState s = oracle::random_state(rng, n);
    const LocalOp op(oracle::random_sl2(rng));
    const SymmetricState moved = apply_identical_local(op, s);
    std::vector<ExtendedComplex> want;
    for (const auto& z : roots_from_dicke(s).points()) want.push_back(moebius_apply(op, z));
    EXPECT_LT(multiset_gap(roots_from_dicke(moved).points(), want), 1e-7) << k;
  }
}

TEST(apply_identical_local, agrees_with_register_tensor_power) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 5;
    const SymmetricState s = oracle::random_state(rng, n);
    const LocalOp op(oracle::random_sl2(rng));
    // A^{x n} applied to the register amplitudes, the slow way
    const auto amps = oracle::register_from_dicke(s.dicke());
    std::vector<cplx> out(amps.size(), 0.0);
    for (std::size_t in = 0; in < amps.size(); ++in)
      for (std::size_t o = 0; o < amps.size(); ++o) {
        cplx f = 1.0;
        for (int q = 0; q < n; ++q) {
          const int bi = (in >> (n - 1 - q)) & 1, bo = (o >> (n - 1 - q)) & 1;
          f *= op.matrix()(bo, bi);
        }
        out[o] += f * amps[in];
      }
    const SymmetricState moved = apply_identical_local(op, s);
    QubitRegisterState a{n, oracle::register_from_dicke(moved.dicke())};
    QubitRegisterState b{n, out};
    EXPECT_GE(fidelity(a, b), 1.0 - 1e-10);
  }
}

TEST(apply_identical_local, inverse_restores_ghz3) {
  std::mt19937_64 rng(17);
  const SymmetricState ghz = make_state(StateKind::Ghz, 3);
  for (int k = 0; k < 20; ++k) {
    const LocalOp op(oracle::random_sl2(rng));
    const SymmetricState back = apply_identical_local(op.inverse(), apply_identical_local(op, ghz));
    EXPECT_GE(fidelity(back, ghz), 1.0 - 1e-10);
  }
}

TEST(convert, wwbar3_to_ghz3) {
  const Conversion c = convert(make_state(StateKind::WWBar, 3), make_state(StateKind::Ghz, 3));
  Eigen::Matrix2cd eq;
  eq << 1.0, kW, 1.0, kW * kW;
  EXPECT_LT(projective_distance(c.op.matrix(), eq), 1e-8);
  EXPECT_GE(c.fidelity, 1.0 - 1e-12);
  EXPECT_NEAR(std::abs(c.op.matrix().determinant() - 1.0), 0.0, 1e-12);
}

TEST(convert, identity_for_same_state) {
  const SymmetricState g = make_state(StateKind::Ghz, 3);
  EXPECT_LT(projective_distance(convert(g, g).op.matrix(), Eigen::Matrix2cd::Identity()), 1e-9);
}

TEST(convert, random_three_spinor_pairs) {
  std::mt19937_64 rng(50);
  for (int k = 0; k < 50; ++k) {
    auto cloud = [&] {
      std::vector<cplx> r{oracle::random_point(rng), oracle::random_point(rng), oracle::random_point(rng)};
      return dicke_from_roots(MajoranaRootSet{r, 0});
    };
    const SymmetricState a = cloud(), b = cloud();
    EXPECT_GE(convert(a, b).fidelity, 1.0 - 1e-8) << k;
  }
}

TEST(convert, rejects_outside_the_three_distinct_class) {
  const SymmetricState ghz3 = make_state(StateKind::Ghz, 3);
  EXPECT_THROW(convert(make_state(StateKind::W, 3), ghz3), DomainError);
  EXPECT_THROW(convert(ghz3, make_state(StateKind::Dicke, 3, std::nullopt, 0)), DomainError);
  EXPECT_THROW(convert(make_state(StateKind::Ghz, 4), make_state(StateKind::Ghz, 4)), DomainError);
}

TEST(projective_distance, basics) {
  Eigen::Matrix2cd a;
  a << 1.0, 2.0, 3.0, cplx(0, 1);
  EXPECT_LT(projective_distance(a, cplx(0, -3) * a), 1e-15);
  EXPECT_NEAR(projective_distance(Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd(Eigen::Vector2cd(1, -1).asDiagonal())),
              std::sqrt(2.0), 1e-15);
  EXPECT_THROW(projective_distance(a, Eigen::Matrix2cd::Zero()), InvalidInput);
}
