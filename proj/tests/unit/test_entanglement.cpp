#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "symsteer/entanglement.hpp"
#include "symsteer/errors.hpp"

using namespace symsteer;

TEST(concurrence, wwbar3) {
  const auto c = concurrence(reduce_two(make_state(StateKind::WWBar, 3)));
  EXPECT_NEAR(c.concurrence, 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(c.r_eigs[0], 0.25, 1e-10);
  EXPECT_NEAR(c.r_eigs[1], 1.0 / 36.0, 1e-10);
  EXPECT_NEAR(c.r_eigs[2], 0.0, 1e-10);
  EXPECT_NEAR(c.r_eigs[3], 0.0, 1e-10);
}

TEST(concurrence, wwbar_spectrum_matches_closed_form) {
  for (int n = 5; n <= 50; ++n) {
    const auto c = concurrence(reduce_two(make_state(StateKind::WWBar, n)));
    auto want = r_matrix_eigs_closed_form(n);
    std::sort(want.begin(), want.end(), std::greater<>());
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(c.sqrt_r_eigs[k], want[k], 1e-10) << "N=" << n;
      EXPECT_NEAR(c.r_eigs[k], want[k] * want[k], 1e-10) << "N=" << n;
    }
  }
}

TEST(r_matrix_eigs_closed_form, values_and_range) {
  const auto five = r_matrix_eigs_closed_form(5);
  EXPECT_DOUBLE_EQ(five[0], 0.3);
  EXPECT_DOUBLE_EQ(five[2], 0.4);
  const auto six = r_matrix_eigs_closed_form(6);
  EXPECT_DOUBLE_EQ(six[0], 1.0 / 3);
  EXPECT_DOUBLE_EQ(six[2], 1.0 / 3);
  const auto twenty = r_matrix_eigs_closed_form(20);
  EXPECT_DOUBLE_EQ(twenty[0], 0.45);
  EXPECT_DOUBLE_EQ(twenty[2], 0.1);
  EXPECT_EQ(twenty[3], 0.0);
  EXPECT_THROW(r_matrix_eigs_closed_form(4), InvalidInput);
}

TEST(concurrence, wwbar_separable_pairs) {
  for (int n = 4; n <= 50; ++n) {
    EXPECT_NEAR(concurrence(reduce_two(make_state(StateKind::WWBar, n))).concurrence, 0.0, 1e-10);
  }
}

TEST(concurrence, w_state_two_over_n_against_oracle) {
  for (int n = 3; n <= 10; ++n) {
    const auto s = make_state(StateKind::W, n);
    EXPECT_NEAR(concurrence(reduce_two(s)).concurrence, 2.0 / n, 1e-10);
    const auto amps = oracle::register_from_dicke(s.dicke());
    EXPECT_NEAR(oracle::wootters(oracle::marginal_pair(amps, n, 0, n - 1)), 2.0 / n, 1e-7);
  }
}

TEST(concurrence, maximally_mixed_and_bell) {
  DensityMatrix2 mixed;
  mixed.m = Eigen::Matrix4cd::Identity() / 4.0;
  EXPECT_EQ(concurrence(mixed).concurrence, 0.0);
  DensityMatrix2 bell;
  bell.m.setZero();
  bell.m(0, 0) = bell.m(0, 3) = bell.m(3, 0) = bell.m(3, 3) = 0.5;
  EXPECT_NEAR(concurrence(bell).concurrence, 1.0, 1e-12);
}

TEST(concurrence, rejects_non_positive_input) {
  DensityMatrix2 bad;
  bad.m = Eigen::Vector4cd(0.9, 0.3, 0.0, -0.2).asDiagonal();
  EXPECT_THROW(concurrence(bad), NonPhysicalError);
}

TEST(concurrence, random_states_agree_with_raw_r_oracle) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto rho = reduce_two(oracle::random_state(rng, 2 + k % 8));
    std::vector<double> eigs;
    const double want = oracle::wootters(rho.m, &eigs);
    const auto got = concurrence(rho);
    EXPECT_NEAR(got.concurrence, want, 1e-7);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(got.r_eigs[i], eigs[i], 1e-10);
  }
}

TEST(concurrence, local_unitary_invariance) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    const auto rho = reduce_two(oracle::random_state(rng, 3 + k % 6));
    const Eigen::Matrix2cd u = oracle::random_unitary(rng);
    const Eigen::Matrix4cd uu = oracle::kron(u, u);
    DensityMatrix2 rotated;
    rotated.m = uu * rho.m * uu.adjoint();
    EXPECT_NEAR(concurrence(rotated).concurrence, concurrence(rho).concurrence, 1e-9);
  }
}

TEST(n_tangle, named_state_values) {
  const auto ww3 = n_tangle(make_state(StateKind::WWBar, 3));
  EXPECT_NEAR(ww3.tau, 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(ww3.det_rho1, 5.0 / 36.0, 1e-12);
  ASSERT_TRUE(ww3.ckw_residual.has_value());
  EXPECT_NEAR(*ww3.ckw_residual, 1.0 / 3.0, 1e-10);
  for (int n = 4; n <= 50; ++n) {
    EXPECT_NEAR(n_tangle(make_state(StateKind::WWBar, n)).tau, 1.0, 1e-10) << n;
    EXPECT_FALSE(n_tangle(make_state(StateKind::WWBar, n)).ckw_residual.has_value());
  }
  const auto ghz3 = n_tangle(make_state(StateKind::Ghz, 3));
  EXPECT_NEAR(ghz3.tau, 1.0, 1e-10);
  EXPECT_NEAR(ghz3.concurrence, 0.0, 1e-12);
  EXPECT_NEAR(n_tangle(make_state(StateKind::W, 3)).tau, 0.0, 1e-10);
  EXPECT_THROW(n_tangle(make_state(StateKind::Ghz, 2)), InvalidInput);
}

TEST(n_tangle, generalized_ghz_is_sin_squared) {
  for (int n = 3; n <= 8; ++n) {
    for (double t : {0.3, 1.0, 1.5707963267948966, 2.5}) {
      const auto s = make_state(StateKind::GhzGen, n, t);
      const auto r = n_tangle(s);
      EXPECT_NEAR(r.tau, std::sin(t) * std::sin(t), 1e-10);
      EXPECT_NEAR(r.concurrence, 0.0, 1e-10);
      const auto amps = oracle::register_from_dicke(s.dicke());
      EXPECT_NEAR(oracle::wootters(oracle::marginal_pair(amps, n, 0, 1)), 0.0, 1e-7);
    }
  }
}

TEST(n_tangle, ckw_holds_for_random_three_qubit_states) {
  std::mt19937_64 rng(45);
  for (int k = 0; k < 200; ++k) {
    const auto t = n_tangle(oracle::random_state(rng, 3));
    ASSERT_TRUE(t.ckw_residual.has_value());
    EXPECT_GE(*t.ckw_residual, -1e-10);
    EXPECT_LE(t.tau, 1.0 + 1e-10);
    EXPECT_GE(t.tau, -1e-10);
  }
}
