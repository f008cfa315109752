#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "symsteer/errors.hpp"
#include "symsteer/states.hpp"

using namespace symsteer;

TEST(make_state, named_coefficients) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto ghz = make_state(StateKind::Ghz, 5);
  EXPECT_NEAR(ghz[0].real(), h, 1e-15);
  EXPECT_NEAR(ghz[5].real(), h, 1e-15);
  const auto w = make_state(StateKind::W, 4);
  EXPECT_EQ(w[3], cplx(1.0));
  const auto wb = make_state(StateKind::WBar, 4);
  EXPECT_EQ(wb[1], cplx(1.0));
  const auto ww = make_state(StateKind::WWBar, 6);
  EXPECT_NEAR(ww[1].real(), h, 1e-15);
  EXPECT_NEAR(ww[5].real(), h, 1e-15);
  const auto gg = make_state(StateKind::GhzGen, 3, 1.0);
  EXPECT_NEAR(gg[0].real(), std::sin(0.5), 1e-15);
  EXPECT_NEAR(gg[3].real(), std::cos(0.5), 1e-15);
}

TEST(make_state, range_checks) {
  EXPECT_THROW(make_state(StateKind::Ghz, 1), InvalidInput);
  EXPECT_THROW(make_state(StateKind::WWBar, 2), InvalidInput);
  EXPECT_THROW(make_state(StateKind::GhzGen, 3, 0.0), InvalidInput);
  EXPECT_THROW(make_state(StateKind::GhzGen, 3, std::numbers::pi), InvalidInput);
  EXPECT_THROW(make_state(StateKind::Dicke, 3, std::nullopt, 4), InvalidInput);
  EXPECT_THROW(make_state(StateKind::Ghz, 513), SizeError);
}

TEST(symmetric_state, normalises_and_fixes_phase) {
  const auto s = SymmetricState::from_dicke({0.0, cplx(0, 3), 4.0});
  EXPECT_NEAR(s[1].real(), 0.6, 1e-15);
  EXPECT_NEAR(s[1].imag(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[2]), 0.8, 1e-15);
  EXPECT_THROW(SymmetricState::from_dicke({0.0, 0.0}), InvalidInput);
}

TEST(to_register, matches_basis_listing) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 10; ++n) {
    const auto d = oracle::random_dicke(rng, n);
    const auto reg = to_register(SymmetricState::from_dicke(d));
    const auto want = oracle::register_from_dicke(SymmetricState::from_dicke(d).dicke());
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_LT(std::abs(reg.amplitudes[i] - want[i]), 1e-14);
    }
  }
  EXPECT_THROW(to_register(make_state(StateKind::Ghz, 15)), SizeError);
}

TEST(to_register, qubit_zero_is_most_significant) {
  const auto reg = to_register(make_state(StateKind::Dicke, 3, std::nullopt, 2));  // one |1>
  // |001>, |010>, |100> at indices 1, 2, 4
  for (int i : {1, 2, 4}) EXPECT_NEAR(reg.amplitudes[i].real(), 1 / std::sqrt(3.0), 1e-15);
}

TEST(fidelity, overlap) {
  EXPECT_NEAR(fidelity(make_state(StateKind::Ghz, 3), make_state(StateKind::Ghz, 3)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(make_state(StateKind::W, 3), make_state(StateKind::Ghz, 3)), 0.0, 1e-15);
  EXPECT_THROW(fidelity(make_state(StateKind::W, 3), make_state(StateKind::W, 4)), InvalidInput);
}

TEST(parse_state, grammar) {
  EXPECT_EQ(parse_state("ghz:4").n_qubits(), 4);
  EXPECT_EQ(parse_state(" WWBAR:7 ").n_qubits(), 7);
  EXPECT_NEAR(parse_state("wwbar-gen:5:0.5")[1].real(), std::sin(0.25) , 1e-15);
  EXPECT_EQ(parse_state("dicke:6:2")[2], cplx(1.0));
  EXPECT_NEAR(fidelity(parse_state("roots:[0,1,inf]"), make_state(StateKind::WWBar, 3)), 1.0,
              1e-12);
  EXPECT_THROW(parse_state("ghz"), ParseError);
  EXPECT_THROW(parse_state("ghz:x"), ParseError);
  EXPECT_THROW(parse_state("ghz:3:1"), ParseError);
  EXPECT_THROW(parse_state("foo:3"), ParseError);
  EXPECT_THROW(parse_state("roots:0,1"), ParseError);
  EXPECT_THROW(parse_state("roots:[]"), ParseError);
  EXPECT_THROW(parse_state("roots:[1,abc]"), ParseError);
  EXPECT_THROW(parse_state("ghz:1"), InvalidInput);
}

TEST(parse_extended_complex, literals) {
  EXPECT_TRUE(parse_extended_complex("inf").is_infinite());
  EXPECT_EQ(parse_extended_complex("2.5").value(), cplx(2.5, 0));
  EXPECT_EQ(parse_extended_complex("-1.5i").value(), cplx(0, -1.5));
  EXPECT_EQ(parse_extended_complex("i").value(), cplx(0, 1));
  EXPECT_EQ(parse_extended_complex("-i").value(), cplx(0, -1));
  EXPECT_EQ(parse_extended_complex("1-2i").value(), cplx(1, -2));
  EXPECT_EQ(parse_extended_complex("0.3+0.2j").value(), cplx(0.3, 0.2));
  EXPECT_EQ(parse_extended_complex("1e-3+2e+1i").value(), cplx(1e-3, 20));
  EXPECT_THROW(parse_extended_complex(""), ParseError);
  EXPECT_THROW(parse_extended_complex("1+"), ParseError);
}
