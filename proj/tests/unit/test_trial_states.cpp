#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spinring/eigensolver.hpp"
#include "spinring/ring_models.hpp"
#include "spinring/trial_states.hpp"

using namespace spinring;

namespace {

const HilbertSpace kRing4(4, SpinMagnitude::half());

RingConfig ising(Family f, double j, int n, SpinMagnitude s = SpinMagnitude::half()) {
  RingConfig cfg;
  cfg.sites = n;
  cfg.spin = s;
  cfg.model = ModelVariant::ising(f, IsingAxis::X, j);
  return cfg;
}

double expect(const StateVector& s, const OperatorMatrix& op) {
  return s.amplitudes().dot(op.matrix() * s.amplitudes()).real();
}

}  // namespace

TEST(AlphaState, FerroAlongZIsFirstBasisState) {
  const auto a = alpha_state(Character::F, Axis::Z, kRing4);
  EXPECT_NEAR(std::abs(a.amplitudes()(0)), 1.0, 1e-15);
  EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-15);
}

TEST(AlphaState, AntiferroAlongZAlternates) {
  const auto a = alpha_state(Character::AF, Axis::Z, kRing4);
  EXPECT_NEAR(std::abs(a.amplitudes()(kRing4.index(std::vector<int>{0, 1, 0, 1}))), 1.0, 1e-15);
  EXPECT_THROW(alpha_state(Character::F, Axis::Y, kRing4), std::invalid_argument);
}

TEST(AlphaState, AlongXIsUniformSuperposition) {
  const auto a = alpha_state(Character::F, Axis::X, kRing4);
  for (Eigen::Index i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(a.amplitudes()(i)), 0.25, 1e-15);
  const auto sx = embed_site_operator(single_spin_operator(Axis::X, kRing4.spin()), 3, kRing4);
  EXPECT_NEAR(expect(a, sx), 0.5, 1e-14);
  const auto af = alpha_state(Character::AF, Axis::X, kRing4);
  EXPECT_NEAR(expect(af, sx), 0.5, 1e-14);
  const auto sx2 = embed_site_operator(single_spin_operator(Axis::X, kRing4.spin()), 2, kRing4);
  EXPECT_NEAR(expect(af, sx2), -0.5, 1e-14);
}

TEST(BetaState, SpinsPointAlongSiteAngles) {
  const TrialSpec spec{Character::F, 0.0, kPi / 2, 0};
  const auto b = beta_state(spec, kRing4);
  for (int k = 1; k <= 4; ++k) {
    const double a = site_angle(k, 4);
    const auto sx = embed_site_operator(single_spin_operator(Axis::X, kRing4.spin()), k, kRing4);
    const auto sy = embed_site_operator(single_spin_operator(Axis::Y, kRing4.spin()), k, kRing4);
    EXPECT_NEAR(expect(b, sx), 0.5 * std::cos(a), 1e-14) << k;
    EXPECT_NEAR(expect(b, sy), 0.5 * std::sin(a), 1e-14) << k;
  }
}

TEST(BetaState, BranchesAreOrthogonalAndOpposite) {
  for (Character c : {Character::F, Character::AF}) {
    TrialSpec s0{c, 0.3, kPi / 2, 0};
    TrialSpec s1 = s0;
    s1.branch = 1;
    const auto b0 = beta_state(s0, kRing4);
    const auto b1 = beta_state(s1, kRing4);
    EXPECT_LT(std::abs(b0.amplitudes().dot(b1.amplitudes())), 1e-14);
    const auto sx = embed_site_operator(single_spin_operator(Axis::X, kRing4.spin()), 2, kRing4);
    EXPECT_NEAR(expect(b0, sx), -expect(b1, sx), 1e-14);
  }
}

TEST(BetaState, RadialStateIsEigenstateOfRadialIsing) {
  const auto h = build_model_a(ising(Family::A, -1, 6));
  const auto b = beta_state({Character::F, 0.0, kPi / 2, 0}, h.space());
  const Vector hb = h.matrix() * b.amplitudes();
  const Complex e = b.amplitudes().dot(hb);
  EXPECT_LT((hb - e * b.amplitudes()).norm(), 1e-12);
  EXPECT_NEAR(e.real(), -6 * 0.25, 1e-12);
}

TEST(GammaState, EquatorialLimitIsBeta) {
  const TrialSpec spec{Character::AF, 0.7, kPi / 2, 1};
  EXPECT_LT((gamma_state(spec, kRing4).amplitudes() - beta_state(spec, kRing4).amplitudes()).norm(), 1e-14);
}

TEST(GammaState, BranchOverlapIsCosPowerN) {
  for (int n : {3, 4, 6}) {
    const HilbertSpace space(n, SpinMagnitude::half());
    for (double theta : {0.0, 0.4, 1.1, kPi / 2, 2.5}) {
      const auto g0 = gamma_state({Character::F, 0.2, theta, 0}, space);
      const auto g1 = gamma_state({Character::F, 0.2, theta, 1}, space);
      EXPECT_NEAR(std::abs(g0.amplitudes().dot(g1.amplitudes())), std::abs(std::pow(std::cos(theta), n)), 1e-12);
      EXPECT_NEAR(tilted_trial(Character::F, theta, 0.2, space).amplitudes().norm(), 1.0, 1e-12);
    }
  }
}

TEST(GhzTrial, NormalizedForBothCharacters) {
  for (Character c : {Character::F, Character::AF})
    EXPECT_NEAR(ghz_trial(c, 0.4, kRing4).amplitudes().norm(), 1.0, 1e-14);
}

TEST(OverlapP, InvariantUnderGroundBasisRemix) {
  const auto spec = diagonalize(build_model_a(ising(Family::A, -1, 6)));
  auto g = ground_space(spec);
  ASSERT_EQ(g.dimension(), 2);
  const auto trial = ghz_trial(Character::F, 0.0, g.space);
  const double p = overlap_p(g, trial);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const double a = u(rng);
  const double ph = u(rng);
  Matrix mix(2, 2);
  mix << std::cos(a), -std::sin(a) * std::polar(1.0, ph), std::sin(a) * std::polar(1.0, -ph), std::cos(a);
  g.basis = g.basis * mix;
  EXPECT_NEAR(overlap_p(g, trial), p, 1e-12);
  EXPECT_GT(p, 0.0);
  EXPECT_LE(p, 1.0 + 1e-12);
}

TEST(OverlapP, FullBasisGivesOne) {
  const auto spec = diagonalize(OperatorMatrix::zero(kRing4));
  const auto g = ground_space(spec);
  EXPECT_NEAR(overlap_p(g, ghz_trial(Character::AF, 1.0, kRing4)), 1.0, 1e-12);
}

TEST(RepresentativeState, IsNormalizedProjection) {
  const auto g = ground_space(diagonalize(build_model_b(ising(Family::B, 1, 6))));
  const auto trial = ghz_trial(Character::AF, kPi / 2, g.space);
  const auto r = representative_state(g, trial);
  EXPECT_NEAR(r.amplitudes().norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::norm(r.amplitudes().dot(trial.amplitudes())), overlap_p(g, trial), 1e-10);
}

TEST(MaximizeTheta, EquatorialAtZeroFieldOnModelB) {
  const auto g = ground_space(diagonalize(build_model_b(ising(Family::B, 1, 6))));
  const auto opt = maximize_theta(g, Character::AF, kPi / 2, g.space);
  EXPECT_NEAR(opt.theta_over_pi(), 0.5, 1e-3);
  EXPECT_NEAR(opt.half_angle_over_pi(), 0.25, 1e-3);
  EXPECT_NEAR(opt.p, overlap_p(g, ghz_trial(Character::AF, kPi / 2, g.space)), 1e-6);
}

TEST(OrderVector, ProductStatesHaveUnitModulus) {
  for (Character c : {Character::F, Character::AF}) {
    for (double phi : {0.0, 0.9}) {
      const auto b = beta_state({c, phi, kPi / 2, 0}, kRing4);
      const auto n = order_vector(b, c, phi);
      EXPECT_NEAR(n.modulus(), 1.0, 1e-12);
    }
  }
}

TEST(OrderVector, SymmetricTrialHasZeroInPlaneOrder) {
  const auto n = order_vector(ghz_trial(Character::F, 0.0, kRing4), Character::F, 0.0);
  EXPECT_LT(std::hypot(n.n[0], n.n[1]), 1e-12);
}

TEST(ParseCharacter, RoundTrip) {
  EXPECT_EQ(parse_character("AF"), Character::AF);
  EXPECT_EQ(parse_character(to_string(Character::F)), Character::F);
  EXPECT_THROW(parse_character("ferro"), std::invalid_argument);
}
