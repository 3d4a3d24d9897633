#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spinring/eigensolver.hpp"
#include "spinring/entanglement.hpp"
#include "spinring/ring_models.hpp"
#include "spinring/trial_states.hpp"

using namespace spinring;

namespace {

StateVector random_state(const HilbertSpace& space, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Vector v(static_cast<Eigen::Index>(space.dim()));
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return StateVector::normalized(space, v);
}

StateVector from_indices(const HilbertSpace& space, std::initializer_list<std::size_t> idx) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
  for (auto i : idx) v(static_cast<Eigen::Index>(i)) = 1.0;
  return StateVector::normalized(space, v);
}

}  // namespace

TEST(PartialTrace, MatchesNaiveSummation) {
  const HilbertSpace space(5, SpinMagnitude::half());
  const auto psi = random_state(space, 1);
  for (const std::vector<int>& keep : {std::vector<int>{1}, {2, 4}, {1, 3, 5}, {5, 2}}) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    const auto rho = partial_trace(psi, keep);
    EXPECT_EQ(rho.sites, sorted);
    const Matrix ref = oracle::naive_partial_trace(psi.amplitudes(), 5, 2, sorted);
    EXPECT_LT((rho.rho - ref).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-13);
    EXPECT_LT(rho.hermiticity_error(), 1e-14);
    EXPECT_GT(rho.min_eigenvalue(), -1e-12);
  }
}

TEST(PartialTrace, SpinOneRing) {
  const HilbertSpace space(3, SpinMagnitude::one());
  const auto psi = random_state(space, 2);
  const std::vector<int> keep{2};
  const auto rho = partial_trace(psi, keep);
  EXPECT_LT((rho.rho - oracle::naive_partial_trace(psi.amplitudes(), 3, 3, keep)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(PartialTrace, RejectsBadSubsets) {
  const HilbertSpace space(3, SpinMagnitude::half());
  const auto psi = random_state(space, 3);
  EXPECT_THROW(partial_trace(psi, std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(partial_trace(psi, std::vector<int>{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(partial_trace(psi, std::vector<int>{1, 1}), std::invalid_argument);
  EXPECT_THROW(partial_trace(psi, std::vector<int>{4}), std::out_of_range);
}

TEST(Purity, ComplementaryBlocksAgree) {
  const HilbertSpace space(6, SpinMagnitude::half());
  const auto psi = random_state(space, 4);
  const auto prof = block_purity_profile(psi);
  ASSERT_EQ(prof.size(), 5u);
  for (std::size_t i = 0; i < prof.size(); ++i) {
    std::vector<int> rest;
    for (int k = static_cast<int>(i) + 2; k <= 6; ++k) rest.push_back(k);
    EXPECT_NEAR(prof[i], partial_trace(psi, rest).purity(), 1e-12);
    EXPECT_GE(prof[i], 1.0 / std::pow(2.0, std::min<double>(i + 1, 5 - i)) - 1e-12);
  }
}

TEST(Purity, ProductStateIsPure) {
  const auto b = beta_state({Character::AF, 0.3, kPi / 2, 0}, HilbertSpace(5, SpinMagnitude::half()));
  for (double p : block_purity_profile(b)) EXPECT_NEAR(p, 1.0, 1e-12);
}

TEST(Concurrence, BellAndProductStates) {
  const HilbertSpace two(2, SpinMagnitude::half());
  EXPECT_NEAR(concurrence(from_indices(two, {0, 3}), 1, 2), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(from_indices(two, {1, 2}), 1, 2), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(from_indices(two, {0}), 1, 2), 0.0, 1e-12);
  EXPECT_THROW(concurrence(from_indices(two, {0}), 1, 1), std::invalid_argument);
}

TEST(Concurrence, GhzAndWStates) {
  const HilbertSpace three(3, SpinMagnitude::half());
  const auto ghz = from_indices(three, {0, 7});
  EXPECT_NEAR(concurrence(ghz, 1, 2), 0.0, 1e-12);
  EXPECT_NEAR(residual_tangle(ghz, 1), 1.0, 1e-12);
  const auto w = from_indices(three, {1, 2, 4});
  for (int k = 1; k <= 3; ++k)
    for (int l = k + 1; l <= 3; ++l) EXPECT_NEAR(concurrence(w, k, l), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(residual_tangle(w, 2), 0.0, 1e-12);
}

TEST(Concurrence, HermitianFormMatchesNonHermitianOracle) {
  const HilbertSpace space(5, SpinMagnitude::half());
  for (unsigned seed = 10; seed < 15; ++seed) {
    const auto psi = random_state(space, seed);
    for (auto [k, l] : {std::pair{1, 2}, {2, 5}, {3, 4}}) {
      const std::vector<int> keep{k, l};
      const Matrix rho = partial_trace(psi, keep).rho;
      EXPECT_NEAR(concurrence(rho), oracle::wootters_nonhermitian(rho), 1e-9);
      EXPECT_NEAR(concurrence(psi, k, l), concurrence(rho), 1e-12);
    }
  }
}

TEST(Concurrence, InvariantUnderLocalZRotations) {
  const HilbertSpace space(4, SpinMagnitude::half());
  const auto psi = random_state(space, 21);
  std::vector<SiteRotation> rot{{Axis::Z, 0.3}, {Axis::Z, -1.2}, {Axis::Z, 2.0}, {Axis::Z, 0.7}};
  const auto rotated = psi.transformed(product_rotation(rot, space));
  EXPECT_LT((concurrence_matrix(psi) - concurrence_matrix(rotated)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Concurrence, MatrixSymmetricWithZeroDiagonal) {
  const auto m = concurrence_matrix(random_state(HilbertSpace(4, SpinMagnitude::half()), 5));
  EXPECT_LT((m - m.transpose()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(m.diagonal().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Concurrence, GhzTrialHasNoPairEntanglement) {
  const HilbertSpace space(6, SpinMagnitude::half());
  const auto g = ghz_trial(Character::AF, kPi / 2, space);
  for (double c : concurrence_by_distance(g)) EXPECT_NEAR(c, 0.0, 1e-12);
  EXPECT_EQ(concurrence_by_distance(g).size(), 3u);
  EXPECT_NEAR(residual_tangle(g, 1), 1.0, 1e-12);
}

TEST(ResidualTangle, NonNegativeOnRingGroundStates) {
  RingConfig cfg;
  cfg.sites = 6;
  cfg.model = ModelVariant::ising(Family::B, IsingAxis::X, 1);
  const auto g = ground_space(diagonalize(build_hamiltonian(cfg)));
  const auto rep = representative_state(g, ghz_trial(Character::AF, kPi / 2, g.space));
  const auto report = entanglement_report(rep);
  for (double t : report.tangle) EXPECT_GE(t, 0.0);
  EXPECT_EQ(report.purity.size(), 5u);
}

TEST(Concurrence, SpinOneRejected) {
  const auto psi = random_state(HilbertSpace(3, SpinMagnitude::one()), 6);
  EXPECT_THROW(concurrence(psi, 1, 2), std::invalid_argument);
}
