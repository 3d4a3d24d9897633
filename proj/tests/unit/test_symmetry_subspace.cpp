#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "spinring/eigensolver.hpp"
#include "spinring/symmetry_subspace.hpp"

using namespace spinring;

namespace {

RingConfig ising(Family f, IsingAxis a, double j, int n) {
  RingConfig cfg;
  cfg.sites = n;
  cfg.model = ModelVariant::ising(f, a, j);
  return cfg;
}

std::vector<int> zero_based(const FlipVector& v) {
  std::vector<int> out;
  for (int s : v.sites) out.push_back(s - 1);
  return out;
}

}  // namespace

TEST(FlipVector, CanonicalFormIsSmallestTranslate) {
  const auto v = canonical_flip_vector({3, 4}, 6);
  EXPECT_EQ(v.sites, (std::vector<int>{1, 2}));
  EXPECT_EQ(v.k, 1);
  EXPECT_EQ(canonical_flip_vector({6, 1}, 6).sites, (std::vector<int>{1, 2}));
  EXPECT_THROW(canonical_flip_vector({1, 2, 3}, 6), std::invalid_argument);
  EXPECT_THROW(canonical_flip_vector({1, 1}, 6), std::invalid_argument);
  EXPECT_THROW(canonical_flip_vector({0, 2}, 6), std::invalid_argument);
}

TEST(FlipVector, ComplementAndOrbitSize) {
  const auto v = canonical_flip_vector({1, 2}, 4);
  EXPECT_EQ(complement(v, 4).sites, (std::vector<int>{1, 2}));
  EXPECT_EQ(orbit_size(v, 4), 4);
  EXPECT_EQ(orbit_size(canonical_flip_vector({1, 3}, 4), 4), 2);
  EXPECT_EQ(orbit_size(canonical_flip_vector({}, 6), 6), 1);
}

TEST(EnumerateFlipVectors, MatchesOrbitOracle) {
  for (int n : {4, 6, 8, 10}) {
    for (int k = 0; 2 * k <= n; ++k) {
      const auto reps = enumerate_flip_vectors(n, k);
      const auto orbits = oracle::orbit_partition(n, k);
      ASSERT_EQ(reps.size(), orbits.size()) << "N=" << n << " k=" << k;
      long long total = 0;
      for (const auto& v : reps) {
        bool found = false;
        for (const auto& o : orbits) {
          if (o.count(zero_based(v))) {
            found = true;
            EXPECT_EQ(static_cast<std::size_t>(orbit_size(v, n)), o.size());
          }
        }
        EXPECT_TRUE(found);
        total += orbit_size(v, n);
      }
      EXPECT_EQ(total, oracle::choose(n, 2 * k));
    }
  }
}

TEST(EnumerateFlipVectors, KnownCounts) {
  EXPECT_EQ(enumerate_flip_vectors(6, 1).size(), 3u);
  EXPECT_EQ(enumerate_all_flip_vectors(6).size(), 8u);
  EXPECT_EQ(enumerate_all_flip_vectors(8).size(), 20u);
  EXPECT_EQ(enumerate_all_flip_vectors(10).size(), 56u);
  EXPECT_THROW(enumerate_flip_vectors(5, 1), std::invalid_argument);
}

TEST(BuildComponent, FourSiteNeighbourPairExample) {
  const HilbertSpace space(4, SpinMagnitude::half());
  const auto c = build_component(canonical_flip_vector({1, 2}, 4), Character::F, space);
  EXPECT_EQ(c.orbit, 4);
  EXPECT_EQ(c.sign, -1);
  for (auto digits : {std::vector<int>{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}})
    EXPECT_NEAR(std::abs(c.state.amplitudes()(static_cast<Eigen::Index>(space.index(digits)))), 0.5, 1e-15);
  EXPECT_NEAR(c.state.amplitudes().norm(), 1.0, 1e-15);
}

TEST(BuildComponent, BasisIsOrthonormal) {
  const HilbertSpace space(8, SpinMagnitude::half());
  const auto reps = enumerate_all_flip_vectors(8);
  Matrix b(static_cast<Eigen::Index>(space.dim()), static_cast<Eigen::Index>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    b.col(static_cast<Eigen::Index>(i)) = build_component(reps[i], Character::F, space).state.amplitudes();
  const Matrix g = b.adjoint() * b;
  EXPECT_LT((g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ReducedGroundState, ReproducesFullGroundEnergy) {
  for (int n : {4, 6, 8, 10}) {
    for (Family f : {Family::A, Family::B}) {
      for (IsingAxis a : {IsingAxis::X, IsingAxis::Y}) {
        for (double j : {1.0, -1.0}) {
          const auto h = build_exchange(ising(f, a, j, n));
          DiagonalizeOptions o;
          o.vectors = false;
          const double e0 = diagonalize(h, o).eigenvalues(0);
          const auto red = reduced_ground_state(h);
          EXPECT_NEAR(red.ground_energy, e0, 1e-10)
              << to_string(f) << " " << to_string(a) << " J=" << j << " N=" << n;
        }
      }
    }
  }
}

TEST(ReducedGroundState, ReconstructionLiesInGroundSpace) {
  for (Family f : {Family::A, Family::B}) {
    const auto h = build_exchange(ising(f, IsingAxis::X, 1, 8));
    const auto g = ground_space(diagonalize(h));
    const auto red = reduced_ground_state(h);
    EXPECT_EQ(red.dimension(), 20u);
    const auto psi = red.reconstructed(h.space());
    EXPECT_GT(g.project(psi.amplitudes()).squaredNorm(), 1 - 1e-9);
  }
}

TEST(ReducedGroundState, RejectsOddRings) {
  EXPECT_THROW(reduced_ground_state(build_exchange(ising(Family::B, IsingAxis::X, 1, 5))), std::invalid_argument);
}

TEST(CoefficientRatioCheck, ClassCountsAndUnitModulus) {
  const auto h = build_exchange(ising(Family::B, IsingAxis::X, 1, 8));
  const auto report = coefficient_ratio_check(reduced_ground_state(h), 8);
  EXPECT_EQ(report.pair_classes, 12);
  EXPECT_GT(report.entries.size(), 0u);
  for (const auto& e : report.entries) {
    EXPECT_NEAR(std::abs(e.ratio), 1.0, 1e-8);
    EXPECT_NEAR(e.ratio.imag(), 0.0, 1e-8);
  }
}

TEST(CoefficientRatioCheck, TenSiteClassCount) {
  const auto h = build_exchange(ising(Family::A, IsingAxis::X, -1, 10));
  EXPECT_EQ(coefficient_ratio_check(reduced_ground_state(h), 10).pair_classes, 28);
}

TEST(TabulatedRatio, SignConvention) {
  EXPECT_EQ(tabulated_ratio(Family::A, IsingAxis::X, 1), -1);
  EXPECT_EQ(tabulated_ratio(Family::A, IsingAxis::Y, 1), 1);
  EXPECT_EQ(tabulated_ratio(Family::B, IsingAxis::X, 1), 1);
  EXPECT_EQ(tabulated_ratio(Family::B, IsingAxis::X, -1), -1);
  EXPECT_EQ(tabulated_ratio(Family::A, IsingAxis::X, -1), -tabulated_ratio(Family::A, IsingAxis::X, 1));
}
