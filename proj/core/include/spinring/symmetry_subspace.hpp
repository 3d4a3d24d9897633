#pragma once

#include <optional>
#include <vector>

#include "spinring/ring_models.hpp"
#include "spinring/trial_states.hpp"

namespace spinring {

/// Set of 2k sites flipped relative to a reference product state, stored as
/// the lexicographically smallest cyclic translate.
struct FlipVector {
  int k = 0;
  std::vector<int> sites;  // 1-based, ascending

  friend bool operator==(const FlipVector&, const FlipVector&) = default;
  friend auto operator<=>(const FlipVector& a, const FlipVector& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.sites <=> b.sites;
  }
};

/// Smallest cyclic translate of an arbitrary site set. Throws on an odd count,
/// duplicates or out-of-range sites.
FlipVector canonical_flip_vector(std::vector<int> sites, int n_sites);

/// Canonical representative of the flipped complement (all other sites).
FlipVector complement(const FlipVector& v, int n_sites);

/// Number of distinct cyclic translates.
int orbit_size(const FlipVector& v, int n_sites);

/// One representative per cyclic orbit of 2k-subsets of the ring, ascending.
/// Requires even N and 0 <= 2k <= N.
std::vector<FlipVector> enumerate_flip_vectors(int n_sites, int k);

/// Representatives for every k = 0 .. N/2.
std::vector<FlipVector> enumerate_all_flip_vectors(int n_sites);

struct SymmetrizedComponent {
  FlipVector flips;
  StateVector state;
  int orbit = 0;
  int sign = 1;  // (-1)^(sum of flipped site labels)
};

/// sign * sum over the distinct translates of v applied to the reference
/// product state along z, normalized by the orbit size. Spin 1/2 only.
SymmetrizedComponent build_component(const FlipVector& v, Character reference, const HilbertSpace& space);

struct ReducedProblem {
  std::vector<SymmetrizedComponent> basis;
  Matrix rotated_basis;  // columns prod_l R_z(phi_l) |Phi_v>
  Matrix h_red;
  Eigen::VectorXd energies;
  Vector coefficients;  // ground eigenvector, phase fixed so the largest-|c| k=0 entry is real positive
  double ground_energy = 0.0;

  StateVector reconstructed(const HilbertSpace& space) const;
  std::size_t dimension() const { return basis.size(); }
};

/// Projects H onto the rotated component basis and diagonalizes the result.
/// Even N and s = 1/2 only.
ReducedProblem reduced_ground_state(const OperatorMatrix& h, Character reference = Character::F);

struct RatioEntry {
  FlipVector v;
  FlipVector partner;
  Complex ratio;
};

struct RatioReport {
  std::vector<RatioEntry> entries;
  int pair_classes = 0;          // unordered {v, complement(v)} classes
  int nonzero_pair_classes = 0;  // classes with a nonvanishing coefficient
  int skipped = 0;               // ordered pairs skipped for a vanishing coefficient

  /// max |ratio - target| over all entries; 0 for an empty report.
  double max_deviation(double target) const;
};

/// C_v / C_complement(v) for every component whose pair has both
/// coefficients above zero_tol in modulus.
RatioReport coefficient_ratio_check(const ReducedProblem& reduced, int n_sites, double zero_tol = 1e-9);

/// Tabulated ratio (+1 or -1) for the Ising limit of family A or B along
/// `axis` with coupling of the given sign.
int tabulated_ratio(Family family, IsingAxis axis, double coupling);

}  // namespace spinring
