#pragma once

#include <span>
#include <vector>

#include "spinring/spin_algebra.hpp"

namespace spinring {

/// Reduced state of a subset of sites, kept sites ordered as in the full
/// basis (lowest label most significant).
struct DensityMatrix {
  std::vector<int> sites;
  int local_dim = 2;
  Matrix rho;

  double trace() const { return rho.trace().real(); }
  double purity() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;
};

/// Traces out every site not in `keep`. `keep` must be a nonempty proper
/// subset of 1..N without duplicates.
DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep);

/// Tr(rho_1^2) for the blocks {1..N1}, N1 = 1 .. N-1.
std::vector<double> block_purity_profile(const StateVector& state);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const Matrix& rho_pair);

/// Concurrence between sites k and l (spin 1/2 only).
double concurrence(const StateVector& state, int k, int l);

/// Symmetric N x N matrix of pairwise concurrences, zero diagonal.
Eigen::MatrixXd concurrence_matrix(const StateVector& state);

/// C(anchor, anchor + d) for ring distances d = 1 .. N/2.
std::vector<double> concurrence_by_distance(const StateVector& state, int anchor = 1);

/// 4 det(rho_k) - sum_{i != k} C_ik^2, with values in [-1e-10, 0) clipped to 0.
/// Values further below zero are returned unclipped so callers can flag them.
double residual_tangle(const StateVector& state, int k);
double residual_tangle(const StateVector& state, int k, const Eigen::MatrixXd& concurrences);

struct EntanglementReport {
  Eigen::MatrixXd concurrence;  // N x N
  std::vector<double> tangle;   // per site
  std::vector<double> purity;   // blocks N1 = 1 .. N-1
};

EntanglementReport entanglement_report(const StateVector& state);

}  // namespace spinring
