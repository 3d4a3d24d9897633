#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the Eigen types.

#include <complex>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Spin matrices for 2s = twice_s from the ladder construction.
Mat sx(int twice_s);
Mat sy(int twice_s);
Mat sz(int twice_s);

/// Naive Kronecker product.
Mat kron(const Mat& a, const Mat& b);

/// I x ... x op (site k, 1-based) x ... x I by repeated Kronecker products.
Mat embed(const Mat& op, int k, int n);

/// exp(-i angle op) via Eigen's matrix exponential.
Mat expm_i(const Mat& op, double angle);

/// Model A / B Hamiltonians assembled from rotated spin components
/// with full Kronecker products.
Mat model_a(int n, int twice_s, double jxx, double jyy);
Mat model_b(int n, int twice_s, double jxx, double jyy);
Mat collinear(int n, int twice_s, double jxx, double jyy);

/// Sorted eigenvalues via Eigen's solver on the dense matrix.
Eigen::VectorXd eigenvalues(const Mat& h);

/// Ground energy and degeneracy of the classical Ising ring
/// E = (J/4) sum sigma_k sigma_{k+1}, sigma = +-1.
std::pair<double, int> classical_ising_ground(int n, double j);

/// rho_keep from the full projector |psi><psi| by explicit summation over the
/// environment digits.
Mat naive_partial_trace(const Vec& psi, int n, int d, const std::vector<int>& keep);

/// Wootters concurrence from the eigenvalues of the non-Hermitian product
/// rho (sy x sy) rho* (sy x sy).
double wootters_nonhermitian(const Mat& rho);

/// Cyclic orbits of the 2k-subsets of {0..n-1}, found by closure.
std::vector<std::set<std::vector<int>>> orbit_partition(int n, int k);

/// Binomial coefficient.
long long choose(int n, int k);

}  // namespace oracle
