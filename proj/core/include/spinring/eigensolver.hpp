#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinring/spin_algebra.hpp"

namespace spinring {

/// Raised when an eigen decomposition fails its residual or orthonormality check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DegeneracyGroup {
  std::size_t first = 0;
  std::size_t count = 0;
  double energy = 0.0;  // mean of the group
};

struct SpectrumResult {
  HilbertSpace space;
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // columns; empty when only eigenvalues were requested
  std::vector<DegeneracyGroup> groups;
  double tol_deg = 0.0;
  double delta = 0.0;  // E_1 - E_0, 0 for a one-dimensional space

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues.size()); }
  bool has_vectors() const { return eigenvectors.cols() > 0; }
  StateVector eigenvector(std::size_t i) const;
};

/// 1e-9 * max(1, max |H_ij|).
double default_degeneracy_tolerance(const OperatorMatrix& h);

/// Groups ascending eigenvalues whose consecutive gaps are below tol.
std::vector<DegeneracyGroup> group_degeneracies(const Eigen::VectorXd& eigenvalues, double tol);

struct DiagonalizeOptions {
  std::optional<double> tol_deg;
  bool vectors = true;
  bool verify = true;  // residual and orthonormality checks, NumericalError on failure
};

/// Full dense spectrum of a Hermitian operator. Throws std::invalid_argument
/// for non-Hermitian input. Within degenerate groups the eigenvector basis is
/// whatever the solver returns; callers must not depend on it.
SpectrumResult diagonalize(const OperatorMatrix& h, const DiagonalizeOptions& options = {});

/// Largest ||H v - E v|| over all pairs.
double max_residual(const OperatorMatrix& h, const SpectrumResult& spectrum);

/// Orthonormal basis of the lowest degeneracy group.
struct GroundSpace {
  HilbertSpace space;
  Matrix basis;  // dim x g, orthonormal columns
  double energy = 0.0;
  double delta = 0.0;

  int dimension() const { return static_cast<int>(basis.cols()); }
  /// P psi, with P the projector onto the span.
  Vector project(const Vector& psi) const;
};

/// Uses spectrum.tol_deg unless tol_deg is given.
GroundSpace ground_space(const SpectrumResult& spectrum, std::optional<double> tol_deg = std::nullopt);

struct SectorBlock {
  std::vector<std::size_t> indices;  // ascending product-basis indices
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;  // in the block's local basis
};

struct SectorDecomposition {
  std::vector<SectorBlock> blocks;

  /// All block eigenvalues, sorted.
  Eigen::VectorXd merged_eigenvalues() const;
  /// Eigenvector `i` of block `b` embedded in the full space.
  Vector embed(std::size_t b, Eigen::Index i, std::size_t dim) const;
};

/// Connected components of the graph with an edge wherever |H_ij| > threshold,
/// each block diagonalized on its own.
SectorDecomposition detect_sectors(const OperatorMatrix& h, double threshold = tol::kSectorEdge,
                                   bool vectors = false);

/// max_i |a_i - b_i| over sorted lists; throws on a length mismatch.
double compare_spectra(const Eigen::VectorXd& a, const Eigen::VectorXd& b);
double compare_spectra(const SpectrumResult& a, const SpectrumResult& b);

/// Spectrum of -H listed ascending, i.e. -reverse(E).
Eigen::VectorXd negated_spectrum(const Eigen::VectorXd& ascending);

}  // namespace spinring
