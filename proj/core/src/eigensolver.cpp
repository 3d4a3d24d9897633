#include "spinring/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinring {

StateVector SpectrumResult::eigenvector(std::size_t i) const {
  if (!has_vectors()) throw std::logic_error("spectrum was computed without eigenvectors");
  if (i >= size()) throw std::out_of_range("eigenvector index out of range");
  return StateVector::normalized(space, eigenvectors.col(static_cast<Eigen::Index>(i)));
}

double default_degeneracy_tolerance(const OperatorMatrix& h) {
  return tol::kDegeneracyRelative * std::max(1.0, h.max_abs());
}

std::vector<DegeneracyGroup> group_degeneracies(const Eigen::VectorXd& eigenvalues, double tol) {
  std::vector<DegeneracyGroup> groups;
  const auto n = static_cast<std::size_t>(eigenvalues.size());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || eigenvalues(static_cast<Eigen::Index>(i)) - eigenvalues(static_cast<Eigen::Index>(i - 1)) >= tol) {
      const double mean = eigenvalues.segment(static_cast<Eigen::Index>(start), static_cast<Eigen::Index>(i - start)).mean();
      groups.push_back({start, i - start, mean});
      start = i;
    }
  }
  return groups;
}

double max_residual(const OperatorMatrix& h, const SpectrumResult& spectrum) {
  if (!spectrum.has_vectors()) throw std::logic_error("residual needs eigenvectors");
  const Matrix hv = h.matrix() * spectrum.eigenvectors;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < hv.cols(); ++i) {
    worst = std::max(worst, (hv.col(i) - spectrum.eigenvalues(i) * spectrum.eigenvectors.col(i)).norm());
  }
  return worst;
}

SpectrumResult diagonalize(const OperatorMatrix& h, const DiagonalizeOptions& options) {
  const double herm = h.hermiticity_error();
  if (herm > tol::kHermitian * std::max(1.0, h.max_abs())) {
    throw std::invalid_argument("diagonalize: operator is not Hermitian (max |H - H^dagger| = " +
                                std::to_string(herm) + ")");
  }
  // Symmetrize so the solver sees an exactly Hermitian matrix.
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, options.vectors ? Eigen::ComputeEigenvectors
                                                                    : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("dense Hermitian eigensolver did not converge");

  SpectrumResult out{h.space(), solver.eigenvalues(), Matrix(), {}, 0.0, 0.0};
  if (options.vectors) out.eigenvectors = solver.eigenvectors();
  out.tol_deg = options.tol_deg.value_or(default_degeneracy_tolerance(h));
  out.groups = group_degeneracies(out.eigenvalues, out.tol_deg);
  if (out.eigenvalues.size() > 1) out.delta = out.eigenvalues(1) - out.eigenvalues(0);

  if (options.vectors && options.verify) {
    const double scale = std::max(1.0, out.eigenvalues.cwiseAbs().maxCoeff());
    const double residual = max_residual(h, out);
    if (residual >= tol::kResidualRelative * scale) {
      throw NumericalError("eigenpair residual " + std::to_string(residual) + " exceeds " +
                           std::to_string(tol::kResidualRelative * scale));
    }
    const auto n = out.eigenvectors.cols();
    const double ortho = (out.eigenvectors.adjoint() * out.eigenvectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho > 1e-10) throw NumericalError("eigenvectors not orthonormal: " + std::to_string(ortho));
  }
  return out;
}

Vector GroundSpace::project(const Vector& psi) const { return basis * (basis.adjoint() * psi); }

GroundSpace ground_space(const SpectrumResult& spectrum, std::optional<double> tol_deg) {
  if (spectrum.size() == 0) throw std::invalid_argument("ground_space: empty spectrum");
  if (!spectrum.has_vectors()) throw std::invalid_argument("ground_space: spectrum has no eigenvectors");
  const double tol = tol_deg.value_or(spectrum.tol_deg);
  const auto groups = group_degeneracies(spectrum.eigenvalues, tol);
  const auto g = static_cast<Eigen::Index>(groups.front().count);
  return {spectrum.space, spectrum.eigenvectors.leftCols(g), groups.front().energy, spectrum.delta};
}

Eigen::VectorXd SectorDecomposition::merged_eigenvalues() const {
  std::vector<double> all;
  for (const auto& b : blocks) all.insert(all.end(), b.eigenvalues.data(), b.eigenvalues.data() + b.eigenvalues.size());
  std::sort(all.begin(), all.end());
  return Eigen::Map<Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
}

Vector SectorDecomposition::embed(std::size_t b, Eigen::Index i, std::size_t dim) const {
  const auto& block = blocks.at(b);
  if (block.eigenvectors.cols() == 0) throw std::logic_error("sector blocks were computed without eigenvectors");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < block.indices.size(); ++r) {
    v(static_cast<Eigen::Index>(block.indices[r])) = block.eigenvectors(static_cast<Eigen::Index>(r), i);
  }
  return v;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SectorDecomposition detect_sectors(const OperatorMatrix& h, double threshold, bool vectors) {
  if (!h.is_hermitian(tol::kHermitian * std::max(1.0, h.max_abs()))) {
    throw std::invalid_argument("detect_sectors: operator is not Hermitian");
  }
  const auto dim = h.dim();
  const Matrix& m = h.matrix();
  std::vector<std::size_t> parent(dim);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = c + 1; r < dim; ++r) {
      if (std::abs(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) > threshold) {
        const auto a = find_root(parent, r);
        const auto b = find_root(parent, c);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  // Blocks ordered by their smallest index.
  std::vector<std::size_t> block_of(dim, dim);
  SectorDecomposition out;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto root = find_root(parent, i);
    if (block_of[root] == dim) {
      block_of[root] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.blocks[block_of[root]].indices.push_back(i);
  }
  for (auto& block : out.blocks) {
    const auto n = static_cast<Eigen::Index>(block.indices.size());
    Matrix sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        sub(r, c) = m(static_cast<Eigen::Index>(block.indices[static_cast<std::size_t>(r)]),
                      static_cast<Eigen::Index>(block.indices[static_cast<std::size_t>(c)]));
    sub = 0.5 * (sub + sub.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sub, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("sector eigensolver did not converge");
    block.eigenvalues = solver.eigenvalues();
    if (vectors) block.eigenvectors = solver.eigenvectors();
  }
  return out;
}

double compare_spectra(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compare_spectra: dimension mismatch " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  if (a.size() == 0) return 0.0;
  Eigen::VectorXd sa = a;
  Eigen::VectorXd sb = b;
  std::sort(sa.data(), sa.data() + sa.size());
  std::sort(sb.data(), sb.data() + sb.size());
  return (sa - sb).cwiseAbs().maxCoeff();
}

double compare_spectra(const SpectrumResult& a, const SpectrumResult& b) {
  return compare_spectra(a.eigenvalues, b.eigenvalues);
}

Eigen::VectorXd negated_spectrum(const Eigen::VectorXd& ascending) { return -ascending.reverse(); }

}  // namespace spinring
