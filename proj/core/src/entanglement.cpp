#include "spinring/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinring {

double DensityMatrix::purity() const { return (rho * rho).trace().real(); }

double DensityMatrix::hermiticity_error() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
  const auto& space = state.space();
  const int n = space.sites();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || static_cast<int>(kept.size()) >= n) {
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset of the sites");
  }
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate site in keep");
  }
  for (int s : kept) space.require_site(s);

  const auto d = static_cast<std::size_t>(space.local_dim());
  std::vector<bool> is_kept(static_cast<std::size_t>(n + 1), false);
  for (int s : kept) is_kept[static_cast<std::size_t>(s)] = true;

  std::size_t dim_keep = 1;
  for (std::size_t i = 0; i < kept.size(); ++i) dim_keep *= d;
  const std::size_t dim_env = space.dim() / dim_keep;

  // psi as a dim_keep x dim_env matrix, rho = M M^dagger
  Matrix m(static_cast<Eigen::Index>(dim_keep), static_cast<Eigen::Index>(dim_env));
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    std::size_t a = 0;
    std::size_t e = 0;
    std::size_t rest = idx;
    std::size_t place_a = 1;
    std::size_t place_e = 1;
    for (int site = n; site >= 1; --site) {
      const std::size_t digit = rest % d;
      rest /= d;
      if (is_kept[static_cast<std::size_t>(site)]) {
        a += digit * place_a;
        place_a *= d;
      } else {
        e += digit * place_e;
        place_e *= d;
      }
    }
    m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(e)) = state.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  return {kept, space.local_dim(), m * m.adjoint()};
}

std::vector<double> block_purity_profile(const StateVector& state) {
  const int n = state.space().sites();
  std::vector<double> out;
  std::vector<int> block;
  for (int n1 = 1; n1 < n; ++n1) {
    block.push_back(n1);
    out.push_back(partial_trace(state, block).purity());
  }
  return out;
}

double concurrence(const Matrix& rho_pair) {
  if (rho_pair.rows() != 4 || rho_pair.cols() != 4) throw std::invalid_argument("concurrence needs a 4x4 density matrix");
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix herm = 0.5 * (rho_pair + rho_pair.adjoint());
  const Matrix flipped = yy * herm.conjugate() * yy;

  Eigen::SelfAdjointEigenSolver<Matrix> root_solver(herm);
  Eigen::VectorXd w = root_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix root = root_solver.eigenvectors() * w.asDiagonal() * root_solver.eigenvectors().adjoint();
  const Matrix r = root * flipped * root;
  Eigen::SelfAdjointEigenSolver<Matrix> r_solver(0.5 * (r + r.adjoint()), Eigen::EigenvaluesOnly);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) lambda[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, r_solver.eigenvalues()(i)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

namespace {

void require_qubits(const StateVector& state) {
  if (state.space().spin() != SpinMagnitude::half()) {
    throw std::invalid_argument("pairwise concurrence and tangle are defined for spin 1/2 only");
  }
}

}  // namespace

double concurrence(const StateVector& state, int k, int l) {
  require_qubits(state);
  if (k == l) throw std::invalid_argument("concurrence needs two distinct sites");
  if (state.space().sites() == 2) {
    // concurrence is symmetric under exchanging the two qubits
    state.space().require_site(k);
    state.space().require_site(l);
    const Vector& a = state.amplitudes();
    return concurrence(Matrix(a * a.adjoint()));
  }
  const std::array<int, 2> pair{k, l};
  return concurrence(partial_trace(state, pair).rho);
}

Eigen::MatrixXd concurrence_matrix(const StateVector& state) {
  require_qubits(state);
  const int n = state.space().sites();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      c(k - 1, l - 1) = c(l - 1, k - 1) = concurrence(state, k, l);
    }
  }
  return c;
}

std::vector<double> concurrence_by_distance(const StateVector& state, int anchor) {
  require_qubits(state);
  const int n = state.space().sites();
  state.space().require_site(anchor);
  std::vector<double> out;
  for (int d = 1; d <= n / 2; ++d) out.push_back(concurrence(state, anchor, (anchor - 1 + d) % n + 1));
  return out;
}

double residual_tangle(const StateVector& state, int k, const Eigen::MatrixXd& concurrences) {
  require_qubits(state);
  const int n = state.space().sites();
  const std::array<int, 1> site{k};
  const double det = partial_trace(state, site).rho.determinant().real();
  double tau = 4.0 * det;
  for (int i = 1; i <= n; ++i) {
    if (i != k) tau -= concurrences(i - 1, k - 1) * concurrences(i - 1, k - 1);
  }
  if (tau < 0.0 && tau >= -tol::kTangleClip) tau = 0.0;
  return tau;
}

double residual_tangle(const StateVector& state, int k) {
  return residual_tangle(state, k, concurrence_matrix(state));
}

EntanglementReport entanglement_report(const StateVector& state) {
  EntanglementReport out;
  out.concurrence = concurrence_matrix(state);
  for (int k = 1; k <= state.space().sites(); ++k) out.tangle.push_back(residual_tangle(state, k, out.concurrence));
  out.purity = block_purity_profile(state);
  return out;
}

}  // namespace spinring
