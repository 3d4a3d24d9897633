#include "spinring/symmetry_subspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace spinring {

namespace {

std::vector<int> translate(const std::vector<int>& sites, int shift, int n) {
  std::vector<int> out;
  out.reserve(sites.size());
  for (int s : sites) out.push_back((s - 1 + shift) % n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

void require_even_ring(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("symmetry-adapted ansatz needs an even ring, got N=" + std::to_string(n));
  }
}

}  // namespace

FlipVector canonical_flip_vector(std::vector<int> sites, int n_sites) {
  std::sort(sites.begin(), sites.end());
  if (std::adjacent_find(sites.begin(), sites.end()) != sites.end()) throw std::invalid_argument("duplicate flip site");
  for (int s : sites) {
    if (s < 1 || s > n_sites) throw std::invalid_argument("flip site outside the ring");
  }
  if (sites.size() % 2 != 0) throw std::invalid_argument("flip vectors carry an even number of sites");
  auto best = sites;
  for (int shift = 1; shift < n_sites; ++shift) best = std::min(best, translate(sites, shift, n_sites));
  return {static_cast<int>(sites.size() / 2), best};
}

FlipVector complement(const FlipVector& v, int n_sites) {
  std::vector<int> rest;
  for (int s = 1; s <= n_sites; ++s) {
    if (!std::binary_search(v.sites.begin(), v.sites.end(), s)) rest.push_back(s);
  }
  return canonical_flip_vector(std::move(rest), n_sites);
}

int orbit_size(const FlipVector& v, int n_sites) {
  std::set<std::vector<int>> seen;
  for (int shift = 0; shift < n_sites; ++shift) seen.insert(translate(v.sites, shift, n_sites));
  return static_cast<int>(seen.size());
}

std::vector<FlipVector> enumerate_flip_vectors(int n_sites, int k) {
  require_even_ring(n_sites);
  if (k < 0 || 2 * k > n_sites) throw std::invalid_argument("flip block index k outside [0, N/2]");
  std::set<FlipVector> reps;
  std::vector<bool> mask(static_cast<std::size_t>(n_sites), false);
  std::fill(mask.begin(), mask.begin() + 2 * k, true);
  do {
    std::vector<int> sites;
    for (int i = 0; i < n_sites; ++i) {
      if (mask[static_cast<std::size_t>(i)]) sites.push_back(i + 1);
    }
    reps.insert(canonical_flip_vector(std::move(sites), n_sites));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return {reps.begin(), reps.end()};
}

std::vector<FlipVector> enumerate_all_flip_vectors(int n_sites) {
  std::vector<FlipVector> all;
  for (int k = 0; 2 * k <= n_sites; ++k) {
    auto block = enumerate_flip_vectors(n_sites, k);
    all.insert(all.end(), block.begin(), block.end());
  }
  return all;
}

SymmetrizedComponent build_component(const FlipVector& v, Character reference, const HilbertSpace& space) {
  if (space.spin() != SpinMagnitude::half()) throw std::invalid_argument("symmetry-adapted ansatz is spin-1/2 only");
  const int n = space.sites();
  require_even_ring(n);
  std::vector<int> ref(static_cast<std::size_t>(n), 0);
  if (reference == Character::AF) {
    for (int q = 2; q <= n; q += 2) ref[static_cast<std::size_t>(q - 1)] = 1;
  }
  std::set<std::vector<int>> translates;
  for (int shift = 0; shift < n; ++shift) translates.insert(translate(v.sites, shift, n));
  Vector amp = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
  for (const auto& t : translates) {
    auto digits = ref;
    for (int s : t) digits[static_cast<std::size_t>(s - 1)] ^= 1;
    amp(static_cast<Eigen::Index>(space.index(digits))) += 1.0;
  }
  const int label_sum = std::accumulate(v.sites.begin(), v.sites.end(), 0);
  const int sign = label_sum % 2 == 0 ? 1 : -1;
  amp *= static_cast<double>(sign);
  return {v, StateVector::normalized(space, std::move(amp)), static_cast<int>(translates.size()), sign};
}

StateVector ReducedProblem::reconstructed(const HilbertSpace& space) const {
  return StateVector::normalized(space, rotated_basis * coefficients);
}

ReducedProblem reduced_ground_state(const OperatorMatrix& h, Character reference) {
  const auto& space = h.space();
  const int n = space.sites();
  require_even_ring(n);
  if (space.spin() != SpinMagnitude::half()) throw std::invalid_argument("symmetry-adapted ansatz is spin-1/2 only");

  ReducedProblem out;
  for (const auto& v : enumerate_all_flip_vectors(n)) out.basis.push_back(build_component(v, reference, space));

  std::vector<Matrix> rot;
  for (int l = 1; l <= n; ++l) rot.push_back(local_rotation(Axis::Z, site_angle(l, n), space.spin()).matrix);
  const auto m = static_cast<Eigen::Index>(out.basis.size());
  out.rotated_basis.resize(static_cast<Eigen::Index>(space.dim()), m);
  for (Eigen::Index i = 0; i < m; ++i) {
    out.rotated_basis.col(i) = apply_site_product(rot, space, out.basis[static_cast<std::size_t>(i)].state.amplitudes());
  }
  const double gram = (out.rotated_basis.adjoint() * out.rotated_basis - Matrix::Identity(m, m)).cwiseAbs().maxCoeff();
  if (gram > 1e-10) throw NumericalError("reduced basis is rank deficient (Gram error " + std::to_string(gram) + ")");

  out.h_red = out.rotated_basis.adjoint() * h.matrix() * out.rotated_basis;
  out.h_red = (0.5 * (out.h_red + out.h_red.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(out.h_red);
  if (solver.info() != Eigen::Success) throw NumericalError("reduced eigensolver did not converge");
  out.energies = solver.eigenvalues();
  out.ground_energy = out.energies(0);
  out.coefficients = solver.eigenvectors().col(0);

  // Fix the global phase on the k = 0 coefficient, or the largest one if that vanishes.
  Eigen::Index pivot = 0;
  if (std::abs(out.coefficients(0)) < 1e-9) out.coefficients.cwiseAbs().maxCoeff(&pivot);
  out.coefficients *= std::polar(1.0, -std::arg(out.coefficients(pivot)));
  return out;
}

double RatioReport::max_deviation(double target) const {
  double worst = 0.0;
  for (const auto& e : entries) worst = std::max(worst, std::abs(e.ratio - target));
  return worst;
}

RatioReport coefficient_ratio_check(const ReducedProblem& reduced, int n_sites, double zero_tol) {
  std::map<FlipVector, std::size_t> position;
  for (std::size_t i = 0; i < reduced.basis.size(); ++i) position[reduced.basis[i].flips] = i;
  RatioReport report;
  std::set<std::pair<FlipVector, FlipVector>> classes;
  std::set<std::pair<FlipVector, FlipVector>> nonzero;
  for (std::size_t i = 0; i < reduced.basis.size(); ++i) {
    const auto& v = reduced.basis[i].flips;
    const auto partner = complement(v, n_sites);
    const auto it = position.find(partner);
    if (it == position.end()) throw std::logic_error("complement orbit missing from the reduced basis");
    const auto key = std::minmax(v, partner);
    classes.insert(key);
    const Complex ci = reduced.coefficients(static_cast<Eigen::Index>(i));
    const Complex cj = reduced.coefficients(static_cast<Eigen::Index>(it->second));
    if (std::abs(ci) > zero_tol || std::abs(cj) > zero_tol) nonzero.insert(key);
    if (std::abs(ci) <= zero_tol || std::abs(cj) <= zero_tol) {
      ++report.skipped;
      continue;
    }
    report.entries.push_back({v, partner, ci / cj});
  }
  report.pair_classes = static_cast<int>(classes.size());
  report.nonzero_pair_classes = static_cast<int>(nonzero.size());
  return report;
}

int tabulated_ratio(Family family, IsingAxis axis, double coupling) {
  if (axis == IsingAxis::None || coupling == 0.0) throw std::invalid_argument("ratio is tabulated for Ising limits only");
  const int sign = coupling > 0 ? 1 : -1;
  const int axis_sign = axis == IsingAxis::X ? 1 : -1;
  switch (family) {
    case Family::A: return -sign * axis_sign;
    case Family::B: return sign * axis_sign;
    default: break;
  }
  throw std::invalid_argument("ratio is tabulated for families A and B");
}

}  // namespace spinring
