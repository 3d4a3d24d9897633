#include "spinring/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinring {

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

SpinMagnitude SpinMagnitude::from_twice(int twice_s) {
  if (twice_s != 1 && twice_s != 2) {
    throw std::invalid_argument("unsupported spin magnitude 2s=" + std::to_string(twice_s) +
                                " (supported: s = 1/2, 1)");
  }
  return SpinMagnitude(twice_s);
}

SpinMagnitude SpinMagnitude::parse(std::string_view text) {
  if (text == "1/2" || text == "0.5") return half();
  if (text == "1" || text == "1.0") return one();
  throw std::invalid_argument("unsupported spin magnitude '" + std::string(text) + "' (supported: 1/2, 1)");
}

std::string SpinMagnitude::to_string() const { return twice_s_ == 1 ? "1/2" : std::to_string(twice_s_ / 2); }

HilbertSpace::HilbertSpace(int sites, SpinMagnitude spin) : sites_(sites), spin_(spin), dim_(1) {
  if (sites < 1 || sites > kMaxSites) {
    throw std::invalid_argument("site count " + std::to_string(sites) + " outside [1, " +
                                std::to_string(kMaxSites) + "]");
  }
  for (int k = 0; k < sites; ++k) dim_ *= static_cast<std::size_t>(spin.local_dim());
}

void HilbertSpace::require_site(int site) const {
  if (site < 1 || site > sites_) {
    throw std::out_of_range("site " + std::to_string(site) + " outside [1, " + std::to_string(sites_) + "]");
  }
}

std::size_t HilbertSpace::stride(int site) const {
  require_site(site);
  std::size_t s = 1;
  for (int k = site; k < sites_; ++k) s *= static_cast<std::size_t>(local_dim());
  return s;
}

int HilbertSpace::digit(std::size_t index, int site) const {
  return static_cast<int>((index / stride(site)) % static_cast<std::size_t>(local_dim()));
}

std::vector<int> HilbertSpace::digits(std::size_t index) const {
  std::vector<int> out(static_cast<std::size_t>(sites_));
  const auto d = static_cast<std::size_t>(local_dim());
  for (int k = sites_; k >= 1; --k) {
    out[static_cast<std::size_t>(k - 1)] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

std::size_t HilbertSpace::index(std::span<const int> digits) const {
  if (digits.size() != static_cast<std::size_t>(sites_)) throw std::invalid_argument("digit string length mismatch");
  std::size_t idx = 0;
  for (int dgt : digits) {
    if (dgt < 0 || dgt >= local_dim()) throw std::invalid_argument("digit out of range");
    idx = idx * static_cast<std::size_t>(local_dim()) + static_cast<std::size_t>(dgt);
  }
  return idx;
}

namespace {

Matrix raising_operator(SpinMagnitude spin) {
  const int d = spin.local_dim();
  const double s = spin.value();
  Matrix sp = Matrix::Zero(d, d);
  // row i-1, column i: <m+1| S+ |m> with m = s - i
  for (int i = 1; i < d; ++i) {
    const double m = s - i;
    sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  return sp;
}

}  // namespace

LocalOperator single_spin_operator(Axis axis, SpinMagnitude spin) {
  const int d = spin.local_dim();
  const Matrix sp = raising_operator(spin);
  const Matrix sm = sp.adjoint();
  switch (axis) {
    case Axis::X: return {0.5 * (sp + sm), "x"};
    case Axis::Y: return {Complex(0.0, -0.5) * (sp - sm), "y"};
    case Axis::Z: {
      Matrix sz = Matrix::Zero(d, d);
      for (int i = 0; i < d; ++i) sz(i, i) = spin.value() - i;
      return {sz, "z"};
    }
  }
  throw std::invalid_argument("invalid axis");
}

LocalOperator local_rotation(Axis axis, double angle, SpinMagnitude spin) {
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle must be finite");
  const Matrix s = single_spin_operator(axis, spin).matrix;
  const int d = spin.local_dim();
  const Matrix id = Matrix::Identity(d, d);
  const Complex i(0.0, 1.0);
  Matrix u;
  if (spin.twice() == 1) {
    // S = sigma/2, sigma^2 = 1
    u = std::cos(angle / 2) * id - i * std::sin(angle / 2) * (2.0 * s);
  } else {
    // spin 1: S^3 = S
    u = id - i * std::sin(angle) * s + (std::cos(angle) - 1.0) * (s * s);
  }
  return {u, "custom"};
}

OperatorMatrix::OperatorMatrix(HilbertSpace space, Matrix matrix) : space_(space), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(space_.dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("operator dimension " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + " does not match space dimension " +
                                std::to_string(space_.dim()));
  }
}

OperatorMatrix OperatorMatrix::zero(const HilbertSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  return {space, Matrix::Zero(n, n)};
}

OperatorMatrix OperatorMatrix::identity(const HilbertSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  return {space, Matrix::Identity(n, n)};
}

double OperatorMatrix::max_abs() const { return matrix_.size() == 0 ? 0.0 : matrix_.cwiseAbs().maxCoeff(); }

double OperatorMatrix::hermiticity_error() const { return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff(); }

bool OperatorMatrix::is_hermitian(double tol) const { return hermiticity_error() < tol; }

double OperatorMatrix::unitarity_error() const {
  const auto n = matrix_.rows();
  return (matrix_.adjoint() * matrix_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

bool OperatorMatrix::is_unitary(double tol) const { return unitarity_error() < tol; }

OperatorMatrix OperatorMatrix::adjoint() const { return {space_, matrix_.adjoint()}; }

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  if (!(space_ == other.space_)) throw std::invalid_argument("operator space mismatch");
  matrix_ += other.matrix_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  if (!(space_ == other.space_)) throw std::invalid_argument("operator space mismatch");
  matrix_ -= other.matrix_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("operator space mismatch");
  return {a.space(), a.matrix() * b.matrix()};
}

OperatorMatrix OperatorMatrix::operator-() const { return {space_, -matrix_}; }

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

OperatorMatrix conjugate(const OperatorMatrix& unitary, const OperatorMatrix& op) {
  return {op.space(), unitary.matrix() * op.matrix() * unitary.matrix().adjoint()};
}

StateVector::StateVector(HilbertSpace space, Vector amplitudes) : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(space_.dim())) {
    throw std::invalid_argument("state dimension does not match space dimension");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > tol::kNorm) {
    throw std::invalid_argument("state is not normalized");
  }
}

StateVector StateVector::normalized(HilbertSpace space, Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  amplitudes /= n;
  return {space, std::move(amplitudes)};
}

StateVector StateVector::product(const HilbertSpace& space, std::span<const Vector> site_states) {
  if (site_states.size() != static_cast<std::size_t>(space.sites())) {
    throw std::invalid_argument("product state needs one factor per site");
  }
  Vector acc = Vector::Ones(1);
  for (const auto& raw : site_states) {
    if (raw.size() != space.local_dim()) throw std::invalid_argument("site state has wrong local dimension");
    const Vector v = raw / raw.norm();
    Vector next(acc.size() * v.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) next.segment(i * v.size(), v.size()) = acc(i) * v;
    acc = std::move(next);
  }
  return normalized(space, std::move(acc));
}

StateVector StateVector::basis_state(const HilbertSpace& space, std::size_t index) {
  if (index >= space.dim()) throw std::out_of_range("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {space, std::move(v)};
}

Complex StateVector::inner(const StateVector& other) const {
  if (!(space_ == other.space_)) throw std::invalid_argument("state space mismatch");
  return amplitudes_.dot(other.amplitudes_);
}

Complex StateVector::expectation(const OperatorMatrix& op) const {
  if (!(space_ == op.space())) throw std::invalid_argument("state/operator space mismatch");
  return amplitudes_.dot(op.matrix() * amplitudes_);
}

StateVector StateVector::transformed(const OperatorMatrix& op) const {
  if (!(space_ == op.space())) throw std::invalid_argument("state/operator space mismatch");
  return normalized(space_, op.matrix() * amplitudes_);
}

OperatorMatrix embed_site_operator(const LocalOperator& op, int site, const HilbertSpace& space) {
  space.require_site(site);
  OperatorAccumulator acc(space);
  acc.add_site(op.matrix, site);
  return std::move(acc).build();
}

OperatorMatrix site_rotation(Axis axis, int site, double angle, const HilbertSpace& space) {
  return embed_site_operator(local_rotation(axis, angle, space.spin()), site, space);
}

OperatorMatrix tensor_product(std::span<const Matrix> factors, const HilbertSpace& space) {
  if (factors.size() != static_cast<std::size_t>(space.sites())) {
    throw std::invalid_argument("tensor product needs one factor per site, got " + std::to_string(factors.size()));
  }
  const int d = space.local_dim();
  for (const auto& f : factors) {
    if (f.rows() != d || f.cols() != d) throw std::invalid_argument("local factor has wrong dimension");
  }
  Matrix acc = Matrix::Ones(1, 1);
  for (const auto& f : factors) {
    Matrix next(acc.rows() * d, acc.cols() * d);
    for (Eigen::Index r = 0; r < acc.rows(); ++r)
      for (Eigen::Index c = 0; c < acc.cols(); ++c) next.block(r * d, c * d, d, d) = acc(r, c) * f;
    acc = std::move(next);
  }
  return {space, std::move(acc)};
}

OperatorMatrix product_rotation(std::span<const SiteRotation> rotations, const HilbertSpace& space) {
  if (rotations.size() != static_cast<std::size_t>(space.sites())) {
    throw std::invalid_argument("product_rotation needs one rotation per site: got " +
                                std::to_string(rotations.size()) + ", N=" + std::to_string(space.sites()));
  }
  std::vector<Matrix> factors;
  factors.reserve(rotations.size());
  for (const auto& r : rotations) factors.push_back(local_rotation(r.axis, r.angle, space.spin()).matrix);
  return tensor_product(factors, space);
}

Vector apply_site_product(std::span<const Matrix> factors, const HilbertSpace& space, const Vector& amplitudes) {
  if (factors.size() != static_cast<std::size_t>(space.sites())) {
    throw std::invalid_argument("apply_site_product needs one factor per site");
  }
  const auto d = static_cast<std::size_t>(space.local_dim());
  Vector cur = amplitudes;
  Vector next(cur.size());
  for (int site = 1; site <= space.sites(); ++site) {
    const Matrix& f = factors[static_cast<std::size_t>(site - 1)];
    const std::size_t stride = space.stride(site);
    const std::size_t block = stride * d;
    for (std::size_t base = 0; base < space.dim(); base += block) {
      for (std::size_t low = 0; low < stride; ++low) {
        for (std::size_t r = 0; r < d; ++r) {
          Complex sum = 0.0;
          for (std::size_t c = 0; c < d; ++c) {
            sum += f(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                   cur(static_cast<Eigen::Index>(base + c * stride + low));
          }
          next(static_cast<Eigen::Index>(base + r * stride + low)) = sum;
        }
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

OperatorAccumulator::OperatorAccumulator(HilbertSpace space)
    : space_(space),
      matrix_(Matrix::Zero(static_cast<Eigen::Index>(space.dim()), static_cast<Eigen::Index>(space.dim()))) {}

void OperatorAccumulator::add_site(const Matrix& op, int site, Complex coeff) {
  space_.require_site(site);
  const int d = space_.local_dim();
  if (op.rows() != d || op.cols() != d) throw std::invalid_argument("local operator has wrong dimension");
  const auto stride = static_cast<std::ptrdiff_t>(space_.stride(site));
  for (std::size_t col = 0; col < space_.dim(); ++col) {
    const int dc = space_.digit(col, site);
    for (int r = 0; r < d; ++r) {
      const Complex v = op(r, dc);
      if (v == 0.0) continue;
      const auto row = static_cast<std::ptrdiff_t>(col) + (r - dc) * stride;
      matrix_(row, static_cast<std::ptrdiff_t>(col)) += coeff * v;
    }
  }
}

void OperatorAccumulator::add_bond(const Matrix& op_a, int site_a, const Matrix& op_b, int site_b, Complex coeff) {
  space_.require_site(site_a);
  space_.require_site(site_b);
  if (site_a == site_b) throw std::invalid_argument("bond term needs two distinct sites");
  const int d = space_.local_dim();
  if (op_a.rows() != d || op_a.cols() != d || op_b.rows() != d || op_b.cols() != d) {
    throw std::invalid_argument("local operator has wrong dimension");
  }
  const auto stride_a = static_cast<std::ptrdiff_t>(space_.stride(site_a));
  const auto stride_b = static_cast<std::ptrdiff_t>(space_.stride(site_b));
  for (std::size_t col = 0; col < space_.dim(); ++col) {
    const int da = space_.digit(col, site_a);
    const int db = space_.digit(col, site_b);
    for (int ra = 0; ra < d; ++ra) {
      const Complex va = op_a(ra, da);
      if (va == 0.0) continue;
      for (int rb = 0; rb < d; ++rb) {
        const Complex vb = op_b(rb, db);
        if (vb == 0.0) continue;
        const auto row = static_cast<std::ptrdiff_t>(col) + (ra - da) * stride_a + (rb - db) * stride_b;
        matrix_(row, static_cast<std::ptrdiff_t>(col)) += coeff * va * vb;
      }
    }
  }
}

OperatorMatrix OperatorAccumulator::build() && { return {space_, std::move(matrix_)}; }

}  // namespace spinring
