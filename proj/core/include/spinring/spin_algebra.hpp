#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinring/tolerances.hpp"

namespace spinring {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

enum class Axis { X, Y, Z };

std::string_view to_string(Axis axis);

/// Spin quantum number s, stored as the integer 2s. Only s = 1/2 and s = 1 are
/// supported.
class SpinMagnitude {
 public:
  static SpinMagnitude half() { return SpinMagnitude(1); }
  static SpinMagnitude one() { return SpinMagnitude(2); }

  /// Throws std::invalid_argument for anything other than 2s in {1, 2}.
  static SpinMagnitude from_twice(int twice_s);

  /// Accepts "1/2", "0.5", "1", "1.0".
  static SpinMagnitude parse(std::string_view text);

  int twice() const { return twice_s_; }
  double value() const { return 0.5 * twice_s_; }
  int local_dim() const { return twice_s_ + 1; }
  std::string to_string() const;

  friend auto operator<=>(const SpinMagnitude&, const SpinMagnitude&) = default;

 private:
  explicit SpinMagnitude(int twice_s) : twice_s_(twice_s) {}
  int twice_s_;
};

/// Product space of N spins of equal magnitude.
///
/// Basis ordering contract: a product-basis index is the base-(2s+1) number
/// whose most significant digit is site 1. Digit 0 of every site is m = +s,
/// digit 2s is m = -s. Sites are 1-based throughout the public API.
class HilbertSpace {
 public:
  /// Throws std::invalid_argument unless 1 <= sites <= kMaxSites.
  HilbertSpace(int sites, SpinMagnitude spin);

  int sites() const { return sites_; }
  SpinMagnitude spin() const { return spin_; }
  int local_dim() const { return spin_.local_dim(); }
  std::size_t dim() const { return dim_; }

  /// Place value of `site` in the index, (2s+1)^(N - site).
  std::size_t stride(int site) const;
  int digit(std::size_t index, int site) const;
  std::vector<int> digits(std::size_t index) const;
  std::size_t index(std::span<const int> digits) const;

  /// Magnetic quantum number of a local digit.
  double m_of_digit(int digit) const { return spin_.value() - digit; }

  void require_site(int site) const;

  friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

 private:
  int sites_;
  SpinMagnitude spin_;
  std::size_t dim_;
};

struct LocalOperator {
  Matrix matrix;
  std::string label;  // "x", "y", "z", or "custom"
};

/// Standard spin-s matrix in the S_z eigenbasis ordered m = +s ... -s.
LocalOperator single_spin_operator(Axis axis, SpinMagnitude spin);

/// exp(-i angle S_axis), computed in closed form for s = 1/2 and s = 1.
LocalOperator local_rotation(Axis axis, double angle, SpinMagnitude spin);

/// Dense complex matrix acting on a HilbertSpace.
class OperatorMatrix {
 public:
  OperatorMatrix(HilbertSpace space, Matrix matrix);

  static OperatorMatrix zero(const HilbertSpace& space);
  static OperatorMatrix identity(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return space_.dim(); }

  double max_abs() const;
  /// max |M - M^dagger| entries.
  double hermiticity_error() const;
  bool is_hermitian(double tol = tol::kHermitian) const;
  /// max |U^dagger U - 1| entries.
  double unitarity_error() const;
  bool is_unitary(double tol = tol::kUnitary) const;
  Complex trace() const { return matrix_.trace(); }

  OperatorMatrix adjoint() const;

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex scale);

  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(OperatorMatrix a, Complex s) { return a *= s; }
  friend OperatorMatrix operator*(Complex s, OperatorMatrix a) { return a *= s; }
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  OperatorMatrix operator-() const;

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// U A U^dagger
OperatorMatrix conjugate(const OperatorMatrix& unitary, const OperatorMatrix& op);

/// Normalized state in the product basis.
class StateVector {
 public:
  /// Throws std::invalid_argument if the amplitudes are not unit norm to
  /// tol::kNorm or have the wrong dimension.
  StateVector(HilbertSpace space, Vector amplitudes);

  /// Normalizes; throws std::invalid_argument on a zero vector.
  static StateVector normalized(HilbertSpace space, Vector amplitudes);

  /// Kronecker product of single-site states, site 1 first. Each factor is
  /// normalized individually.
  static StateVector product(const HilbertSpace& space, std::span<const Vector> site_states);

  static StateVector basis_state(const HilbertSpace& space, std::size_t index);

  const HilbertSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return space_.dim(); }

  /// <this|other>
  Complex inner(const StateVector& other) const;
  Complex expectation(const OperatorMatrix& op) const;

  /// op |this>, renormalized (op is expected to be unitary or norm preserving
  /// up to rounding).
  StateVector transformed(const OperatorMatrix& op) const;

 private:
  HilbertSpace space_;
  Vector amplitudes_;
};

/// Identity on every site except `site`.
OperatorMatrix embed_site_operator(const LocalOperator& op, int site, const HilbertSpace& space);

/// exp(-i angle S_{site,axis}) embedded at `site`.
OperatorMatrix site_rotation(Axis axis, int site, double angle, const HilbertSpace& space);

struct SiteRotation {
  Axis axis;
  double angle;
};

/// Tensor product of one rotation per site, entry i acting on site i+1.
/// Throws std::invalid_argument if rotations.size() != N.
OperatorMatrix product_rotation(std::span<const SiteRotation> rotations, const HilbertSpace& space);

/// Tensor product of arbitrary local matrices, entry i acting on site i+1.
OperatorMatrix tensor_product(std::span<const Matrix> factors, const HilbertSpace& space);

/// Applies prod_k factors[k] to a raw amplitude vector in O(dim * d * N).
Vector apply_site_product(std::span<const Matrix> factors, const HilbertSpace& space, const Vector& amplitudes);

/// Accumulates sums of one- and two-site terms into a dense matrix without
/// forming full Kronecker products.
class OperatorAccumulator {
 public:
  explicit OperatorAccumulator(HilbertSpace space);

  void add_site(const Matrix& op, int site, Complex coeff = 1.0);
  void add_bond(const Matrix& op_a, int site_a, const Matrix& op_b, int site_b, Complex coeff = 1.0);

  const HilbertSpace& space() const { return space_; }
  OperatorMatrix build() &&;

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

}  // namespace spinring
