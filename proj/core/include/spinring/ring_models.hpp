#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinring/spin_algebra.hpp"

namespace spinring {

enum class Family { A, B, Collinear, XY };
enum class IsingAxis { X, Y, None };

std::string_view to_string(Family family);
std::string_view to_string(IsingAxis axis);
Family parse_family(std::string_view text);
IsingAxis parse_ising_axis(std::string_view text);

/// Exchange couplings of one ring model. Family A couples the radial/tangential
/// components of each spin, family B the components parallel/perpendicular to
/// each bond, Collinear and XY use one global frame.
struct ModelVariant {
  Family family = Family::B;
  double jxx = 0.0;
  double jyy = 0.0;

  /// Pure Ising limit along `axis` with coupling J.
  static ModelVariant ising(Family family, IsingAxis axis, double coupling);
  static ModelVariant xy(double coupling);

  /// X when only jxx is nonzero, Y when only jyy is nonzero, None otherwise.
  IsingAxis ising_axis() const;
};

enum class FieldDirection { None, X, Z };

std::string_view to_string(FieldDirection direction);
FieldDirection parse_field_direction(std::string_view text);

/// Uniform Zeeman term b * sum_k (n . s_k). For X the direction lies in the
/// ring plane at `azimuth` from the x axis; for Z it is the ring normal.
struct Field {
  FieldDirection direction = FieldDirection::None;
  double magnitude = 0.0;
  double azimuth = 0.0;
};

struct RingConfig {
  int sites = 4;
  SpinMagnitude spin = SpinMagnitude::half();
  ModelVariant model;
  Field field;

  HilbertSpace space() const { return HilbertSpace(sites, spin); }

  /// Throws std::invalid_argument on N < 3, N > kMaxSites, non-finite
  /// couplings, a negative field, or an XY model with jxx != jyy.
  void validate() const;
};

/// Azimuth of site k (1-based) in model A: 2(k-1)pi/N.
double site_angle(int k, int sites);
/// Azimuth of the frame of bond k (sites k, k+1) in model B: pi/2 + (2k-1)pi/N.
double bond_angle(int k, int sites);

/// Coefficients of one bond written in the global frame:
///   jxx s_x s_x + jyy s_y s_y + (jxy + dxy) s_x s_y' + (jxy - dxy) s_y s_x'
/// where the unprimed operator belongs to site k and the primed one to k+1.
struct BondTensor {
  double jxx = 0.0;
  double jyy = 0.0;
  double jxy = 0.0;
  double dxy = 0.0;
};

struct FrameTensors {
  std::vector<BondTensor> bonds;  // bond k at index k-1
};

OperatorMatrix build_model_a(const RingConfig& cfg);
OperatorMatrix build_model_b(const RingConfig& cfg);
OperatorMatrix build_collinear(const RingConfig& cfg);

/// Exchange part for any family.
OperatorMatrix build_exchange(const RingConfig& cfg);

/// b * sum_k s_{k,z} or b * sum_k (cos a s_{k,x} + sin a s_{k,y}).
OperatorMatrix build_zeeman(const Field& field, const HilbertSpace& space);

/// Exchange plus Zeeman term. Validates the config first.
OperatorMatrix build_hamiltonian(const RingConfig& cfg);

/// Global-frame tensors of every bond for families A and B.
FrameTensors general_frame_coefficients(const RingConfig& cfg);

/// Sum over bonds of the BondTensor form above, with periodic closure.
OperatorMatrix from_frame_tensors(const FrameTensors& tensors, const HilbertSpace& space);

/// Model-A couplings re-expressed in the bond frames of model B. The symmetric
/// part acquires swapped, rotated apices and an antisymmetric dxy appears.
/// The inverse map has the same form with the apices swapped back and the sign
/// of dxy reversed; see b_to_a_frame.
BondTensor a_to_b_frame(double jxx_a, double jyy_a, int sites);
BondTensor b_to_a_frame(double jxx_b, double jyy_b, int sites);

/// Hamiltonian with one bond tensor applied in the model-B bond frames:
/// for bond k the components of both spins are taken along bond_angle(k).
OperatorMatrix build_in_bond_frames(const BondTensor& tensor, const HilbertSpace& space);

/// Hamiltonian with one bond tensor applied in the model-A site frames.
OperatorMatrix build_in_site_frames(const BondTensor& tensor, const HilbertSpace& space);

struct NamedOperator {
  std::string name;
  OperatorMatrix op;
};

/// Spin-space representations of the symmetry operations that leave the
/// configured Hamiltonian invariant:
///   sigma_h       prod_k exp(-i pi s_kz), all families, unless the field is in-plane
///   C_n           cyclic shift times prod_k exp(-i 2pi s_kz / N), families A and B,
///                 unless the field is in-plane
///   R_x, R_y, R_z global pi rotations, families Collinear and XY at zero field
/// The C_2 axes of the ring mix site permutations with spin rotations and are
/// not represented separately.
std::vector<NamedOperator> symmetry_generators(const RingConfig& cfg);

/// Permutation moving the state of site k to site k+1 (site N to site 1).
OperatorMatrix cyclic_shift(const HilbertSpace& space);

/// U_{xi xi'} = prod_k exp(-i s_kz (phi_k + phi(xi, xi'))) with phi = 0 for
/// equal axes, +pi/2 for (Y, X) and -pi/2 for (X, Y). Maps the collinear Ising
/// model along xi' onto the model-A Ising model along xi with the same J.
OperatorMatrix equivalence_unitary(IsingAxis xi, IsingAxis xi_prime, const HilbertSpace& space);

/// prod_k exp(-i pi s_kz / 2); maps the model-B Ising model along X onto the
/// one along Y.
OperatorMatrix quarter_turn_unitary(const HilbertSpace& space);

/// prod over even k of exp(-i pi s_kz); flips the sign of every
/// nearest-neighbour in-plane coupling on an even ring.
OperatorMatrix staggered_flip_unitary(const HilbertSpace& space);

}  // namespace spinring
