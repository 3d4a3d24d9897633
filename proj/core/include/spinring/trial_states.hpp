#pragma once

#include <array>
#include <string_view>

#include "spinring/eigensolver.hpp"
#include "spinring/spin_algebra.hpp"

namespace spinring {

/// Ferromagnetic or antiferromagnetic arrangement of the local spin directions.
enum class Character { F, AF };

std::string_view to_string(Character character);
Character parse_character(std::string_view text);

struct TrialSpec {
  Character character = Character::F;
  double phi = 0.0;
  double theta = kPi / 2;  // polar angle from +z; pi/2 is the in-plane case
  int branch = 0;          // 0 or 1
};

/// Product of |m = +s> (up) and |m = -s> (down) along x or z. AF alternates
/// starting with up on site 1. Only Axis::X and Axis::Z are accepted.
StateVector alpha_state(Character character, Axis axis, const HilbertSpace& space);

/// Site q points at polar angle theta (staggered as +theta, -theta, ... for AF)
/// and azimuth phi_q + phi, phi_q = 2(q-1)pi/N. Branch 1 is branch 0 with every
/// site sent to the opposite in-plane direction by prod_q exp(i pi (s - s_qz)),
/// which is the k*pi rotation without its spinor phase.
StateVector gamma_state(const TrialSpec& spec, const HilbertSpace& space);

/// gamma_state at theta = pi/2.
StateVector beta_state(const TrialSpec& spec, const HilbertSpace& space);

/// (gamma_0 + gamma_1) normalized; <gamma_0|gamma_1> = cos^N theta for F.
StateVector tilted_trial(Character character, double theta, double phi, const HilbertSpace& space);

/// (beta_0 + beta_1) / sqrt(2).
StateVector ghz_trial(Character character, double phi, const HilbertSpace& space);

/// Squared norm of the projection of the trial onto the ground space. Reduces
/// to |<psi_0|trial>|^2 for a one-dimensional ground space.
double overlap_p(const GroundSpace& ground, const StateVector& trial);

/// Normalized projection of `reference` onto the ground space, used as the
/// single state on which gauge-dependent quantities are evaluated. Falls back
/// to the first basis vector when the projection vanishes.
StateVector representative_state(const GroundSpace& ground, const StateVector& reference);

struct ThetaOptimum {
  double theta = 0.0;  // radians, in [0, pi]
  double p = 0.0;

  double theta_over_pi() const { return theta / kPi; }
  double half_angle_over_pi() const { return theta / (2 * kPi); }
  /// Half of the polar angle measured from -z, in units of pi.
  double half_angle_from_south_over_pi() const { return (kPi - theta) / (2 * kPi); }
};

/// Coarse grid of step pi/200 over [0, pi], then golden-section refinement
/// around the best grid point until the bracket is below 1e-4 pi.
ThetaOptimum maximize_theta(const GroundSpace& ground, Character character, double phi,
                            const HilbertSpace& space);

struct OrderVector {
  std::array<double, 3> n{};
  double modulus() const;
};

/// (1/Ns) sum_k w_k <R_k s_k R_k^-1> with R_k = exp(-i s_kz (phi_k + phi)) and
/// w_k = 1 (F) or (-1)^k (AF).
OrderVector order_vector(const StateVector& state, Character character, double phi);

}  // namespace spinring
