#include "spinring/trial_states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinring/ring_models.hpp"

namespace spinring {

std::string_view to_string(Character character) { return character == Character::F ? "F" : "AF"; }

Character parse_character(std::string_view text) {
  if (text == "F" || text == "f") return Character::F;
  if (text == "AF" || text == "af") return Character::AF;
  throw std::invalid_argument("unknown trial character '" + std::string(text) + "' (expected F, AF)");
}

namespace {

Vector top_state(int d) {
  Vector v = Vector::Zero(d);
  v(0) = 1.0;
  return v;
}

double stagger(Character character, int q) { return character == Character::AF && q % 2 == 0 ? -1.0 : 1.0; }

// Local factor of gamma_0 at site q.
Vector gamma_site(const TrialSpec& spec, int q, const HilbertSpace& space) {
  const auto spin = space.spin();
  const Vector tilted = local_rotation(Axis::Y, stagger(spec.character, q) * spec.theta, spin).matrix *
                        top_state(space.local_dim());
  return local_rotation(Axis::Z, site_angle(q, space.sites()) + spec.phi, spin).matrix * tilted;
}

}  // namespace

StateVector alpha_state(Character character, Axis axis, const HilbertSpace& space) {
  if (axis == Axis::Y) throw std::invalid_argument("alpha_state supports axes x and z");
  const int d = space.local_dim();
  std::vector<Vector> sites;
  for (int q = 1; q <= space.sites(); ++q) {
    const bool up = stagger(character, q) > 0;
    if (axis == Axis::Z) {
      Vector v = Vector::Zero(d);
      v(up ? 0 : d - 1) = 1.0;
      sites.push_back(v);
    } else {
      sites.push_back(local_rotation(Axis::Y, up ? kPi / 2 : -kPi / 2, space.spin()).matrix * top_state(d));
    }
  }
  return StateVector::product(space, sites);
}

StateVector gamma_state(const TrialSpec& spec, const HilbertSpace& space) {
  if (spec.branch != 0 && spec.branch != 1) throw std::invalid_argument("branch must be 0 or 1");
  if (!std::isfinite(spec.theta) || !std::isfinite(spec.phi)) throw std::invalid_argument("angles must be finite");
  const int d = space.local_dim();
  std::vector<Vector> sites;
  for (int q = 1; q <= space.sites(); ++q) {
    Vector v = gamma_site(spec, q, space);
    if (spec.branch == 1) {
      for (int m = 1; m < d; m += 2) v(m) = -v(m);
    }
    sites.push_back(std::move(v));
  }
  return StateVector::product(space, sites);
}

StateVector beta_state(const TrialSpec& spec, const HilbertSpace& space) {
  TrialSpec in_plane = spec;
  in_plane.theta = kPi / 2;
  return gamma_state(in_plane, space);
}

StateVector tilted_trial(Character character, double theta, double phi, const HilbertSpace& space) {
  const auto g0 = gamma_state({character, phi, theta, 0}, space);
  const auto g1 = gamma_state({character, phi, theta, 1}, space);
  return StateVector::normalized(space, g0.amplitudes() + g1.amplitudes());
}

StateVector ghz_trial(Character character, double phi, const HilbertSpace& space) {
  return tilted_trial(character, kPi / 2, phi, space);
}

double overlap_p(const GroundSpace& ground, const StateVector& trial) {
  if (!(ground.space == trial.space())) throw std::invalid_argument("overlap_p: dimension mismatch");
  return (ground.basis.adjoint() * trial.amplitudes()).squaredNorm();
}

StateVector representative_state(const GroundSpace& ground, const StateVector& reference) {
  if (!(ground.space == reference.space())) throw std::invalid_argument("representative_state: dimension mismatch");
  const Vector proj = ground.project(reference.amplitudes());
  if (proj.norm() < 1e-8) return StateVector::normalized(ground.space, ground.basis.col(0));
  return StateVector::normalized(ground.space, proj);
}

ThetaOptimum maximize_theta(const GroundSpace& ground, Character character, double phi, const HilbertSpace& space) {
  const auto p_at = [&](double theta) { return overlap_p(ground, tilted_trial(character, theta, phi, space)); };

  constexpr int kGrid = 200;
  const double step = kPi / kGrid;
  int best = 0;
  double best_p = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double p = p_at(i * step);
    if (p > best_p) {
      best_p = p;
      best = i;
    }
  }

  double lo = std::max(0.0, (best - 1) * step);
  double hi = std::min(kPi, (best + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = p_at(x1);
  double f2 = p_at(x2);
  while (hi - lo > 1e-4 * kPi) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = p_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = p_at(x2);
    }
  }
  ThetaOptimum out{0.5 * (lo + hi), 0.0};
  out.p = p_at(out.theta);
  if (best_p > out.p) out = {best * step, best_p};
  return out;
}

double OrderVector::modulus() const { return std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]); }

OrderVector order_vector(const StateVector& state, Character character, double phi) {
  const auto& space = state.space();
  const auto spin = space.spin();
  const std::array<Matrix, 3> s{single_spin_operator(Axis::X, spin).matrix, single_spin_operator(Axis::Y, spin).matrix,
                                single_spin_operator(Axis::Z, spin).matrix};
  OrderVector out;
  const int n_sites = space.sites();
  for (int k = 1; k <= n_sites; ++k) {
    const Matrix r = local_rotation(Axis::Z, site_angle(k, n_sites) + phi, spin).matrix;
    const double w = character == Character::AF ? (k % 2 == 0 ? 1.0 : -1.0) : 1.0;
    for (int a = 0; a < 3; ++a) {
      LocalOperator unwound{r * s[static_cast<std::size_t>(a)] * r.adjoint(), "custom"};
      const auto op = embed_site_operator(unwound, k, space);
      out.n[static_cast<std::size_t>(a)] += w * state.expectation(op).real();
    }
  }
  for (auto& c : out.n) c /= n_sites * spin.value();
  return out;
}

}  // namespace spinring
