#include "spinring/ring_models.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinring {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::Collinear: return "collinear";
    case Family::XY: return "XY";
  }
  return "?";
}

std::string_view to_string(IsingAxis axis) {
  switch (axis) {
    case IsingAxis::X: return "X";
    case IsingAxis::Y: return "Y";
    case IsingAxis::None: return "none";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "collinear") return Family::Collinear;
  if (text == "XY" || text == "xy") return Family::XY;
  throw std::invalid_argument("unknown model family '" + std::string(text) + "' (expected A, B, collinear, XY)");
}

IsingAxis parse_ising_axis(std::string_view text) {
  if (text == "X" || text == "x") return IsingAxis::X;
  if (text == "Y" || text == "y") return IsingAxis::Y;
  if (text == "none") return IsingAxis::None;
  throw std::invalid_argument("unknown Ising axis '" + std::string(text) + "' (expected X, Y, none)");
}

ModelVariant ModelVariant::ising(Family family, IsingAxis axis, double coupling) {
  switch (axis) {
    case IsingAxis::X: return {family, coupling, 0.0};
    case IsingAxis::Y: return {family, 0.0, coupling};
    case IsingAxis::None: break;
  }
  throw std::invalid_argument("Ising limit needs axis X or Y");
}

ModelVariant ModelVariant::xy(double coupling) { return {Family::XY, coupling, coupling}; }

IsingAxis ModelVariant::ising_axis() const {
  if (jyy == 0.0 && jxx != 0.0) return IsingAxis::X;
  if (jxx == 0.0 && jyy != 0.0) return IsingAxis::Y;
  return IsingAxis::None;
}

std::string_view to_string(FieldDirection direction) {
  switch (direction) {
    case FieldDirection::None: return "none";
    case FieldDirection::X: return "x";
    case FieldDirection::Z: return "z";
  }
  return "?";
}

FieldDirection parse_field_direction(std::string_view text) {
  if (text == "none") return FieldDirection::None;
  if (text == "x" || text == "X") return FieldDirection::X;
  if (text == "z" || text == "Z") return FieldDirection::Z;
  throw std::invalid_argument("unsupported field direction '" + std::string(text) + "' (expected none, x, z)");
}

void RingConfig::validate() const {
  if (sites < 3) throw std::invalid_argument("ring needs N >= 3, got " + std::to_string(sites));
  if (sites > kMaxSites) {
    throw std::invalid_argument("N = " + std::to_string(sites) + " exceeds the dense limit " + std::to_string(kMaxSites));
  }
  if (!std::isfinite(model.jxx) || !std::isfinite(model.jyy)) throw std::invalid_argument("couplings must be finite");
  if (model.family == Family::XY && model.jxx != model.jyy) {
    throw std::invalid_argument("XY model needs jxx == jyy");
  }
  if (!std::isfinite(field.magnitude) || !std::isfinite(field.azimuth)) {
    throw std::invalid_argument("field must be finite");
  }
  if (field.direction != FieldDirection::None && field.magnitude < 0.0) {
    throw std::invalid_argument("field magnitude must be >= 0");
  }
}

double site_angle(int k, int sites) { return 2.0 * (k - 1) * kPi / sites; }

double bond_angle(int k, int sites) { return kPi / 2 + (2.0 * k - 1) * kPi / sites; }

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;

struct InPlaneOps {
  Matrix x;
  Matrix y;
};

InPlaneOps in_plane_ops(SpinMagnitude spin) {
  return {single_spin_operator(Axis::X, spin).matrix, single_spin_operator(Axis::Y, spin).matrix};
}

// Adds v_k^T M v_l with v = (s_x'', s_y'') taken in frames rotated by ak, al.
void add_frame_bond(OperatorAccumulator& acc, const InPlaneOps& ops, const BondTensor& t, int k, int l, double ak,
                    double al) {
  const Mat2 local{{{t.jxx, t.jxy + t.dxy}, {t.jxy - t.dxy, t.jyy}}};
  // primed = A (x, y) with A = [[c, s], [-s, c]]
  const Mat2 a_k{{{std::cos(ak), std::sin(ak)}, {-std::sin(ak), std::cos(ak)}}};
  const Mat2 a_l{{{std::cos(al), std::sin(al)}, {-std::sin(al), std::cos(al)}}};
  const std::array<const Matrix*, 2> comp{&ops.x, &ops.y};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      double g = 0.0;
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) g += a_k[p][a] * local[p][q] * a_l[q][b];
      if (g != 0.0) acc.add_bond(*comp[a], k, *comp[b], l, g);
    }
  }
}

int next_site(int k, int sites) { return k == sites ? 1 : k + 1; }

void require_family(const RingConfig& cfg, Family family) {
  if (cfg.model.family != family) {
    throw std::invalid_argument("expected model family " + std::string(to_string(family)) + ", got " +
                                std::string(to_string(cfg.model.family)));
  }
}

void require_ring(const HilbertSpace& space) {
  if (space.sites() < 3) throw std::invalid_argument("ring needs N >= 3, got " + std::to_string(space.sites()));
}

OperatorMatrix z_rotation_product(const HilbertSpace& space, const std::vector<double>& angles) {
  std::vector<SiteRotation> rot;
  rot.reserve(angles.size());
  for (double a : angles) rot.push_back({Axis::Z, a});
  return product_rotation(rot, space);
}

}  // namespace

OperatorMatrix build_in_site_frames(const BondTensor& tensor, const HilbertSpace& space) {
  require_ring(space);
  const int n = space.sites();
  const auto ops = in_plane_ops(space.spin());
  OperatorAccumulator acc(space);
  for (int k = 1; k <= n; ++k) {
    const int l = next_site(k, n);
    add_frame_bond(acc, ops, tensor, k, l, site_angle(k, n), site_angle(l, n));
  }
  return std::move(acc).build();
}

OperatorMatrix build_in_bond_frames(const BondTensor& tensor, const HilbertSpace& space) {
  require_ring(space);
  const int n = space.sites();
  const auto ops = in_plane_ops(space.spin());
  OperatorAccumulator acc(space);
  for (int k = 1; k <= n; ++k) {
    const double v = bond_angle(k, n);
    add_frame_bond(acc, ops, tensor, k, next_site(k, n), v, v);
  }
  return std::move(acc).build();
}

OperatorMatrix build_model_a(const RingConfig& cfg) {
  require_family(cfg, Family::A);
  cfg.validate();
  return build_in_site_frames({cfg.model.jxx, cfg.model.jyy, 0.0, 0.0}, cfg.space());
}

OperatorMatrix build_model_b(const RingConfig& cfg) {
  require_family(cfg, Family::B);
  cfg.validate();
  return build_in_bond_frames({cfg.model.jxx, cfg.model.jyy, 0.0, 0.0}, cfg.space());
}

OperatorMatrix build_collinear(const RingConfig& cfg) {
  if (cfg.model.family != Family::Collinear && cfg.model.family != Family::XY) {
    throw std::invalid_argument("build_collinear needs family collinear or XY");
  }
  cfg.validate();
  const auto space = cfg.space();
  const auto ops = in_plane_ops(cfg.spin);
  OperatorAccumulator acc(space);
  for (int k = 1; k <= cfg.sites; ++k) {
    const int l = next_site(k, cfg.sites);
    if (cfg.model.jxx != 0.0) acc.add_bond(ops.x, k, ops.x, l, cfg.model.jxx);
    if (cfg.model.jyy != 0.0) acc.add_bond(ops.y, k, ops.y, l, cfg.model.jyy);
  }
  return std::move(acc).build();
}

OperatorMatrix build_exchange(const RingConfig& cfg) {
  switch (cfg.model.family) {
    case Family::A: return build_model_a(cfg);
    case Family::B: return build_model_b(cfg);
    case Family::Collinear:
    case Family::XY: return build_collinear(cfg);
  }
  throw std::invalid_argument("invalid model family");
}

OperatorMatrix build_zeeman(const Field& field, const HilbertSpace& space) {
  if (!std::isfinite(field.magnitude) || !std::isfinite(field.azimuth)) {
    throw std::invalid_argument("field must be finite");
  }
  OperatorAccumulator acc(space);
  if (field.direction == FieldDirection::None || field.magnitude == 0.0) return std::move(acc).build();
  const auto spin = space.spin();
  Matrix local;
  if (field.direction == FieldDirection::Z) {
    local = single_spin_operator(Axis::Z, spin).matrix;
  } else {
    local = std::cos(field.azimuth) * single_spin_operator(Axis::X, spin).matrix +
            std::sin(field.azimuth) * single_spin_operator(Axis::Y, spin).matrix;
  }
  for (int k = 1; k <= space.sites(); ++k) acc.add_site(local, k, field.magnitude);
  return std::move(acc).build();
}

OperatorMatrix build_hamiltonian(const RingConfig& cfg) {
  cfg.validate();
  auto h = build_exchange(cfg);
  if (cfg.field.direction != FieldDirection::None) h += build_zeeman(cfg.field, cfg.space());
  return h;
}

FrameTensors general_frame_coefficients(const RingConfig& cfg) {
  cfg.validate();
  const int n = cfg.sites;
  const double jx = cfg.model.jxx;
  const double jy = cfg.model.jyy;
  FrameTensors out;
  out.bonds.reserve(static_cast<std::size_t>(n));
  if (cfg.model.family == Family::A) {
    for (int k = 1; k <= n; ++k) {
      const double p = site_angle(k, n);
      const double q = site_angle(k, n) + 2.0 * kPi / n;
      out.bonds.push_back({jx * std::cos(p) * std::cos(q) + jy * std::sin(p) * std::sin(q),
                           jy * std::cos(p) * std::cos(q) + jx * std::sin(p) * std::sin(q),
                           0.5 * (jx - jy) * std::sin(q + p), 0.5 * (jx + jy) * std::sin(q - p)});
    }
  } else if (cfg.model.family == Family::B) {
    for (int k = 1; k <= n; ++k) {
      const double c = std::cos(bond_angle(k, n));
      const double s = std::sin(bond_angle(k, n));
      out.bonds.push_back({jx * c * c + jy * s * s, jy * c * c + jx * s * s, (jx - jy) * c * s, 0.0});
    }
  } else {
    throw std::invalid_argument("general-frame tensors are defined for families A and B");
  }
  return out;
}

OperatorMatrix from_frame_tensors(const FrameTensors& tensors, const HilbertSpace& space) {
  require_ring(space);
  const int n = space.sites();
  if (tensors.bonds.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " bond tensors, got " +
                                std::to_string(tensors.bonds.size()));
  }
  const auto ops = in_plane_ops(space.spin());
  OperatorAccumulator acc(space);
  for (int k = 1; k <= n; ++k) add_frame_bond(acc, ops, tensors.bonds[static_cast<std::size_t>(k - 1)], k,
                                              next_site(k, n), 0.0, 0.0);
  return std::move(acc).build();
}

BondTensor a_to_b_frame(double jxx_a, double jyy_a, int sites) {
  if (sites < 3) throw std::invalid_argument("ring needs N >= 3");
  const double c = std::cos(kPi / sites);
  const double s = std::sin(kPi / sites);
  return {-jxx_a * s * s + jyy_a * c * c, jxx_a * c * c - jyy_a * s * s, 0.0, (jxx_a + jyy_a) * c * s};
}

BondTensor b_to_a_frame(double jxx_b, double jyy_b, int sites) {
  auto t = a_to_b_frame(jxx_b, jyy_b, sites);
  t.dxy = -t.dxy;
  return t;
}

OperatorMatrix cyclic_shift(const HilbertSpace& space) {
  const auto dim = space.dim();
  const int n = space.sites();
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<int> shifted(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const auto d = space.digits(idx);
    for (int k = 0; k < n; ++k) shifted[static_cast<std::size_t>((k + 1) % n)] = d[static_cast<std::size_t>(k)];
    p(static_cast<Eigen::Index>(space.index(shifted)), static_cast<Eigen::Index>(idx)) = 1.0;
  }
  return {space, std::move(p)};
}

std::vector<NamedOperator> symmetry_generators(const RingConfig& cfg) {
  cfg.validate();
  const auto space = cfg.space();
  const bool in_plane_field = cfg.field.direction == FieldDirection::X && cfg.field.magnitude != 0.0;
  const bool any_field = cfg.field.direction != FieldDirection::None && cfg.field.magnitude != 0.0;
  std::vector<NamedOperator> out;
  if (!in_plane_field) {
    out.push_back({"sigma_h", z_rotation_product(space, std::vector<double>(static_cast<std::size_t>(cfg.sites), kPi))});
  }
  const bool twisted = cfg.model.family == Family::A || cfg.model.family == Family::B;
  if (twisted && !in_plane_field) {
    const auto twist = z_rotation_product(space, std::vector<double>(static_cast<std::size_t>(cfg.sites),
                                                                     2.0 * kPi / cfg.sites));
    out.push_back({"C_n", cyclic_shift(space) * twist});
  }
  if (!twisted && !any_field) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      std::vector<SiteRotation> rot(static_cast<std::size_t>(cfg.sites), SiteRotation{a, kPi});
      out.push_back({"R_" + std::string(to_string(a)), product_rotation(rot, space)});
    }
  }
  return out;
}

OperatorMatrix equivalence_unitary(IsingAxis xi, IsingAxis xi_prime, const HilbertSpace& space) {
  if (xi == IsingAxis::None || xi_prime == IsingAxis::None) {
    throw std::invalid_argument("equivalence_unitary needs axes X or Y");
  }
  double offset = 0.0;
  if (xi == IsingAxis::Y && xi_prime == IsingAxis::X) offset = kPi / 2;
  if (xi == IsingAxis::X && xi_prime == IsingAxis::Y) offset = -kPi / 2;
  std::vector<double> angles;
  for (int k = 1; k <= space.sites(); ++k) angles.push_back(site_angle(k, space.sites()) + offset);
  return z_rotation_product(space, angles);
}

OperatorMatrix quarter_turn_unitary(const HilbertSpace& space) {
  return z_rotation_product(space, std::vector<double>(static_cast<std::size_t>(space.sites()), kPi / 2));
}

OperatorMatrix staggered_flip_unitary(const HilbertSpace& space) {
  std::vector<double> angles;
  for (int k = 1; k <= space.sites(); ++k) angles.push_back(k % 2 == 0 ? kPi : 0.0);
  return z_rotation_product(space, angles);
}

}  // namespace spinring
