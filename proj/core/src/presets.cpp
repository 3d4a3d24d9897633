#include "spinring/presets.hpp"

#include <stdexcept>
#include <string>

namespace spinring {

namespace {

constexpr std::string_view kFig2 = R"(# Spectra of the Ising rings in both twisted geometries
name = fig2
model.family = A, B
model.axis = X
model.J = 1
ring.N = 6, 8, 10
ring.s = 1/2
outputs = spectrum, delta
)";

constexpr std::string_view kFig3 = R"(# GHZ-like overlap and pairwise concurrence at zero field versus ring size
name = fig3
model.family = B
model.axis = X
model.J = 1
ring.N = 4, 6, 8, 10
ring.s = 1/2
trial.character = AF
trial.phi = pi/2
outputs = delta, overlap, concurrence, tangle, order
)";

constexpr std::string_view kFig4a = R"(# Hexagonal ring, radial Ising coupling, in-plane field through a bond midpoint
name = fig4a
model.family = A
model.axis = X
model.J = -1
ring.N = 6
ring.s = 1/2
field.direction = x
field.azimuth = bisector
field.start = 0
field.stop = 1.2
field.steps = 121
trial.character = F
trial.phi = 0
outputs = delta, concurrence, tangle, purity
)";

constexpr std::string_view kFig4b = R"(# Octagonal ring, radial Ising coupling, in-plane field through a bond midpoint
name = fig4b
model.family = A
model.axis = X
model.J = -1
ring.N = 8
ring.s = 1/2
field.direction = x
field.azimuth = bisector
field.start = 0
field.stop = 0.8
field.steps = 121
trial.character = F
trial.phi = 0
outputs = delta, concurrence, tangle, purity
)";

constexpr std::string_view kFig5 = R"(# Octagonal ring, bond-aligned Ising coupling, field along the ring axis
name = fig5
model.family = B
model.axis = X
model.J = 1
ring.N = 8
ring.s = 1/2
field.direction = z
field.start = 0
field.stop = 0.8
field.steps = 121
trial.character = AF
trial.phi = pi/2
outputs = delta, concurrence, tangle, purity
)";

constexpr std::string_view kTable1 = R"(# Coefficient ratios of flipped-complement pairs in the symmetry-adapted ground state
name = table1
model.family = A, B
model.axis = X, Y
model.J = 1, -1
ring.N = 6, 8
ring.s = 1/2
outputs = reduced, ratios
)";

constexpr std::string_view kTable2A = R"(# Tilted-trial overlap, radial Ising coupling, in-plane field
name = table2-modelA
model.family = A
model.axis = X
model.J = -1
ring.N = 8
ring.s = 1/2
field.direction = x
field.azimuth = bisector
field.values = 0.2, 0.225, 0.25, 0.275, 0.3
trial.character = F
trial.phi = 0
outputs = delta, overlap, theta
)";

constexpr std::string_view kTable2B = R"(# Tilted-trial overlap, bond-aligned Ising coupling, axial field
name = table2-modelB
model.family = B
model.axis = X
model.J = 1
ring.N = 8
ring.s = 1/2
field.direction = z
field.values = 0, 0.1, 0.2, 0.3, 0.4
trial.character = AF
trial.phi = pi/2
outputs = delta, overlap, theta
)";

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all{
      {"fig2", "spectra and ground-doublet splittings of both twisted Ising rings, N = 6, 8, 10", kFig2},
      {"fig3", "zero-field GHZ overlap, concurrence and order vector versus N, bond-aligned model", kFig3},
      {"fig4a", "N = 6 radial model in an in-plane field: concurrence, tangle, block purity", kFig4a},
      {"fig4b", "N = 8 radial model in an in-plane field: concurrence, tangle, block purity", kFig4b},
      {"fig5", "N = 8 bond-aligned model in an axial field: block purity, tangle, concurrence", kFig5},
      {"table1", "coefficient ratios of the symmetry-adapted ground state, N = 6, 8", kTable1},
      {"table2-modelA", "tilted-trial overlap and optimal tilt, radial model, N = 8", kTable2A},
      {"table2-modelB", "tilted-trial overlap and optimal tilt, bond-aligned model, N = 8", kTable2B},
  };
  return all;
}

std::vector<std::string_view> list_presets() {
  std::vector<std::string_view> names;
  for (const auto& p : presets()) names.push_back(p.name);
  return names;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace spinring
