#include "spinring/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "spinring/eigensolver.hpp"
#include "spinring/entanglement.hpp"
#include "spinring/symmetry_subspace.hpp"

namespace spinring {

Character default_character(const ModelVariant& model) {
  const double j = model.jxx != 0.0 ? model.jxx : model.jyy;
  return j < 0.0 ? Character::F : Character::AF;
}

double default_phi(const ModelVariant& model) {
  const bool along_y = model.ising_axis() == IsingAxis::Y;
  switch (model.family) {
    case Family::A: return along_y ? kPi / 2 : 0.0;
    case Family::B: return along_y ? kPi : kPi / 2;
    default: return 0.0;
  }
}

std::vector<ScenarioCase> expand_cases(const Scenario& scenario) {
  std::vector<ModelVariant> models;
  for (Family f : scenario.families) {
    if (scenario.explicit_couplings) {
      models.push_back({f, scenario.explicit_couplings->first, scenario.explicit_couplings->second});
      continue;
    }
    for (IsingAxis a : scenario.axes) {
      for (double j : scenario.couplings) {
        if (f == Family::XY || a == IsingAxis::None) models.push_back({f, j, j});
        else models.push_back(ModelVariant::ising(f, a, j));
      }
    }
  }
  std::vector<ScenarioCase> cases;
  for (const auto& m : models) {
    for (int n : scenario.sizes) {
      ScenarioCase c;
      c.ring.sites = n;
      c.ring.spin = scenario.spin;
      c.ring.model = m;
      c.ring.field = {scenario.direction, 0.0, scenario.azimuth.resolve(n)};
      c.character = scenario.character.value_or(default_character(m));
      c.phi = scenario.phi.value_or(default_phi(m));
      c.ring.validate();
      cases.push_back(c);
    }
  }
  return cases;
}

int default_thread_count() {
  if (const char* env = std::getenv("SPINRING_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Layout {
  std::vector<std::string> columns;
  int max_distance = 0;
};

Layout make_layout(const Scenario& sc) {
  Layout l;
  l.columns = {"family", "jxx", "jyy", "N", "s", "field", "field_azimuth", "b"};
  for (int n : sc.sizes) l.max_distance = std::max(l.max_distance, n / 2);
  if (sc.wants(Output::Spectrum)) l.columns.insert(l.columns.end(), {"index", "energy"});
  if (sc.wants(Output::Purity)) l.columns.insert(l.columns.end(), {"N1", "purity"});
  if (sc.wants(Output::Delta)) l.columns.insert(l.columns.end(), {"E0", "E1", "delta", "ground_dim"});
  if (sc.wants(Output::Overlap) || sc.wants(Output::Theta)) {
    l.columns.insert(l.columns.end(), {"trial_character", "trial_phi"});
  }
  if (sc.wants(Output::Overlap)) l.columns.push_back("p");
  if (sc.wants(Output::Theta)) {
    l.columns.insert(l.columns.end(),
                     {"p_max", "theta_M_over_pi", "theta_M_half_over_pi", "theta_M_half_south_over_pi"});
  }
  if (sc.wants(Output::Concurrence)) {
    l.columns.push_back("concurrence_nn");
    for (int d = 2; d <= l.max_distance; ++d) l.columns.push_back("concurrence_d" + std::to_string(d));
  }
  if (sc.wants(Output::Tangle)) l.columns.insert(l.columns.end(), {"tangle", "tangle_min"});
  if (sc.wants(Output::Order)) l.columns.insert(l.columns.end(), {"n_x", "n_y", "n_z", "n_mod"});
  if (sc.wants(Output::Reduced)) {
    l.columns.insert(l.columns.end(), {"reduced_dim", "reduced_E0", "full_E0", "reduced_error", "pair_classes",
                                       "nonzero_pair_classes"});
  }
  if (sc.wants(Output::Ratios)) {
    l.columns.insert(l.columns.end(), {"ratio_expected", "ratio_min", "ratio_max", "ratio_max_dev", "ratio_entries",
                                       "ratio_skipped"});
  }
  return l;
}

using Row = std::vector<Cell>;

std::vector<Row> evaluate_point(const Scenario& sc, const Layout& layout, const ScenarioCase& c, double b) {
  RingConfig ring = c.ring;
  ring.field.magnitude = b;
  const auto space = ring.space();
  const auto h = build_hamiltonian(ring);

  const bool needs_state = sc.wants(Output::Overlap) || sc.wants(Output::Theta) || sc.wants(Output::Concurrence) ||
                           sc.wants(Output::Tangle) || sc.wants(Output::Purity) || sc.wants(Output::Order) ||
                           sc.wants(Output::Delta) || sc.wants(Output::Ratios) || sc.wants(Output::Reduced);
  DiagonalizeOptions opts;
  opts.vectors = needs_state;
  const auto spectrum = diagonalize(h, opts);

  Row base(layout.columns.size());
  auto put = [&](Row& row, std::string_view name, Cell value) {
    const auto it = std::find(layout.columns.begin(), layout.columns.end(), name);
    row[static_cast<std::size_t>(it - layout.columns.begin())] = std::move(value);
  };
  put(base, "family", std::string(to_string(ring.model.family)));
  put(base, "jxx", ring.model.jxx);
  put(base, "jyy", ring.model.jyy);
  put(base, "N", std::int64_t{ring.sites});
  put(base, "s", ring.spin.value());
  put(base, "field", std::string(to_string(ring.field.direction)));
  put(base, "field_azimuth", ring.field.direction == FieldDirection::X ? Cell{ring.field.azimuth} : Cell{});
  put(base, "b", b);

  std::optional<GroundSpace> ground;
  std::optional<StateVector> representative;
  if (needs_state) {
    ground = ground_space(spectrum);
    representative = representative_state(*ground, ghz_trial(c.character, c.phi, space));
  }

  if (sc.wants(Output::Delta)) {
    put(base, "E0", spectrum.eigenvalues(0));
    put(base, "E1", spectrum.size() > 1 ? Cell{spectrum.eigenvalues(1)} : Cell{});
    put(base, "delta", spectrum.delta);
    put(base, "ground_dim", std::int64_t{ground->dimension()});
  }
  if (sc.wants(Output::Overlap) || sc.wants(Output::Theta)) {
    put(base, "trial_character", std::string(to_string(c.character)));
    put(base, "trial_phi", c.phi);
  }
  if (sc.wants(Output::Overlap)) put(base, "p", overlap_p(*ground, ghz_trial(c.character, c.phi, space)));
  if (sc.wants(Output::Theta)) {
    const auto opt = maximize_theta(*ground, c.character, c.phi, space);
    put(base, "p_max", opt.p);
    put(base, "theta_M_over_pi", opt.theta_over_pi());
    put(base, "theta_M_half_over_pi", opt.half_angle_over_pi());
    put(base, "theta_M_half_south_over_pi", opt.half_angle_from_south_over_pi());
  }
  Eigen::MatrixXd conc;
  if (sc.wants(Output::Concurrence) || sc.wants(Output::Tangle)) conc = concurrence_matrix(*representative);
  if (sc.wants(Output::Concurrence)) {
    for (int d = 1; d <= layout.max_distance; ++d) {
      const std::string name = d == 1 ? "concurrence_nn" : "concurrence_d" + std::to_string(d);
      put(base, name, d <= ring.sites / 2 ? Cell{conc(0, d % ring.sites)} : Cell{});
    }
  }
  if (sc.wants(Output::Tangle)) {
    double tmin = 0.0;
    for (int k = 1; k <= ring.sites; ++k) {
      const double t = residual_tangle(*representative, k, conc);
      if (k == 1) put(base, "tangle", t);
      tmin = k == 1 ? t : std::min(tmin, t);
    }
    put(base, "tangle_min", tmin);
  }
  if (sc.wants(Output::Order)) {
    const auto n = order_vector(*representative, c.character, c.phi);
    put(base, "n_x", n.n[0]);
    put(base, "n_y", n.n[1]);
    put(base, "n_z", n.n[2]);
    put(base, "n_mod", n.modulus());
  }
  if (sc.wants(Output::Reduced) || sc.wants(Output::Ratios)) {
    const auto reduced = reduced_ground_state(h);
    const auto report = coefficient_ratio_check(reduced, ring.sites);
    if (sc.wants(Output::Reduced)) {
      put(base, "reduced_dim", static_cast<std::int64_t>(reduced.dimension()));
      put(base, "reduced_E0", reduced.ground_energy);
      put(base, "full_E0", spectrum.eigenvalues(0));
      put(base, "reduced_error", std::abs(reduced.ground_energy - spectrum.eigenvalues(0)));
      put(base, "pair_classes", std::int64_t{report.pair_classes});
      put(base, "nonzero_pair_classes", std::int64_t{report.nonzero_pair_classes});
    }
    if (sc.wants(Output::Ratios)) {
      const int expected = tabulated_ratio(ring.model.family, ring.model.ising_axis(),
                                           ring.model.jxx != 0.0 ? ring.model.jxx : ring.model.jyy);
      put(base, "ratio_expected", std::int64_t{expected});
      if (!report.entries.empty()) {
        double lo = report.entries.front().ratio.real();
        double hi = lo;
        for (const auto& e : report.entries) {
          lo = std::min(lo, e.ratio.real());
          hi = std::max(hi, e.ratio.real());
        }
        put(base, "ratio_min", lo);
        put(base, "ratio_max", hi);
        put(base, "ratio_max_dev", report.max_deviation(expected));
      }
      put(base, "ratio_entries", static_cast<std::int64_t>(report.entries.size()));
      put(base, "ratio_skipped", std::int64_t{report.skipped});
    }
  }

  std::vector<Row> rows;
  if (sc.wants(Output::Spectrum)) {
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      Row r = base;
      put(r, "index", static_cast<std::int64_t>(i));
      put(r, "energy", spectrum.eigenvalues(static_cast<Eigen::Index>(i)));
      rows.push_back(std::move(r));
    }
  } else if (sc.wants(Output::Purity)) {
    const auto profile = block_purity_profile(*representative);
    for (std::size_t i = 0; i < profile.size(); ++i) {
      Row r = base;
      put(r, "N1", static_cast<std::int64_t>(i + 1));
      put(r, "purity", profile[i]);
      rows.push_back(std::move(r));
    }
  } else {
    rows.push_back(std::move(base));
  }
  return rows;
}

}  // namespace

ResultTable run_scenario(const Scenario& scenario, const RunOptions& options) {
  const auto cases = expand_cases(scenario);
  const auto layout = make_layout(scenario);

  struct Task {
    const ScenarioCase* c;
    double b;
  };
  std::vector<Task> tasks;
  for (const auto& c : cases) {
    for (double b : scenario.field_values) tasks.push_back({&c, b});
  }

  std::vector<std::vector<Row>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = evaluate_point(scenario, layout, *tasks[i].c, tasks[i].b);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::max(1, options.threads));
  if (n_threads == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(n_threads, tasks.size()); ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ResultTable table;
  table.columns = layout.columns;
  for (auto& r : results) {
    for (auto& row : r) table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace spinring
