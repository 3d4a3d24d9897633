#pragma once

#include <vector>

#include "spinring/config.hpp"
#include "spinring/results_io.hpp"

namespace spinring {

/// One model instance of a scenario, before the field sweep.
struct ScenarioCase {
  RingConfig ring;  // field magnitude is filled in per sweep point
  Character character = Character::F;
  double phi = 0.0;
};

/// Trial character and phase matched to the zero-field ground doublet:
/// F for ferromagnetic (negative) coupling, AF otherwise; phi = 0 / pi/2 for
/// model A along X / Y and pi/2 / pi for model B along X / Y.
Character default_character(const ModelVariant& model);
double default_phi(const ModelVariant& model);

/// Cartesian product family x axis x coupling x N, in that nesting order.
std::vector<ScenarioCase> expand_cases(const Scenario& scenario);

struct RunOptions {
  int threads = 1;
};

/// SPINRING_THREADS if set to a positive integer, else the hardware
/// concurrency (at least 1).
int default_thread_count();

/// Evaluates every (case, b) point. Rows are ordered by case, then b
/// ascending, independent of the thread count. Throws NumericalError when an
/// eigen decomposition fails its checks.
ResultTable run_scenario(const Scenario& scenario, const RunOptions& options = {});

}  // namespace spinring
