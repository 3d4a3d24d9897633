#include "spinring/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace spinring {

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "name",         "model.family", "model.axis",  "model.J",     "model.Jxx",   "model.Jyy",
      "ring.N",       "ring.s",       "field.direction", "field.azimuth", "field.start", "field.stop",
      "field.steps",  "field.values", "trial.character", "trial.phi",   "outputs"};
  return keys;
}

double parse_plain(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return v;
}

template <typename F>
auto with_key(const std::string& key, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

ConfigFile ConfigFile::parse(std::string_view text, std::string source) {
  ConfigFile cfg;
  cfg.source_ = std::move(source);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = cfg.source_ + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ConfigError("", where + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("", where + ": empty key");
    if (known_keys().count(key) == 0) throw ConfigError(key, where + ": unknown key");
    if (cfg.entries_.count(key) != 0) throw ConfigError(key, where + ": duplicate key");
    cfg.entries_[key] = value;
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

const std::string& ConfigFile::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(key, "missing required key");
  return it->second;
}

std::vector<std::string> ConfigFile::list(const std::string& key) const {
  std::vector<std::string> out;
  std::string_view rest = get(key);
  while (true) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    if (item.empty()) throw ConfigError(key, "empty list item");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::vector<std::string> ConfigFile::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

void ConfigFile::set(const std::string& key, std::string value) {
  if (known_keys().count(key) == 0) throw ConfigError(key, "unknown key");
  entries_[key] = std::move(value);
}

double parse_number(std::string_view text) {
  text = trim(text);
  const auto pi = text.find("pi");
  double v = 0.0;
  if (pi == std::string_view::npos) {
    v = parse_plain(text);
  } else {
    auto coeff = trim(text.substr(0, pi));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    double c = 1.0;
    if (coeff == "-") c = -1.0;
    else if (coeff == "+") c = 1.0;
    else if (!coeff.empty()) c = parse_plain(coeff);
    double divisor = 1.0;
    const auto tail = trim(text.substr(pi + 2));
    if (!tail.empty()) {
      if (tail.front() != '/') throw std::invalid_argument("not a number: '" + std::string(text) + "'");
      divisor = parse_plain(trim(tail.substr(1)));
      if (divisor == 0.0) throw std::invalid_argument("division by zero in '" + std::string(text) + "'");
    }
    v = c * kPi / divisor;
  }
  if (!std::isfinite(v)) throw std::invalid_argument("not a finite number: '" + std::string(text) + "'");
  return v;
}

std::string_view to_string(Output output) {
  switch (output) {
    case Output::Spectrum: return "spectrum";
    case Output::Delta: return "delta";
    case Output::Overlap: return "overlap";
    case Output::Theta: return "theta";
    case Output::Concurrence: return "concurrence";
    case Output::Tangle: return "tangle";
    case Output::Purity: return "purity";
    case Output::Order: return "order";
    case Output::Ratios: return "ratios";
    case Output::Reduced: return "reduced";
  }
  return "?";
}

Output parse_output(std::string_view text) {
  for (Output o : {Output::Spectrum, Output::Delta, Output::Overlap, Output::Theta, Output::Concurrence,
                   Output::Tangle, Output::Purity, Output::Order, Output::Ratios, Output::Reduced}) {
    if (to_string(o) == text) return o;
  }
  throw std::invalid_argument("unknown output '" + std::string(text) + "'");
}

double AzimuthSpec::resolve(int sites) const {
  switch (mode) {
    case Mode::Vertex: return 0.0;
    case Mode::Bisector: return kPi / sites;
    case Mode::Angle: break;
  }
  return angle;
}

std::string AzimuthSpec::label() const {
  switch (mode) {
    case Mode::Vertex: return "vertex";
    case Mode::Bisector: return "bisector";
    case Mode::Angle: break;
  }
  return "angle";
}

bool Scenario::wants(Output o) const { return std::find(outputs.begin(), outputs.end(), o) != outputs.end(); }

Scenario scenario_from_config(const ConfigFile& config) {
  Scenario sc;
  if (config.has("name")) sc.name = config.get("name");

  with_key("model.family", [&] {
    for (const auto& f : config.list("model.family")) sc.families.push_back(parse_family(f));
  });

  const bool explicit_j = config.has("model.Jxx") || config.has("model.Jyy");
  if (explicit_j) {
    if (config.has("model.J") || config.has("model.axis")) {
      throw ConfigError("model.Jxx", "give either model.J/model.axis or model.Jxx/model.Jyy, not both");
    }
    const double jxx = config.has("model.Jxx") ? with_key("model.Jxx", [&] { return parse_number(config.get("model.Jxx")); }) : 0.0;
    const double jyy = config.has("model.Jyy") ? with_key("model.Jyy", [&] { return parse_number(config.get("model.Jyy")); }) : 0.0;
    sc.explicit_couplings = std::make_pair(jxx, jyy);
  } else {
    with_key("model.J", [&] {
      for (const auto& j : config.list("model.J")) sc.couplings.push_back(parse_number(j));
    });
    const bool only_xy = std::all_of(sc.families.begin(), sc.families.end(), [](Family f) { return f == Family::XY; });
    if (config.has("model.axis")) {
      with_key("model.axis", [&] {
        for (const auto& a : config.list("model.axis")) {
          const auto axis = parse_ising_axis(a);
          if (axis == IsingAxis::None && !only_xy) throw std::invalid_argument("Ising models need axis X or Y");
          sc.axes.push_back(axis);
        }
      });
    } else if (only_xy) {
      sc.axes.push_back(IsingAxis::None);
    } else {
      throw ConfigError("model.axis", "missing required key");
    }
  }

  with_key("ring.N", [&] {
    for (const auto& n : config.list("ring.N")) {
      const double v = parse_number(n);
      if (v != std::floor(v)) throw std::invalid_argument("N must be an integer");
      sc.sizes.push_back(static_cast<int>(v));
    }
  });
  if (config.has("ring.s")) sc.spin = with_key("ring.s", [&] { return SpinMagnitude::parse(config.get("ring.s")); });
  for (int n : sc.sizes) {
    if (n < 3 || n > kMaxSites) {
      throw ConfigError("ring.N", "N = " + std::to_string(n) + " outside [3, " + std::to_string(kMaxSites) + "]");
    }
    if (HilbertSpace(n, sc.spin).dim() > kMaxSweepDimension) {
      throw ConfigError("ring.N", "dimension (2s+1)^N exceeds " + std::to_string(kMaxSweepDimension) + " for N = " +
                                      std::to_string(n));
    }
  }

  if (config.has("field.direction")) {
    sc.direction = with_key("field.direction", [&] { return parse_field_direction(config.get("field.direction")); });
  }
  if (config.has("field.azimuth")) {
    const auto& a = config.get("field.azimuth");
    if (a == "vertex") sc.azimuth.mode = AzimuthSpec::Mode::Vertex;
    else if (a == "bisector") sc.azimuth.mode = AzimuthSpec::Mode::Bisector;
    else sc.azimuth.angle = with_key("field.azimuth", [&] { return parse_number(a); });
    if (sc.direction != FieldDirection::X) throw ConfigError("field.azimuth", "only meaningful for field.direction = x");
  }
  const bool has_range = config.has("field.start") || config.has("field.stop") || config.has("field.steps");
  if (has_range && config.has("field.values")) throw ConfigError("field.values", "give either values or start/stop/steps");
  if (has_range) {
    const double start = with_key("field.start", [&] { return parse_number(config.get("field.start")); });
    const double stop = with_key("field.stop", [&] { return parse_number(config.get("field.stop")); });
    const double steps_d = with_key("field.steps", [&] { return parse_number(config.get("field.steps")); });
    if (steps_d < 1 || steps_d != std::floor(steps_d)) throw ConfigError("field.steps", "steps must be an integer >= 1");
    const int steps = static_cast<int>(steps_d);
    if (steps > 1 && stop < start) throw ConfigError("field.stop", "stop must be >= start");
    sc.field_values.clear();
    for (int i = 0; i < steps; ++i) {
      sc.field_values.push_back(steps == 1 ? start : start + (stop - start) * i / (steps - 1));
    }
  } else if (config.has("field.values")) {
    sc.field_values.clear();
    with_key("field.values", [&] {
      for (const auto& v : config.list("field.values")) sc.field_values.push_back(parse_number(v));
    });
  }
  std::sort(sc.field_values.begin(), sc.field_values.end());
  for (double b : sc.field_values) {
    if (b < 0.0) throw ConfigError(has_range ? "field.start" : "field.values", "field magnitudes must be >= 0");
    if (b != 0.0 && sc.direction == FieldDirection::None) {
      throw ConfigError("field.direction", "nonzero field values need a direction");
    }
  }

  if (config.has("trial.character") && config.get("trial.character") != "auto") {
    sc.character = with_key("trial.character", [&] { return parse_character(config.get("trial.character")); });
  }
  if (config.has("trial.phi") && config.get("trial.phi") != "auto") {
    sc.phi = with_key("trial.phi", [&] { return parse_number(config.get("trial.phi")); });
  }

  with_key("outputs", [&] {
    for (const auto& o : config.list("outputs")) {
      const auto out = parse_output(o);
      if (!sc.wants(out)) sc.outputs.push_back(out);
    }
  });
  if (sc.wants(Output::Spectrum) && sc.wants(Output::Purity)) {
    throw ConfigError("outputs", "spectrum and purity each expand rows; request them in separate runs");
  }
  const bool qubit_only = sc.wants(Output::Concurrence) || sc.wants(Output::Tangle) || sc.wants(Output::Ratios) ||
                          sc.wants(Output::Reduced);
  if (qubit_only && sc.spin != SpinMagnitude::half()) {
    throw ConfigError("outputs", "concurrence, tangle, ratios and reduced need ring.s = 1/2");
  }
  if (sc.wants(Output::Ratios) || sc.wants(Output::Reduced)) {
    for (Family f : sc.families) {
      if (f != Family::A && f != Family::B) throw ConfigError("outputs", "ratios and reduced need families A or B");
    }
    for (int n : sc.sizes) {
      if (n % 2 != 0) throw ConfigError("outputs", "ratios and reduced need even N");
    }
    if (std::any_of(sc.field_values.begin(), sc.field_values.end(), [](double b) { return b != 0.0; })) {
      throw ConfigError("outputs", "ratios and reduced are defined at zero field");
    }
    if (sc.explicit_couplings) throw ConfigError("outputs", "ratios and reduced need Ising couplings (model.J, model.axis)");
  }
  if (sc.outputs.empty()) throw ConfigError("outputs", "no outputs requested");
  return sc;
}

}  // namespace spinring
