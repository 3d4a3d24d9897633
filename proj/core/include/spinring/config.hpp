#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinring/ring_models.hpp"
#include "spinring/trial_states.hpp"

namespace spinring {

/// Invalid configuration. `key()` is the dotted key at fault, or empty for
/// file-level problems.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Flat `key = value` text with '#' comments. Lists are comma separated.
class ConfigFile {
 public:
  static ConfigFile parse(std::string_view text, std::string source = "<string>");
  static ConfigFile load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::vector<std::string> list(const std::string& key) const;
  std::vector<std::string> keys() const;
  const std::string& source() const { return source_; }

  /// Overrides or adds a key, e.g. from the command line.
  void set(const std::string& key, std::string value);

 private:
  std::string source_;
  std::map<std::string, std::string> entries_;
};

/// Number with optional "pi" factor: "0.5", "pi", "-pi/8", "0.25pi", "3pi/4".
double parse_number(std::string_view text);

enum class Output { Spectrum, Delta, Overlap, Theta, Concurrence, Tangle, Purity, Order, Ratios, Reduced };

std::string_view to_string(Output output);
Output parse_output(std::string_view text);

/// In-plane field azimuth, either a fixed angle or tied to the ring geometry.
struct AzimuthSpec {
  enum class Mode { Angle, Vertex, Bisector };
  Mode mode = Mode::Angle;
  double angle = 0.0;

  /// Vertex: 0 (through site 1). Bisector: pi/N (through the midpoint of bond 1).
  double resolve(int sites) const;
  std::string label() const;
};

struct Scenario {
  std::string name;
  std::vector<Family> families;
  // Ising limits (axis x coupling) unless explicit jxx/jyy are given.
  std::vector<IsingAxis> axes;
  std::vector<double> couplings;
  std::optional<std::pair<double, double>> explicit_couplings;
  std::vector<int> sizes;
  SpinMagnitude spin = SpinMagnitude::half();
  FieldDirection direction = FieldDirection::None;
  AzimuthSpec azimuth;
  std::vector<double> field_values{0.0};
  std::optional<Character> character;  // nullopt = chosen from the model
  std::optional<double> phi;           // nullopt = chosen from the model
  std::vector<Output> outputs;

  bool wants(Output o) const;
};

/// Builds and validates a scenario. Throws ConfigError naming the offending key.
Scenario scenario_from_config(const ConfigFile& config);

/// Largest product-space dimension the sweep accepts.
inline constexpr std::size_t kMaxSweepDimension = 4096;

}  // namespace spinring
