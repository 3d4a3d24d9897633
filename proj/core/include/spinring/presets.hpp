#pragma once

#include <string_view>
#include <vector>

namespace spinring {

struct Preset {
  std::string_view name;
  std::string_view description;
  std::string_view config;  // text in the ConfigFile format
};

/// Built-in experiments, in a stable order.
const std::vector<Preset>& presets();

std::vector<std::string_view> list_presets();

/// Throws std::invalid_argument for an unknown name.
const Preset& find_preset(std::string_view name);

}  // namespace spinring
