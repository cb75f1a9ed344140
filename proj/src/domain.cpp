#include "smtplace/domain.hpp"

#include <algorithm>
#include <cmath>

#include "smtplace/errors.hpp"

namespace smtplace {
namespace {

template <std::size_t N>
bool is_level(int value, const std::array<int, N>& levels) {
  return std::find(levels.begin(), levels.end(), value) != levels.end();
}

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) {
    throw ConfigError(std::string(field) + " must be finite");
  }
}

ComponentDirectory make_directory(int comp_size, ComponentType type, int pad_size, int pad_gap,
                                  double comp_width) {
  ComponentDirectory d;
  d.component_size_class = comp_size;
  d.component_type = type;
  d.pad_size_class = pad_size;
  d.pad_gap = pad_gap;
  d.pad_width = comp_width;
  d.pad_length = pad_size * 1000.0 / comp_width;
  return d;
}

}  // namespace

std::string to_string(ComponentType type) {
  return type == ComponentType::kResistor ? "R" : "C";
}

ComponentType component_type_from_string(const std::string& token) {
  if (token == "R") return ComponentType::kResistor;
  if (token == "C") return ComponentType::kCapacitor;
  throw ConfigError("unknown comp_type level: \"" + token + "\" (expected R or C)");
}

void ComponentDirectory::validate() const {
  if (!is_level(component_size_class, kComponentSizeLevels)) {
    throw ConfigError("unknown comp_size level: " + std::to_string(component_size_class));
  }
  if (!is_level(pad_size_class, kPadSizeLevels)) {
    throw ConfigError("unknown pad_size level: " + std::to_string(pad_size_class));
  }
  if (!is_level(pad_gap, kPadGapLevels)) {
    throw ConfigError("unknown pad_gap level: " + std::to_string(pad_gap));
  }
  if (!(pad_length > 0.0) || !(pad_width > 0.0)) {
    throw ConfigError("pad_length and pad_width must be positive");
  }
  const double area = pad_length * pad_width;
  const double class_area = pad_size_class * 1000.0;
  if (std::abs(area - class_area) > 0.01 * class_area) {
    throw ConfigError("pad dimensions " + std::to_string(pad_length) + " x " +
                      std::to_string(pad_width) + " um are inconsistent with pad_size class " +
                      std::to_string(pad_size_class) + " (x1000 um^2)");
  }
}

void PasteState::validate() const {
  require_finite(volume_avg_pct, "vol_avg");
  require_finite(volume_diff_pct, "vol_diff");
  require_finite(paste_offset_x1, "paste_x1");
  require_finite(paste_offset_y1, "paste_y1");
  require_finite(paste_offset_x2, "paste_x2");
  require_finite(paste_offset_y2, "paste_y2");
  if (!(volume_avg_pct > 0.0)) {
    throw ConfigError("vol_avg must be positive, got " + std::to_string(volume_avg_pct));
  }
}

void PlacementSetting::validate() const {
  require_finite(pre_offset_x, "pre_x");
  require_finite(pre_offset_y, "pre_y");
  require_finite(pre_offset_theta, "pre_theta");
}

void PostOffsets::validate() const {
  require_finite(post_x, "post_x");
  require_finite(post_y, "post_y");
  require_finite(post_theta, "post_theta");
}

void PlacementRecord::validate() const {
  directory.validate();
  paste.validate();
  placement.validate();
  if (targets) targets->validate();
}

std::vector<ComponentDirectory> default_directories() {
  // Size categories: 1005 = 1000x500 um, 0603 = 600x300, 0402 = 400x200.
  // Pad gaps cover the five known levels; the 160 um gap is shared by the
  // two 0402 parts.
  return {
      make_directory(500, ComponentType::kResistor, 280, 450, 500.0),
      make_directory(500, ComponentType::kCapacitor, 280, 460, 500.0),
      make_directory(180, ComponentType::kResistor, 102, 260, 300.0),
      make_directory(180, ComponentType::kCapacitor, 102, 250, 300.0),
      make_directory(80, ComponentType::kResistor, 44, 160, 200.0),
      make_directory(80, ComponentType::kCapacitor, 44, 160, 200.0),
  };
}

int target_index_from_name(const std::string& name) {
  if (name == "post_x") return 0;
  if (name == "post_y") return 1;
  if (name == "post_theta") return 2;
  throw ConfigError("unknown target name: \"" + name + "\"");
}

std::string target_name(int index) {
  switch (index) {
    case 0: return "post_x";
    case 1: return "post_y";
    case 2: return "post_theta";
    default: throw ConfigError("target index out of range: " + std::to_string(index));
  }
}

}  // namespace smtplace
