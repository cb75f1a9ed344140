#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace smtplace {

// Categorical level sets, in canonical order. The pad-gap list is kept in
// the documented order (260 before 250) so one-hot layouts stay stable.
inline constexpr std::array<int, 3> kComponentSizeLevels{80, 180, 500};  // 1000 um^2
inline constexpr std::array<int, 3> kPadSizeLevels{44, 102, 280};        // 1000 um^2
inline constexpr std::array<int, 5> kPadGapLevels{160, 260, 250, 450, 460};  // um

enum class ComponentType { kResistor, kCapacitor };

std::string to_string(ComponentType type);
ComponentType component_type_from_string(const std::string& token);

/// Component/pad directory: which part is being placed on which pad pair.
struct ComponentDirectory {
  int component_size_class = 0;  // 1000 um^2, one of kComponentSizeLevels
  ComponentType component_type = ComponentType::kResistor;
  int pad_size_class = 0;  // 1000 um^2, one of kPadSizeLevels
  int pad_gap = 0;         // um, one of kPadGapLevels
  double pad_length = 0.0;  // um
  double pad_width = 0.0;   // um

  /// Throws ConfigError when a categorical value is not a known level or the
  /// pad dimensions disagree with the pad size class by more than 1%.
  void validate() const;
};

/// Solder-paste inspection summary for the two pads of one placement.
struct PasteState {
  double volume_avg_pct = 0.0;   // average printed volume ratio, %
  double volume_diff_pct = 0.0;  // difference of volume ratios, %
  double paste_offset_x1 = 0.0;  // um, pad 1
  double paste_offset_y1 = 0.0;  // um, pad 1
  double paste_offset_x2 = 0.0;  // um, pad 2
  double paste_offset_y2 = 0.0;  // um, pad 2

  void validate() const;
};

/// Pre-reflow placement setting: the decision variables.
struct PlacementSetting {
  double pre_offset_x = 0.0;      // um
  double pre_offset_y = 0.0;      // um
  double pre_offset_theta = 0.0;  // degrees

  void validate() const;
};

/// Measured component offsets after reflow: the prediction targets.
struct PostOffsets {
  double post_x = 0.0;      // um
  double post_y = 0.0;      // um
  double post_theta = 0.0;  // degrees

  void validate() const;
};

struct PlacementRecord {
  ComponentDirectory directory;
  PasteState paste;
  PlacementSetting placement;
  std::optional<PostOffsets> targets;  // absent for inference-only records

  bool labeled() const { return targets.has_value(); }
  void validate() const;
};

/// Midpoint of the two deposited paste centers, x then y (um).
inline double paste_centroid_x(const PasteState& p) {
  return 0.5 * (p.paste_offset_x1 + p.paste_offset_x2);
}
inline double paste_centroid_y(const PasteState& p) {
  return 0.5 * (p.paste_offset_y1 + p.paste_offset_y2);
}

/// The six stock directories: R/C in the 1005, 0603 and 0402 size categories.
/// Pad dimensions follow the shipped convention pad_width = component width,
/// pad_length = pad area / pad_width.
std::vector<ComponentDirectory> default_directories();

int target_index_from_name(const std::string& name);  // post_x=0, post_y=1, post_theta=2
std::string target_name(int index);

}  // namespace smtplace
