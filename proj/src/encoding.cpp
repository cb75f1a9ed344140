#include "smtplace/encoding.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "smtplace/errors.hpp"

namespace smtplace {
namespace {

template <std::size_t N>
int level_index(int value, const std::array<int, N>& levels, const char* field) {
  auto it = std::find(levels.begin(), levels.end(), value);
  if (it == levels.end()) {
    throw ConfigError(std::string("unknown ") + field + " level: " + std::to_string(value));
  }
  return static_cast<int>(it - levels.begin());
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Eigen::VectorXd encode_features(const PlacementRecord& record) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(kFeatureDim);
  int base = 0;
  v[base + level_index(record.directory.component_size_class, kComponentSizeLevels, "comp_size")] = 1.0;
  base += static_cast<int>(kComponentSizeLevels.size());
  v[base + (record.directory.component_type == ComponentType::kResistor ? 0 : 1)] = 1.0;
  base += 2;
  v[base + level_index(record.directory.pad_size_class, kPadSizeLevels, "pad_size")] = 1.0;
  base += static_cast<int>(kPadSizeLevels.size());
  v[base + level_index(record.directory.pad_gap, kPadGapLevels, "pad_gap")] = 1.0;
  base += static_cast<int>(kPadGapLevels.size());

  v[base + 0] = record.paste.volume_avg_pct;
  v[base + 1] = record.paste.volume_diff_pct;
  v[base + 2] = record.paste.paste_offset_x1;
  v[base + 3] = record.paste.paste_offset_y1;
  v[base + 4] = record.paste.paste_offset_x2;
  v[base + 5] = record.paste.paste_offset_y2;
  v[kPreOffsetXSlot] = record.placement.pre_offset_x;
  v[kPreOffsetYSlot] = record.placement.pre_offset_y;
  v[kPreOffsetThetaSlot] = record.placement.pre_offset_theta;
  return v;
}

Eigen::MatrixXd encode_matrix(std::span<const PlacementRecord> records) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(records.size()), kFeatureDim);
  for (std::size_t i = 0; i < records.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = encode_features(records[i]).transpose();
  }
  return m;
}

Eigen::VectorXd target_column(std::span<const PlacementRecord> records, int target_index) {
  Eigen::VectorXd y(static_cast<Eigen::Index>(records.size()));
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].labeled()) {
      throw ConfigError("record " + std::to_string(i) + " is unlabeled; training requires targets");
    }
    const PostOffsets& t = *records[i].targets;
    switch (target_index) {
      case 0: y[static_cast<Eigen::Index>(i)] = t.post_x; break;
      case 1: y[static_cast<Eigen::Index>(i)] = t.post_y; break;
      case 2: y[static_cast<Eigen::Index>(i)] = t.post_theta; break;
      default: throw ConfigError("target index out of range: " + std::to_string(target_index));
    }
  }
  return y;
}

std::string encoding_hash() {
  std::ostringstream layout;
  layout << "onehot:comp_size";
  for (int v : kComponentSizeLevels) layout << ':' << v;
  layout << "|onehot:comp_type:R:C|onehot:pad_size";
  for (int v : kPadSizeLevels) layout << ':' << v;
  layout << "|onehot:pad_gap";
  for (int v : kPadGapLevels) layout << ':' << v;
  layout << "|raw:vol_avg,vol_diff,paste_x1,paste_y1,paste_x2,paste_y2,pre_x,pre_y,pre_theta";

  std::ostringstream hex;
  hex << std::hex << fnv1a(layout.str());
  return hex.str();
}

}  // namespace smtplace
