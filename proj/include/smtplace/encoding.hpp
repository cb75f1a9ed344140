#pragma once

#include <Eigen/Core>
#include <span>
#include <string>

#include "smtplace/domain.hpp"

namespace smtplace {

// Feature layout: 13 one-hot slots (component size 3, component type 2,
// pad size 3, pad gap 5) followed by 9 raw continuous values
// (vol_avg, vol_diff, paste x1/y1/x2/y2, pre x/y/theta). No scaling.
inline constexpr int kFeatureDim = 22;
inline constexpr int kPreOffsetXSlot = 19;
inline constexpr int kPreOffsetYSlot = 20;
inline constexpr int kPreOffsetThetaSlot = 21;

/// Deterministic numeric encoding of one record. Pure: identical records
/// yield bit-identical vectors. Throws ConfigError on unknown levels.
Eigen::VectorXd encode_features(const PlacementRecord& record);

/// Row-per-record feature matrix (n x 22).
Eigen::MatrixXd encode_matrix(std::span<const PlacementRecord> records);

/// Targets column for one of post_x / post_y / post_theta. All records must
/// be labeled.
Eigen::VectorXd target_column(std::span<const PlacementRecord> records, int target_index);

/// FNV-1a hash of the feature layout (level sets, order, continuous field
/// names). Persisted models carry it; mixing encodings is refused.
std::string encoding_hash();

}  // namespace smtplace
