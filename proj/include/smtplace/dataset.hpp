#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "smtplace/domain.hpp"

namespace smtplace {

// CSV schema, one record per row:
//   comp_size,comp_type,pad_size,pad_gap,pad_length,pad_width,
//   vol_avg,vol_diff,paste_x1,paste_y1,paste_x2,paste_y2,
//   pre_x,pre_y,pre_theta[,post_x,post_y,post_theta]
// Units: um, %, degrees. The three post columns are optional (unlabeled files).
inline constexpr int kCsvLabeledColumns = 18;
inline constexpr int kCsvUnlabeledColumns = 15;

std::string csv_header(bool labeled);
std::string record_to_csv_row(const PlacementRecord& record);
PlacementRecord record_from_csv_row(const std::string& line, bool labeled, std::size_t line_no);

std::vector<PlacementRecord> read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, std::span<const PlacementRecord> records);

/// Shortest round-trip decimal formatting; reading the text back yields the
/// identical double, so files are safe as a persistence format.
std::string format_double(double value);
double parse_double(const std::string& token, const std::string& column, std::size_t line_no);

struct DatasetSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};

/// Seeded uniform shuffle, then a contiguous 70:10:20 cut. Part sizes follow
/// the largest-remainder rule, so each is within one record of its exact
/// quota. Requires >= 10 labeled records.
DatasetSplit split_dataset(std::span<const PlacementRecord> records, std::uint64_t seed);

std::vector<PlacementRecord> gather(std::span<const PlacementRecord> records,
                                    std::span<const std::size_t> indices);

}  // namespace smtplace
