#include "smtplace/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "smtplace/errors.hpp"
#include "smtplace/rng.hpp"

namespace smtplace {
namespace {

const std::array<const char*, 18> kColumns = {
    "comp_size", "comp_type", "pad_size", "pad_gap",  "pad_length", "pad_width",
    "vol_avg",   "vol_diff",  "paste_x1", "paste_y1", "paste_x2",   "paste_y2",
    "pre_x",     "pre_y",     "pre_theta", "post_x",  "post_y",     "post_theta"};

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

int parse_int(const std::string& token, const std::string& column, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError("line " + std::to_string(line_no) + ", column " + column +
                      ": expected integer, got \"" + token + "\"");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw IoError("failed to format double");
  return std::string(buf.data(), ptr);
}

double parse_double(const std::string& token, const std::string& column, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError("line " + std::to_string(line_no) + ", column " + column +
                      ": expected number, got \"" + token + "\"");
  }
  return value;
}

std::string csv_header(bool labeled) {
  std::string out;
  const int n = labeled ? kCsvLabeledColumns : kCsvUnlabeledColumns;
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += kColumns[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string record_to_csv_row(const PlacementRecord& r) {
  std::string out;
  out += std::to_string(r.directory.component_size_class);
  out += ',' + to_string(r.directory.component_type);
  out += ',' + std::to_string(r.directory.pad_size_class);
  out += ',' + std::to_string(r.directory.pad_gap);
  out += ',' + format_double(r.directory.pad_length);
  out += ',' + format_double(r.directory.pad_width);
  out += ',' + format_double(r.paste.volume_avg_pct);
  out += ',' + format_double(r.paste.volume_diff_pct);
  out += ',' + format_double(r.paste.paste_offset_x1);
  out += ',' + format_double(r.paste.paste_offset_y1);
  out += ',' + format_double(r.paste.paste_offset_x2);
  out += ',' + format_double(r.paste.paste_offset_y2);
  out += ',' + format_double(r.placement.pre_offset_x);
  out += ',' + format_double(r.placement.pre_offset_y);
  out += ',' + format_double(r.placement.pre_offset_theta);
  if (r.targets) {
    out += ',' + format_double(r.targets->post_x);
    out += ',' + format_double(r.targets->post_y);
    out += ',' + format_double(r.targets->post_theta);
  }
  return out;
}

PlacementRecord record_from_csv_row(const std::string& line, bool labeled, std::size_t line_no) {
  const auto fields = split_fields(line);
  const std::size_t expected = labeled ? kCsvLabeledColumns : kCsvUnlabeledColumns;
  if (fields.size() != expected) {
    throw ConfigError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(expected) + " fields, got " + std::to_string(fields.size()));
  }
  auto num = [&](std::size_t i) { return parse_double(fields[i], kColumns[i], line_no); };

  PlacementRecord r;
  r.directory.component_size_class = parse_int(fields[0], "comp_size", line_no);
  r.directory.component_type = component_type_from_string(fields[1]);
  r.directory.pad_size_class = parse_int(fields[2], "pad_size", line_no);
  r.directory.pad_gap = parse_int(fields[3], "pad_gap", line_no);
  r.directory.pad_length = num(4);
  r.directory.pad_width = num(5);
  r.paste.volume_avg_pct = num(6);
  r.paste.volume_diff_pct = num(7);
  r.paste.paste_offset_x1 = num(8);
  r.paste.paste_offset_y1 = num(9);
  r.paste.paste_offset_x2 = num(10);
  r.paste.paste_offset_y2 = num(11);
  r.placement.pre_offset_x = num(12);
  r.placement.pre_offset_y = num(13);
  r.placement.pre_offset_theta = num(14);
  if (labeled) {
    r.targets = PostOffsets{num(15), num(16), num(17)};
  }
  r.validate();
  return r;
}

std::vector<PlacementRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path.string());

  std::string header;
  if (!std::getline(in, header)) throw ConfigError("empty dataset file: " + path.string());
  if (!header.empty() && header.back() == '\r') header.pop_back();

  bool labeled;
  if (header == csv_header(true)) {
    labeled = true;
  } else if (header == csv_header(false)) {
    labeled = false;
  } else {
    // Name the first offending column for the error message.
    const auto got = split_fields(header);
    std::string offender = "column count " + std::to_string(got.size());
    for (std::size_t i = 0; i < got.size() && i < kColumns.size(); ++i) {
      if (got[i] != kColumns[i]) {
        offender = "column " + std::to_string(i + 1) + " is \"" + got[i] + "\", expected \"" +
                   kColumns[i] + "\"";
        break;
      }
    }
    throw ConfigError("dataset header mismatch in " + path.string() + ": " + offender);
  }

  std::vector<PlacementRecord> records;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    records.push_back(record_from_csv_row(line, labeled, line_no));
  }
  return records;
}

void write_csv(const std::filesystem::path& path, std::span<const PlacementRecord> records) {
  const bool labeled = !records.empty() && records.front().labeled();
  std::ofstream out(path, std::ios::binary);  // binary: no platform newline translation
  if (!out) throw IoError("cannot write dataset file: " + path.string());
  out << csv_header(labeled) << '\n';
  for (const auto& r : records) {
    if (r.labeled() != labeled) {
      throw ConfigError("cannot mix labeled and unlabeled records in one CSV");
    }
    out << record_to_csv_row(r) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

DatasetSplit split_dataset(std::span<const PlacementRecord> records, std::uint64_t seed) {
  const std::size_t n = records.size();
  if (n < 10) {
    throw ConfigError("need at least 10 labeled records to split, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!records[i].labeled()) {
      throw ConfigError("record " + std::to_string(i) + " is unlabeled; split requires labels");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng = make_rng(seed, {0x5117ULL});
  std::shuffle(order.begin(), order.end(), rng);

  // Largest-remainder apportionment of 70:10:20, exact in integer tenths.
  std::array<std::size_t, 3> weight{7, 1, 2};
  std::array<std::size_t, 3> size{};
  std::array<std::size_t, 3> rem{};
  std::size_t assigned = 0;
  for (int p = 0; p < 3; ++p) {
    size[p] = weight[p] * n / 10;
    rem[p] = weight[p] * n % 10;
    assigned += size[p];
  }
  std::array<int, 3> by_rem{0, 1, 2};
  std::stable_sort(by_rem.begin(), by_rem.end(), [&](int a, int b) { return rem[a] > rem[b]; });
  for (std::size_t k = 0; k < n - assigned; ++k) ++size[by_rem[k % 3]];

  DatasetSplit split;
  auto cursor = order.begin();
  split.train.assign(cursor, cursor + static_cast<std::ptrdiff_t>(size[0]));
  cursor += static_cast<std::ptrdiff_t>(size[0]);
  split.validation.assign(cursor, cursor + static_cast<std::ptrdiff_t>(size[1]));
  cursor += static_cast<std::ptrdiff_t>(size[1]);
  split.test.assign(cursor, order.end());
  return split;
}

std::vector<PlacementRecord> gather(std::span<const PlacementRecord> records,
                                    std::span<const std::size_t> indices) {
  std::vector<PlacementRecord> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(records[i]);
  return out;
}

}  // namespace smtplace
