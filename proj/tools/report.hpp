#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace fow {

using nlohmann::json;

/// One verified expectation. `provenance` records where the expected value
/// comes from: a published closed form ("paper"), a definitional identity
/// ("trivial"), or independent derivation/oracle arithmetic ("derived").
struct CheckRecord {
  std::string name;
  json inputs;
  json expected;
  json observed;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance;  // paper | trivial | derived

  json to_json() const;
};

/// A named polyline for the plot subcommand; y entries may be NaN (gaps).
struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

class Report {
 public:
  Report(std::string command, std::uint64_t seed, json config);

  void add(CheckRecord record);
  void add_series(Series s);
  void append(const Report& other);  // records and series, order preserved

  bool all_pass() const;
  int total() const { return static_cast<int>(records_.size()); }
  int passed() const;

  /// Canonical content: everything except timing. Byte-stable per seed/config.
  json canonical() const;
  /// FNV-1a over the canonical dump.
  std::uint64_t hash() const;
  /// Full document: canonical content + "hash" + "timing".
  json document(double elapsed_seconds) const;

  const std::vector<CheckRecord>& records() const { return records_; }
  const std::vector<Series>& series() const { return series_; }

 private:
  std::string command_;
  std::uint64_t seed_;
  json config_;
  std::vector<CheckRecord> records_;
  std::vector<Series> series_;
};

std::uint64_t fnv1a(const std::string& bytes);

/// Writes text to path; returns false on I/O failure.
bool write_file(const std::string& path, const std::string& contents);

/// Formats a double for CSV with '.' decimal separator, locale-free.
std::string csv_number(double v);

}  // namespace fow
