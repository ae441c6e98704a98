#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace fow {

namespace {

json sanitize(const json& j) { return j; }

json series_to_json(const Series& s) {
  json x = json::array(), y = json::array();
  for (double v : s.x) x.push_back(v);
  for (double v : s.y) y.push_back(v);
  return json{{"name", s.name}, {"x", std::move(x)}, {"y", std::move(y)}};
}

}  // namespace

json CheckRecord::to_json() const {
  return json{{"name", name},         {"inputs", sanitize(inputs)},
              {"expected", expected}, {"observed", observed},
              {"tolerance", tolerance}, {"pass", pass},
              {"provenance", provenance}};
}

Report::Report(std::string command, std::uint64_t seed, json config)
    : command_(std::move(command)), seed_(seed), config_(std::move(config)) {}

void Report::add(CheckRecord record) { records_.push_back(std::move(record)); }

void Report::add_series(Series s) { series_.push_back(std::move(s)); }

void Report::append(const Report& other) {
  for (const auto& r : other.records_) records_.push_back(r);
  for (const auto& s : other.series_) series_.push_back(s);
}

bool Report::all_pass() const {
  for (const auto& r : records_)
    if (!r.pass) return false;
  return true;
}

int Report::passed() const {
  int n = 0;
  for (const auto& r : records_)
    if (r.pass) ++n;
  return n;
}

json Report::canonical() const {
  json records = json::array();
  for (const auto& r : records_) records.push_back(r.to_json());
  json series = json::array();
  for (const auto& s : series_) series.push_back(series_to_json(s));
  return json{{"schema", 1},
              {"tool", "fow"},
              {"version", FOW_VERSION},
              {"command", command_},
              {"seed", seed_},
              {"config", config_},
              {"records", std::move(records)},
              {"series", std::move(series)},
              {"summary", json{{"total", total()}, {"passed", passed()}}}};
}

std::uint64_t Report::hash() const { return fnv1a(canonical().dump()); }

json Report::document(double elapsed_seconds) const {
  json doc = canonical();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  doc["hash"] = buf;
  doc["timing"] = json{{"elapsed_seconds", elapsed_seconds}};
  return doc;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << contents;
  return static_cast<bool>(out);
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace fow
