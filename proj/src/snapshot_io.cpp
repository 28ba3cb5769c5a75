#include "hetealloc/snapshot_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "hetealloc/errors.hpp"

namespace hetealloc {

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

void write_snapshots(std::ostream& out, const ExpertiseStore& store) {
  for (const Snapshot& s : store.snapshots()) {
    for (const auto& [author, profile] : s.profiles) {
      nlohmann::ordered_json record;
      record["year"] = s.year;
      record["author"] = author;
      nlohmann::ordered_json expertise = nlohmann::ordered_json::object();
      for (const auto& [category, value] : profile) {
        expertise[category] = round_significant(value);
      }
      record["expertise"] = std::move(expertise);
      out << record.dump() << '\n';
    }
  }
}

ExpertiseStore read_snapshots(std::istream& in, const std::string& source) {
  ExpertiseStore store;
  Snapshot current;
  bool open = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(source, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object() || !record.contains("year") || !record["year"].is_number_integer() ||
        !record.contains("author") || !record["author"].is_string() ||
        !record.contains("expertise") || !record["expertise"].is_object()) {
      throw DataError(source, line_no, "record needs integer 'year', string 'author', object 'expertise'");
    }
    const int year = record["year"].get<int>();
    if (open && year != current.year) {
      if (year < current.year) throw DataError(source, line_no, "years must be increasing");
      store.append(std::move(current));
      current = Snapshot{};
      open = false;
    }
    if (!open) {
      current.year = year;
      open = true;
    }
    Profile& profile = current.profiles[record["author"].get<std::string>()];
    for (const auto& [category, value] : record["expertise"].items()) {
      if (!value.is_number()) throw DataError(source, line_no, "expertise values must be numbers");
      profile[category] = value.get<double>();
    }
  }
  if (open) store.append(std::move(current));
  return store;
}

}  // namespace hetealloc
