#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hetealloc/dataset.hpp"
#include "hetealloc/dynamic.hpp"
#include "hetealloc/metrics.hpp"
#include "hetealloc/similarity.hpp"

namespace hetealloc {

enum class Method { Bl, HeteSim, Ha1, Ha2, Ha3, Dha };

Method parse_method(const std::string& name);  // throws UsageError
std::string to_string(Method method);

struct YearRange {
  int from = 0;
  int to = 0;
};

YearRange parse_year_range(const std::string& text);  // "FROM:TO"; throws UsageError

struct RunConfig {
  Method method = Method::Dha;
  bool weighted = false;
  std::optional<Aggregation> aggregation;  // ha3 only
  std::optional<YearRange> years;
  std::size_t min_papers = 10;
  unsigned threads = 1;
  std::filesystem::path links_path;
  std::filesystem::path mesh_path;
  std::optional<std::filesystem::path> taxonomy_path;
  std::filesystem::path out_dir;
};

// Throws UsageError: aggregation without ha3, weighted with bl, zero threads,
// empty year range.
void validate(const RunConfig& config);

// Label used for the snapshot file name, e.g. "ha3-average-weighted".
std::string run_label(const RunConfig& config);

nlohmann::json cmd_ingest(const std::filesystem::path& links_path,
                          const std::filesystem::path& mesh_path,
                          const std::optional<std::filesystem::path>& taxonomy_path);

// Runs the configured method over the year range and writes
// <out_dir>/<run_label>.ndjson atomically. Returns the file path.
std::filesystem::path cmd_run(const RunConfig& config);

// Runs a method over a dataset in memory; years without links still produce a
// snapshot.
ExpertiseStore run_method(const Dataset& dataset, Method method, YearRange years,
                          bool weighted, Aggregation aggregation, unsigned threads);

struct CompareConfig {
  std::filesystem::path first;
  std::filesystem::path second;
  std::string first_name;
  std::string second_name;
  std::filesystem::path links_path;  // for paper counts
  std::size_t min_papers = 10;
  std::filesystem::path out_dir;
};

struct CompareResult {
  std::vector<YearSummary> summary;
  std::filesystem::path summary_path;
  std::vector<std::filesystem::path> histogram_paths;
};

// Writes summary.tsv and histogram_<name>_<year>.tsv (normalised maximum of
// productive authors). Throws DataError when the two year ranges differ.
CompareResult cmd_compare(const CompareConfig& config);

CompareResult compare_stores(const ExpertiseStore& first, const std::string& first_name,
                             const ExpertiseStore& second, const std::string& second_name,
                             const std::map<int, PaperCounts>& paper_counts,
                             std::size_t min_papers, const std::filesystem::path& out_dir);

// Writes `content` to `path` via a temporary sibling and rename.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace hetealloc
