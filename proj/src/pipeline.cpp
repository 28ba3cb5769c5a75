#include "hetealloc/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hetealloc/dataset.hpp"
#include "hetealloc/errors.hpp"
#include "hetealloc/snapshot_io.hpp"

namespace hetealloc {
namespace {

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("invalid " + what + " '" + std::string(s) + "'");
  }
  return v;
}

ExpertiseStore read_store(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return read_snapshots(in, path.string());
}

std::string format_bin_name(const std::string& name, int year) {
  return "histogram_" + name + "_" + std::to_string(year) + ".tsv";
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "bl") return Method::Bl;
  if (name == "hetesim") return Method::HeteSim;
  if (name == "ha1") return Method::Ha1;
  if (name == "ha2") return Method::Ha2;
  if (name == "ha3") return Method::Ha3;
  if (name == "dha") return Method::Dha;
  throw UsageError("unknown method '" + name + "'");
}

std::string to_string(Method method) {
  switch (method) {
    case Method::Bl: return "bl";
    case Method::HeteSim: return "hetesim";
    case Method::Ha1: return "ha1";
    case Method::Ha2: return "ha2";
    case Method::Ha3: return "ha3";
    case Method::Dha: return "dha";
  }
  return "?";
}

YearRange parse_year_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("year range must be FROM:TO");
  const std::string_view sv = text;
  return {parse_int(sv.substr(0, colon), "year"), parse_int(sv.substr(colon + 1), "year")};
}

void validate(const RunConfig& config) {
  if (config.aggregation && config.method != Method::Ha3) {
    throw UsageError("--agg is only valid with ha3");
  }
  if (config.weighted && config.method == Method::Bl) {
    throw UsageError("bl has no weighted variant");
  }
  if (config.threads == 0) throw UsageError("--threads must be positive");
  if (config.years && config.years->from > config.years->to) {
    throw UsageError("empty year range");
  }
}

std::string run_label(const RunConfig& config) {
  std::string label = to_string(config.method);
  if (config.method == Method::Ha3) {
    label += config.aggregation.value_or(Aggregation::Sum) == Aggregation::Average ? "-average"
                                                                                    : "-sum";
  }
  if (config.weighted) label += "-weighted";
  return label;
}

nlohmann::json cmd_ingest(const std::filesystem::path& links_path,
                          const std::filesystem::path& mesh_path,
                          const std::optional<std::filesystem::path>& taxonomy_path) {
  return to_json(load_dataset(links_path, mesh_path, taxonomy_path).manifest);
}

ExpertiseStore run_method(const Dataset& dataset, Method method, YearRange years,
                          bool weighted, Aggregation aggregation, unsigned threads) {
  const EngineOptions options{weighted, threads};
  YearLedger ledger;
  ExpertiseStore store;
  // History before the range still feeds the engine.
  const int start = std::min(years.from, dataset.first_year().value_or(years.from));
  const YearLinks none;
  for (int y = start; y <= years.to; ++y) {
    auto it = dataset.years.find(y);
    const YearLinks& yl = it == dataset.years.end() ? none : it->second;
    ledger.stage_year(y, yl.links, yl.mesh_links);
    switch (method) {
      case Method::Bl: store = run_year_bl(std::move(store), ledger); break;
      case Method::Dha: store = run_year_dha(std::move(store), ledger, options); break;
      case Method::HeteSim:
        store = run_year_similarity(std::move(store), ledger, SimilarityMethod::HeteSim,
                                    aggregation, options);
        break;
      case Method::Ha1:
        store = run_year_similarity(std::move(store), ledger, SimilarityMethod::Ha1,
                                    aggregation, options);
        break;
      case Method::Ha2:
        store = run_year_similarity(std::move(store), ledger, SimilarityMethod::Ha2,
                                    aggregation, options);
        break;
      case Method::Ha3:
        store = run_year_similarity(std::move(store), ledger, SimilarityMethod::Ha3,
                                    aggregation, options);
        break;
    }
  }
  if (start == years.from) return store;
  ExpertiseStore kept;
  for (const Snapshot& s : store.snapshots()) {
    if (s.year >= years.from) kept.append(s);
  }
  return kept;
}

std::filesystem::path cmd_run(const RunConfig& config) {
  validate(config);
  const Dataset dataset = load_dataset(config.links_path, config.mesh_path, config.taxonomy_path);
  YearRange years;
  if (config.years) {
    years = *config.years;
  } else {
    if (!dataset.first_year()) throw DataError("no links in " + config.links_path.string());
    years = {*dataset.first_year(), *dataset.last_year()};
  }
  const ExpertiseStore store =
      run_method(dataset, config.method, years, config.weighted,
                 config.aggregation.value_or(Aggregation::Sum), config.threads);
  std::ostringstream out;
  write_snapshots(out, store);
  const auto path = config.out_dir / (run_label(config) + ".ndjson");
  write_file_atomically(path, out.str());
  return path;
}

CompareResult compare_stores(const ExpertiseStore& first, const std::string& first_name,
                             const ExpertiseStore& second, const std::string& second_name,
                             const std::map<int, PaperCounts>& paper_counts,
                             std::size_t min_papers, const std::filesystem::path& out_dir) {
  std::vector<int> years;
  for (const Snapshot& s : first.snapshots()) years.push_back(s.year);
  std::vector<int> other;
  for (const Snapshot& s : second.snapshots()) other.push_back(s.year);
  if (years != other) throw DataError("snapshot files cover different years");

  const std::vector<MethodSeries> methods{{first_name, &first}, {second_name, &second}};
  CompareResult result;
  result.summary = yearly_summary(methods, years, paper_counts, min_papers);

  std::ostringstream tsv;
  write_summary_tsv(tsv, methods, result.summary);
  result.summary_path = out_dir / "summary.tsv";
  write_file_atomically(result.summary_path, tsv.str());

  static const PaperCounts kNoCounts;
  for (const MethodSeries& m : methods) {
    for (const Snapshot& snap : m.store->snapshots()) {
      auto pc = paper_counts.find(snap.year);
      const PaperCounts& counts = pc == paper_counts.end() ? kNoCounts : pc->second;
      std::vector<double> values;
      for (const std::string& author : productive_filter(snap, counts, min_papers)) {
        const Profile& profile = snap.profiles.at(author);
        bool any = false;
        for (const auto& [c, v] : profile) any = any || v != 0.0;
        if (any) values.push_back(normalized_max(profile));
      }
      std::ostringstream h;
      write_histogram_tsv(h, histogram(values));
      const auto path = out_dir / format_bin_name(m.name, snap.year);
      write_file_atomically(path, h.str());
      result.histogram_paths.push_back(path);
    }
  }
  return result;
}

CompareResult cmd_compare(const CompareConfig& config) {
  const ExpertiseStore first = read_store(config.first);
  const ExpertiseStore second = read_store(config.second);
  std::ifstream links_in(config.links_path);
  if (!links_in) throw DataError("cannot open " + config.links_path.string());
  const auto links = parse_links(links_in, config.links_path.string());
  std::map<int, PaperCounts> counts;
  if (!first.empty()) {
    counts = cumulative_paper_counts(links, first.snapshots().front().year,
                                     first.snapshots().back().year);
  }
  return compare_stores(first, config.first_name, second, config.second_name, counts,
                        config.min_papers, config.out_dir);
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw DataError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hetealloc
