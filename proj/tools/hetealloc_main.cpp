// hetealloc: ingest link lists, run an expertise method, compare two runs.
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hetealloc/errors.hpp"
#include "hetealloc/parallel.hpp"
#include "hetealloc/pipeline.hpp"

namespace fs = std::filesystem;
using namespace hetealloc;

namespace {

constexpr int kUsage = 1;
constexpr int kData = 2;

struct Inputs {
  std::string links;
  std::string mesh;
  std::string taxonomy;

  std::optional<fs::path> taxonomy_path() const {
    if (taxonomy.empty()) return std::nullopt;
    return fs::path(taxonomy);
  }
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--links", in.links, "year<TAB>author<TAB>paper file")->required();
  cmd->add_option("--mesh", in.mesh, "paper<TAB>mesh_unique_id file")->required();
  cmd->add_option("--taxonomy", in.taxonomy,
                  "unique_id<TAB>tree_id file; mesh ids are categories when omitted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Author expertise allocation over heterogeneous publication networks"};
  app.require_subcommand(1);

  Inputs ingest_in;
  std::string ingest_out;
  auto* ingest = app.add_subcommand("ingest", "validate inputs and print a manifest");
  add_inputs(ingest, ingest_in);
  ingest->add_option("--out", ingest_out, "directory for manifest.json (stdout if omitted)");

  Inputs run_in;
  std::string method = "dha", agg, years, run_out;
  bool weighted = false;
  std::size_t run_min_papers = 10;
  unsigned threads = default_thread_count();
  auto* run = app.add_subcommand("run", "run a method and write yearly snapshots");
  add_inputs(run, run_in);
  run->add_option("--method", method, "bl, hetesim, ha1, ha2, ha3 or dha")->capture_default_str();
  run->add_flag("--weighted", weighted, "use the weighted paper-category matrix");
  run->add_option("--agg", agg, "ha3 aggregation: sum or average");
  run->add_option("--years", years, "FROM:TO (default: all years in the links file)");
  run->add_option("--min-papers", run_min_papers, "productive author threshold")
      ->capture_default_str();
  run->add_option("--threads", threads, "worker threads")->capture_default_str();
  run->add_option("--out", run_out, "output directory")->required();

  std::string first, second, first_name, second_name, cmp_links, cmp_out;
  std::size_t cmp_min_papers = 10;
  auto* compare = app.add_subcommand("compare", "summary table and histograms for two runs");
  compare->add_option("first", first, "snapshot file")->required();
  compare->add_option("second", second, "snapshot file")->required();
  compare->add_option("--first-name", first_name, "column name (default: file stem)");
  compare->add_option("--second-name", second_name, "column name (default: file stem)");
  compare->add_option("--links", cmp_links, "links file used for paper counts")->required();
  compare->add_option("--min-papers", cmp_min_papers, "productive author threshold")
      ->capture_default_str();
  compare->add_option("--out", cmp_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*ingest) {
      const auto manifest = cmd_ingest(ingest_in.links, ingest_in.mesh, ingest_in.taxonomy_path());
      if (ingest_out.empty()) {
        std::cout << manifest.dump(2) << '\n';
      } else {
        write_file_atomically(fs::path(ingest_out) / "manifest.json", manifest.dump(2) + "\n");
      }
    } else if (*run) {
      RunConfig cfg;
      cfg.method = parse_method(method);
      cfg.weighted = weighted;
      if (!agg.empty()) {
        if (agg == "sum") cfg.aggregation = Aggregation::Sum;
        else if (agg == "average") cfg.aggregation = Aggregation::Average;
        else throw UsageError("--agg must be sum or average");
      }
      if (!years.empty()) cfg.years = parse_year_range(years);
      cfg.min_papers = run_min_papers;
      cfg.threads = threads;
      cfg.links_path = run_in.links;
      cfg.mesh_path = run_in.mesh;
      cfg.taxonomy_path = run_in.taxonomy_path();
      cfg.out_dir = run_out;
      std::cout << cmd_run(cfg).string() << '\n';
    } else if (*compare) {
      CompareConfig cfg;
      cfg.first = first;
      cfg.second = second;
      cfg.first_name = first_name.empty() ? cfg.first.stem().string() : first_name;
      cfg.second_name = second_name.empty() ? cfg.second.stem().string() : second_name;
      if (cfg.first_name == cfg.second_name) throw UsageError("method names must differ");
      cfg.links_path = cmp_links;
      cfg.min_papers = cmp_min_papers;
      cfg.out_dir = cmp_out;
      const auto result = cmd_compare(cfg);
      std::cout << result.summary_path.string() << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return 0;
}
