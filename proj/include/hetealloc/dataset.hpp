#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hetealloc/ledger.hpp"
#include "hetealloc/mesh_taxonomy.hpp"

namespace hetealloc {

struct LinkRecord {
  int year = 0;
  std::string author;
  std::string paper;
  std::size_t line = 0;
};

struct PaperMeshRecord {
  std::string paper;
  std::string mesh_id;
  std::size_t line = 0;
};

// `year<TAB>author<TAB>paper`, '#' comments and blank lines skipped.
// Throws DataError naming source and line.
std::vector<LinkRecord> parse_links(std::istream& in, const std::string& source);
// `paper<TAB>mesh_unique_id`.
std::vector<PaperMeshRecord> parse_paper_mesh(std::istream& in, const std::string& source);

struct YearLinks {
  std::vector<AuthorPaperLink> links;
  std::vector<PaperMeshLink> mesh_links;  // categories already resolved
};

struct Manifest {
  std::size_t authors = 0;
  std::size_t papers = 0;  // (label, year) nodes
  std::size_t categories = 0;
  std::map<int, std::size_t> links_per_year;
  std::size_t mesh_ids = 0;
  std::size_t mesh_ids_mapped = 0;
  std::vector<std::string> unmapped_mesh_ids;
  std::vector<std::string> papers_with_unmapped_mesh;  // labels
  std::vector<std::string> papers_without_categories;  // "label@year"
  std::vector<std::string> taxonomy_issues;            // "line N: message"
};

nlohmann::json to_json(const Manifest& manifest);

// Link list, paper-mesh list and (optionally) the taxonomy, resolved to
// per-year ledger input. Without a taxonomy the mesh ids are used as
// categories directly.
struct Dataset {
  std::map<int, YearLinks> years;
  Manifest manifest;

  std::optional<int> first_year() const;
  std::optional<int> last_year() const;
};

// Throws DataError when the mesh list names a paper absent from the links.
Dataset build_dataset(const std::vector<LinkRecord>& links,
                      const std::vector<PaperMeshRecord>& paper_mesh,
                      const mesh::MeshTable* taxonomy,
                      const std::string& mesh_source = "<mesh>");

Dataset load_dataset(const std::filesystem::path& links_path,
                     const std::filesystem::path& mesh_path,
                     const std::optional<std::filesystem::path>& taxonomy_path);

// Distinct papers per author, cumulative up to and including each year.
std::map<int, std::map<std::string, std::size_t>> cumulative_paper_counts(
    const std::vector<LinkRecord>& links, int first_year, int last_year);

}  // namespace hetealloc
