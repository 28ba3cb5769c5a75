#include "hetealloc/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hetealloc/errors.hpp"

namespace hetealloc {
namespace {

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<LinkRecord> parse_links(std::istream& in, const std::string& source) {
  std::vector<LinkRecord> out;
  for_each_record(in, [&](std::string_view line, std::size_t line_no) {
    const auto f = split_tabs(line);
    if (f.size() != 3) throw DataError(source, line_no, "expected year<TAB>author<TAB>paper");
    int year = 0;
    auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), year);
    if (ec != std::errc{} || ptr != f[0].data() + f[0].size()) {
      throw DataError(source, line_no, "invalid year '" + std::string(f[0]) + "'");
    }
    if (f[1].empty() || f[2].empty()) throw DataError(source, line_no, "empty author or paper label");
    out.push_back({year, std::string(f[1]), std::string(f[2]), line_no});
  });
  return out;
}

std::vector<PaperMeshRecord> parse_paper_mesh(std::istream& in, const std::string& source) {
  std::vector<PaperMeshRecord> out;
  for_each_record(in, [&](std::string_view line, std::size_t line_no) {
    const auto f = split_tabs(line);
    if (f.size() != 2) throw DataError(source, line_no, "expected paper<TAB>mesh_unique_id");
    if (f[0].empty() || f[1].empty()) throw DataError(source, line_no, "empty paper label or mesh id");
    out.push_back({std::string(f[0]), std::string(f[1]), line_no});
  });
  return out;
}

nlohmann::json to_json(const Manifest& m) {
  nlohmann::ordered_json j;
  j["authors"] = m.authors;
  j["papers"] = m.papers;
  j["categories"] = m.categories;
  nlohmann::ordered_json per_year = nlohmann::ordered_json::object();
  for (const auto& [year, n] : m.links_per_year) per_year[std::to_string(year)] = n;
  j["links_per_year"] = per_year;
  j["taxonomy"] = {{"mesh_ids", m.mesh_ids},
                   {"mapped", m.mesh_ids_mapped},
                   {"unmapped_mesh_ids", m.unmapped_mesh_ids},
                   {"papers_with_unmapped_mesh", m.papers_with_unmapped_mesh},
                   {"issues", m.taxonomy_issues}};
  j["papers_without_categories"] = m.papers_without_categories;
  return nlohmann::json::parse(j.dump());
}

std::optional<int> Dataset::first_year() const {
  if (years.empty()) return std::nullopt;
  return years.begin()->first;
}

std::optional<int> Dataset::last_year() const {
  if (years.empty()) return std::nullopt;
  return years.rbegin()->first;
}

Dataset build_dataset(const std::vector<LinkRecord>& links,
                      const std::vector<PaperMeshRecord>& paper_mesh,
                      const mesh::MeshTable* taxonomy, const std::string& mesh_source) {
  Dataset ds;
  Manifest& mf = ds.manifest;

  std::unordered_set<std::string> paper_labels;
  for (const LinkRecord& l : links) paper_labels.insert(l.paper);

  // Resolve every paper label to its categories.
  std::unordered_map<std::string, std::set<std::string>> categories;
  std::set<std::string> mesh_ids, unmapped, unmapped_papers;
  for (const PaperMeshRecord& r : paper_mesh) {
    if (!paper_labels.contains(r.paper)) {
      throw DataError(mesh_source, r.line, "mesh link for unknown paper '" + r.paper + "'");
    }
    mesh_ids.insert(r.mesh_id);
    auto& cats = categories[r.paper];
    if (taxonomy == nullptr) {
      cats.insert(r.mesh_id);
      continue;
    }
    const auto resolved = taxonomy->categories_of(r.mesh_id);
    if (resolved.empty()) {
      unmapped.insert(r.mesh_id);
      unmapped_papers.insert(r.paper);
    }
    for (const auto& c : resolved) cats.insert(c.value());
  }
  mf.mesh_ids = mesh_ids.size();
  mf.mesh_ids_mapped = mesh_ids.size() - unmapped.size();
  mf.unmapped_mesh_ids.assign(unmapped.begin(), unmapped.end());
  mf.papers_with_unmapped_mesh.assign(unmapped_papers.begin(), unmapped_papers.end());
  if (taxonomy != nullptr) {
    for (const auto& issue : taxonomy->issues) {
      mf.taxonomy_issues.push_back("line " + std::to_string(issue.line) + ": " + issue.message);
    }
  }

  std::set<std::string> authors, used_categories;
  std::map<int, std::set<std::pair<std::string, std::string>>> distinct;
  for (const LinkRecord& l : links) {
    distinct[l.year].insert({l.author, l.paper});
    authors.insert(l.author);
  }
  for (const auto& [year, pairs] : distinct) {
    YearLinks& yl = ds.years[year];
    std::set<std::string> papers;
    for (const auto& [author, paper] : pairs) {
      yl.links.push_back({author, paper});
      papers.insert(paper);
    }
    for (const std::string& paper : papers) {
      auto it = categories.find(paper);
      if (it == categories.end() || it->second.empty()) {
        mf.papers_without_categories.push_back(paper_node_label(paper, year));
        continue;
      }
      for (const std::string& c : it->second) {
        yl.mesh_links.push_back({paper, c, 1.0});
        used_categories.insert(c);
      }
    }
    mf.links_per_year[year] = pairs.size();
    mf.papers += papers.size();
  }
  mf.authors = authors.size();
  mf.categories = used_categories.size();
  return ds;
}

Dataset load_dataset(const std::filesystem::path& links_path,
                     const std::filesystem::path& mesh_path,
                     const std::optional<std::filesystem::path>& taxonomy_path) {
  auto links_in = open_input(links_path);
  const auto links = parse_links(links_in, links_path.string());
  auto mesh_in = open_input(mesh_path);
  const auto paper_mesh = parse_paper_mesh(mesh_in, mesh_path.string());
  std::optional<mesh::MeshTable> taxonomy;
  if (taxonomy_path) {
    auto in = open_input(*taxonomy_path);
    std::stringstream text;
    text << in.rdbuf();
    taxonomy = mesh::parse_mesh_table(text.str());
  }
  return build_dataset(links, paper_mesh, taxonomy ? &*taxonomy : nullptr, mesh_path.string());
}

std::map<int, std::map<std::string, std::size_t>> cumulative_paper_counts(
    const std::vector<LinkRecord>& links, int first_year, int last_year) {
  std::map<int, std::set<std::pair<std::string, std::string>>> by_year;
  for (const LinkRecord& l : links) {
    if (l.year <= last_year) by_year[l.year].insert({l.author, l.paper});
  }
  std::map<std::string, std::size_t> running;
  auto next = by_year.begin();
  const auto advance_to = [&](int year) {
    for (; next != by_year.end() && next->first <= year; ++next) {
      for (const auto& pair : next->second) ++running[pair.first];
    }
  };
  std::map<int, std::map<std::string, std::size_t>> out;
  for (int y = first_year; y <= last_year; ++y) {
    advance_to(y);
    out[y] = running;
  }
  return out;
}

}  // namespace hetealloc
