#include "hetealloc/mesh_taxonomy.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace hetealloc::mesh {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

bool is_category_letter(char c) { return kCategoryLetters.find(c) != std::string_view::npos; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

constexpr std::array<std::string_view, 16> kCategoryNames = {
    "Anatomy",
    "Organisms",
    "Diseases",
    "Chemicals and Drugs",
    "Analytical, Diagnostic and Therapeutic Techniques and Equipment",
    "Psychiatry and Psychology",
    "Phenomena and Processes",
    "Disciplines and Occupations",
    "Anthropology, Education, Sociology and Social Phenomena",
    "Technology, Industry, Agriculture",
    "Humanities",
    "Information Science",
    "Named Groups",
    "Health Care",
    "Publication Characteristics",
    "Geographicals",
};

}  // namespace

std::string_view category_name(char letter) {
  const auto pos = kCategoryLetters.find(letter);
  if (pos == std::string_view::npos) {
    throw std::invalid_argument(std::string("unknown MeSH category letter '") + letter + "'");
  }
  return kCategoryNames[pos];
}

bool is_unique_id(std::string_view id) {
  return id.size() == 7 && id.front() == 'D' && all_digits(id.substr(1));
}

bool is_tree_id(std::string_view id) {
  if (id.size() < 2 || !is_category_letter(id.front())) return false;
  std::string_view rest = id.substr(1);
  while (true) {
    const auto dot = rest.find('.');
    if (!all_digits(rest.substr(0, dot))) return false;
    if (dot == std::string_view::npos) return true;
    rest.remove_prefix(dot + 1);
  }
}

CategoryId CategoryId::parse(std::string_view value) {
  if (!is_tree_id(value) || value.find('.') != std::string_view::npos) {
    throw std::invalid_argument("not a depth-two MeSH category: '" + std::string(value) + "'");
  }
  return CategoryId(std::string(value));
}

CategoryId truncate_depth2(std::string_view tree_id) {
  if (!is_tree_id(tree_id)) {
    throw std::invalid_argument("malformed MeSH tree id: '" + std::string(tree_id) + "'");
  }
  return CategoryId::parse(tree_id.substr(0, tree_id.find('.')));
}

char category_letter(const CategoryId& c) { return c.letter(); }

std::vector<CategoryId> MeshTable::categories_of(std::string_view unique_id) const {
  std::vector<CategoryId> out;
  auto it = tree_ids.find(std::string(unique_id));
  if (it == tree_ids.end()) return out;
  for (const std::string& t : it->second) out.push_back(truncate_depth2(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MeshTable parse_mesh_table(std::string_view text) {
  MeshTable table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      table.issues.push_back({line_no, "expected two tab-separated fields"});
      continue;
    }
    const std::string_view uid = trim(line.substr(0, tab));
    const std::string_view tree = trim(line.substr(tab + 1));
    if (!is_unique_id(uid)) {
      table.issues.push_back({line_no, "malformed unique id '" + std::string(uid) + "'"});
      continue;
    }
    if (!is_tree_id(tree)) {
      table.issues.push_back({line_no, "malformed tree id '" + std::string(tree) + "'"});
      continue;
    }
    auto& ids = table.tree_ids[std::string(uid)];
    if (std::find(ids.begin(), ids.end(), tree) == ids.end()) ids.emplace_back(tree);
  }
  return table;
}

}  // namespace hetealloc::mesh
