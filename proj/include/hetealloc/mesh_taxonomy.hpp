#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hetealloc::mesh {

// The 16 top-level MeSH categories, in tree order.
inline constexpr std::string_view kCategoryLetters = "ABCDEFGHIJKLMNVZ";

std::string_view category_name(char letter);

// "D" followed by exactly six digits.
bool is_unique_id(std::string_view id);
// Category letter, then dot-separated digit groups ("A15.378.316.378").
bool is_tree_id(std::string_view id);

// A depth-two tree node: the category letter plus its first digit group.
class CategoryId {
 public:
  // Accepts only ids without a dot (e.g. "C05"); throws std::invalid_argument.
  static CategoryId parse(std::string_view value);

  const std::string& value() const noexcept { return value_; }
  char letter() const noexcept { return value_.front(); }

  friend auto operator<=>(const CategoryId&, const CategoryId&) = default;

 private:
  explicit CategoryId(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

// Drops every component after the first dot. Idempotent.
// Throws std::invalid_argument on a malformed tree id.
CategoryId truncate_depth2(std::string_view tree_id);

char category_letter(const CategoryId& c);

struct ParseIssue {
  std::size_t line;
  std::string message;
};

struct MeshTable {
  // unique id -> tree ids in file order, duplicates removed
  std::map<std::string, std::vector<std::string>> tree_ids;
  std::vector<ParseIssue> issues;

  // Depth-two categories of a unique id, sorted and deduplicated. Empty when
  // the id is unknown.
  std::vector<CategoryId> categories_of(std::string_view unique_id) const;
};

// Reads `unique_id<TAB>tree_id` lines. Blank and '#' lines are skipped.
// Malformed records are reported in `issues` and skipped.
MeshTable parse_mesh_table(std::string_view text);

}  // namespace hetealloc::mesh
