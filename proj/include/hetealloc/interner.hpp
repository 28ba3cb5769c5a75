#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hetealloc {

using Index = std::uint32_t;

enum class NodeType : std::uint8_t { Author = 0, Paper = 1, Mesh = 2 };

constexpr std::size_t kNodeTypeCount = 3;

std::string_view to_string(NodeType type);

struct NodeIndex {
  NodeType node_type;
  Index index;

  friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
};

// Dense per-type label <-> index mapping. Indices of one type are exactly
// 0..size(type)-1 in order of first appearance.
class NodeInterner {
 public:
  NodeIndex intern(std::string_view label, NodeType type);

  std::optional<Index> find(std::string_view label, NodeType type) const;
  const std::string& label(NodeType type, Index index) const;
  std::size_t size(NodeType type) const { return slot(type).labels.size(); }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  struct Table {
    std::unordered_map<std::string, Index, StringHash, std::equal_to<>> ids;
    std::vector<std::string> labels;
  };

  Table& slot(NodeType type) { return tables_[static_cast<std::size_t>(type)]; }
  const Table& slot(NodeType type) const {
    return tables_[static_cast<std::size_t>(type)];
  }

  std::array<Table, kNodeTypeCount> tables_;
};

}  // namespace hetealloc
