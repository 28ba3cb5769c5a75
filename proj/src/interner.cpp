#include "hetealloc/interner.hpp"

#include <stdexcept>

namespace hetealloc {

std::string_view to_string(NodeType type) {
  switch (type) {
    case NodeType::Author:
      return "author";
    case NodeType::Paper:
      return "paper";
    case NodeType::Mesh:
      return "mesh";
  }
  return "unknown";
}

NodeIndex NodeInterner::intern(std::string_view label, NodeType type) {
  if (label.empty()) {
    throw std::invalid_argument("cannot intern an empty " + std::string(to_string(type)) +
                                " label");
  }
  Table& t = slot(type);
  if (auto it = t.ids.find(label); it != t.ids.end()) {
    return {type, it->second};
  }
  const auto index = static_cast<Index>(t.labels.size());
  t.labels.emplace_back(label);
  t.ids.emplace(t.labels.back(), index);
  return {type, index};
}

std::optional<Index> NodeInterner::find(std::string_view label, NodeType type) const {
  const Table& t = slot(type);
  if (auto it = t.ids.find(label); it != t.ids.end()) return it->second;
  return std::nullopt;
}

const std::string& NodeInterner::label(NodeType type, Index index) const {
  const Table& t = slot(type);
  if (index >= t.labels.size()) {
    throw std::out_of_range("no " + std::string(to_string(type)) + " with index " +
                            std::to_string(index));
  }
  return t.labels[index];
}

}  // namespace hetealloc
