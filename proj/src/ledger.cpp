#include "hetealloc/ledger.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hetealloc/errors.hpp"

namespace hetealloc {

std::string paper_node_label(std::string_view label, int year) {
  std::string out(label);
  out += '@';
  out += std::to_string(year);
  return out;
}

void YearLedger::stage_year(int year, std::span<const AuthorPaperLink> links,
                            std::span<const PaperMeshLink> mesh_links) {
  if (pending_) {
    throw OutOfOrderYear("year " + std::to_string(*year_) +
                         " is staged but has not been materialized");
  }
  if (year_ && year != *year_ + 1) {
    throw OutOfOrderYear("expected year " + std::to_string(*year_ + 1) + ", got " +
                         std::to_string(year));
  }

  std::unordered_set<std::string> papers;
  update_.clear();
  update_.reserve(links.size());
  for (const AuthorPaperLink& l : links) {
    if (l.author.empty() || l.paper.empty()) {
      throw DataError("empty author or paper label in year " + std::to_string(year));
    }
    std::string key = paper_node_label(l.paper, year);
    papers.insert(key);
    update_.push_back({l.author, std::move(key)});
  }
  for (const PaperMeshLink& m : mesh_links) {
    std::string key = paper_node_label(m.paper, year);
    if (!papers.contains(key)) {
      throw DataError("category link for paper '" + m.paper + "' which has no author in year " +
                      std::to_string(year));
    }
    if (m.category.empty()) throw DataError("empty category for paper '" + m.paper + "'");
    mesh_.push_back({std::move(key), m.category, m.weight});
  }
  year_ = year;
  pending_ = true;
}

YearMatrices materialize_year(YearLedger& ledger) {
  if (!ledger.pending_) {
    throw OutOfOrderYear("no staged year to materialize");
  }
  NodeInterner& nodes = ledger.nodes_;

  // Experience nodes are interned already (earlier years). Anything the update
  // introduces afterwards must be new.
  const std::size_t known_papers = nodes.size(NodeType::Paper);
  std::vector<Triplet> update;
  update.reserve(ledger.update_.size());
  for (const AuthorPaperLink& l : ledger.update_) {
    const Index a = nodes.intern(l.author, NodeType::Author).index;
    const Index p = nodes.intern(l.paper, NodeType::Paper).index;
    if (p < known_papers) {
      throw DataError("paper '" + l.paper + "' already appears in an earlier year");
    }
    update.push_back({a, p, 1.0});
  }
  for (std::size_t k = ledger.mesh_materialized_; k < ledger.mesh_.size(); ++k) {
    nodes.intern(ledger.mesh_[k].category, NodeType::Mesh);
  }

  std::vector<Triplet> experience;
  experience.reserve(ledger.experience_.size());
  for (const AuthorPaperLink& l : ledger.experience_) {
    experience.push_back({*nodes.find(l.author, NodeType::Author),
                          *nodes.find(l.paper, NodeType::Paper), 1.0});
  }
  std::vector<Triplet> mesh;
  mesh.reserve(ledger.mesh_.size());
  for (const PaperMeshLink& m : ledger.mesh_) {
    mesh.push_back({*nodes.find(m.category, NodeType::Mesh),
                    *nodes.find(m.paper, NodeType::Paper), m.weight});
  }

  const std::size_t n_authors = nodes.size(NodeType::Author);
  const std::size_t n_papers = nodes.size(NodeType::Paper);
  YearMatrices out;
  out.year = *ledger.year_;
  out.experience = SparseMatrix::from_triplets(n_authors, n_papers, experience);
  out.update = SparseMatrix::from_triplets(n_authors, n_papers, update);
  out.mesh_paper = SparseMatrix::from_triplets(nodes.size(NodeType::Mesh), n_papers, mesh);

  // Fold the year into the history, one entry per distinct link.
  for (const Triplet& t : out.update.triplets()) {
    ledger.experience_.push_back({nodes.label(NodeType::Author, t.row),
                                  nodes.label(NodeType::Paper, t.col)});
  }
  ledger.update_.clear();
  ledger.mesh_materialized_ = ledger.mesh_.size();
  ledger.pending_ = false;
  return out;
}

}  // namespace hetealloc
