#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetealloc/interner.hpp"
#include "hetealloc/sparse.hpp"

namespace hetealloc {

struct AuthorPaperLink {
  std::string author;
  std::string paper;

  friend bool operator==(const AuthorPaperLink&, const AuthorPaperLink&) = default;
};

struct PaperMeshLink {
  std::string paper;
  std::string category;
  double weight = 1.0;
};

// Papers are identified by (label, year): a label reused in a later year is a
// new publication. Node labels take the form "label@year".
std::string paper_node_label(std::string_view label, int year);

struct YearMatrices;
class YearLedger;
YearMatrices materialize_year(YearLedger& ledger);

// Cumulative link lists for the yearly engine. Experience links cover every
// year strictly before the staged one; update links hold the staged year.
// Owns the node interner so index spaces only ever grow across years.
class YearLedger {
 public:
  // Stages `year`. Paper labels are raw and get qualified with the year.
  // Every mesh link must name a paper of this year. Throws OutOfOrderYear if
  // `year` does not follow the last staged year, and DataError on dangling
  // mesh links.
  void stage_year(int year, std::span<const AuthorPaperLink> links,
                  std::span<const PaperMeshLink> mesh_links);

  std::optional<int> year() const noexcept { return year_; }
  bool has_pending_update() const noexcept { return pending_; }

  const std::vector<AuthorPaperLink>& experience_links() const noexcept {
    return experience_;
  }
  const std::vector<AuthorPaperLink>& update_links() const noexcept {
    return update_;
  }
  const std::vector<PaperMeshLink>& paper_mesh_links() const noexcept {
    return mesh_;
  }

  const NodeInterner& nodes() const noexcept { return nodes_; }

 private:
  friend YearMatrices materialize_year(YearLedger& ledger);

  std::optional<int> year_;
  bool pending_ = false;
  std::vector<AuthorPaperLink> experience_;
  std::vector<AuthorPaperLink> update_;
  std::vector<PaperMeshLink> mesh_;
  std::size_t mesh_materialized_ = 0;
  NodeInterner nodes_;
};

// Author x paper incidence split into history and the current year, plus the
// category x paper incidence covering every paper seen so far. All three share
// the ledger's index spaces.
struct YearMatrices {
  int year = 0;
  SparseMatrix experience;
  SparseMatrix update;
  SparseMatrix mesh_paper;
};

// Maps the staged year to matrices and folds the update links into the
// experience list. Duplicate links within the year collapse to one entry.
YearMatrices materialize_year(YearLedger& ledger);

}  // namespace hetealloc
