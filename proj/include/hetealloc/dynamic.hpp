#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hetealloc/ledger.hpp"
#include "hetealloc/similarity.hpp"
#include "hetealloc/sparse.hpp"

namespace hetealloc {

using Profile = std::map<std::string, double>;  // category -> expertise

struct Snapshot {
  int year = 0;
  std::map<std::string, Profile> profiles;  // author -> profile

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

// Append-only series of yearly snapshots.
class ExpertiseStore {
 public:
  bool empty() const noexcept { return snapshots_.empty(); }
  std::optional<int> year() const;

  // Latest snapshot; an empty snapshot when the store is empty.
  const Snapshot& latest() const;
  const Snapshot* at_year(int year) const;
  const std::vector<Snapshot>& snapshots() const noexcept { return snapshots_; }

  // Years must be strictly increasing.
  void append(Snapshot snapshot);

  friend bool operator==(const ExpertiseStore&, const ExpertiseStore&) = default;

 private:
  std::vector<Snapshot> snapshots_;
};

// Frozen matrices for one year of DHA. Experience and update are author x
// paper; mesh_paper is category x paper over every paper seen so far.
class DhaYearInput {
 public:
  DhaYearInput(SparseMatrix experience, SparseMatrix update, SparseMatrix mesh_paper);

  const SparseMatrix& experience() const noexcept { return experience_; }
  const SparseMatrix& update() const noexcept { return update_; }
  const SparseMatrix& paper_author_update() const noexcept { return update_t_; }
  const SparseMatrix& mesh_paper() const noexcept { return mesh_paper_; }
  const SparseMatrix& paper_mesh() const noexcept { return paper_mesh_; }

 private:
  SparseMatrix experience_;
  SparseMatrix update_;
  SparseMatrix update_t_;
  SparseMatrix mesh_paper_;
  SparseMatrix paper_mesh_;
};

// Credit of author a for category m from update paper p:
//
//   x = experience(a,:) + e_p
//   s = binarize(update(:,p)' * experience + e_p)   (co-authors' history + p)
//   v = s .* mesh_paper(m,:)
//   dha = x . v / sqrt(sum(x) * sum(v))
//
// Throws InvalidQuery if (a,p) is not an update link or p does not carry m.
double dha_paper(Index a, Index p, Index m, const DhaYearInput& input);

// Sum of dha_paper over a's update papers, per category. Empty when a has no
// update paper.
std::map<Index, double> dha_author_year(Index a, const DhaYearInput& input);

// dha_author_year for every author, evaluated per paper so each subset is
// built once. Row i holds (category, increment) pairs sorted by category.
// Deterministic for any thread count.
std::vector<std::vector<std::pair<Index, double>>> dha_year_increments(
    const DhaYearInput& input, unsigned threads = 1);

struct EngineOptions {
  bool weighted = false;  // DHA / similarity methods only
  unsigned threads = 1;
};

// One year of DHA. The ledger must hold the staged year store.year() + 1 (any
// year when the store is empty); it is advanced as a side effect.
ExpertiseStore run_year_dha(ExpertiseStore store, YearLedger& ledger,
                            const EngineOptions& options = {});

// One year of cumulative counting: every update link adds 1 to each category
// of the paper.
ExpertiseStore run_year_bl(ExpertiseStore store, YearLedger& ledger);

enum class SimilarityMethod { HeteSim, Ha1, Ha2, Ha3 };

// Static similarity over the cumulative network up to the staged year. Only
// (author, category) pairs with at least one shared paper are stored.
ExpertiseStore run_year_similarity(ExpertiseStore store, YearLedger& ledger,
                                   SimilarityMethod method, Aggregation aggregation,
                                   const EngineOptions& options = {});

}  // namespace hetealloc
