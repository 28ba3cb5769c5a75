#include "hetealloc/dynamic.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "hetealloc/errors.hpp"
#include "hetealloc/parallel.hpp"

namespace hetealloc {

// ---- ExpertiseStore ---------------------------------------------------------

std::optional<int> ExpertiseStore::year() const {
  if (snapshots_.empty()) return std::nullopt;
  return snapshots_.back().year;
}

const Snapshot& ExpertiseStore::latest() const {
  static const Snapshot kEmpty{};
  return snapshots_.empty() ? kEmpty : snapshots_.back();
}

const Snapshot* ExpertiseStore::at_year(int year) const {
  auto it = std::lower_bound(snapshots_.begin(), snapshots_.end(), year,
                             [](const Snapshot& s, int y) { return s.year < y; });
  if (it == snapshots_.end() || it->year != year) return nullptr;
  return &*it;
}

void ExpertiseStore::append(Snapshot snapshot) {
  if (!snapshots_.empty() && snapshot.year <= snapshots_.back().year) {
    throw OutOfOrderYear("snapshot for year " + std::to_string(snapshot.year) +
                         " does not follow year " + std::to_string(snapshots_.back().year));
  }
  snapshots_.push_back(std::move(snapshot));
}

// ---- DHA kernels ------------------------------------------------------------

DhaYearInput::DhaYearInput(SparseMatrix experience, SparseMatrix update,
                           SparseMatrix mesh_paper)
    : experience_(std::move(experience)),
      update_(std::move(update)),
      mesh_paper_(std::move(mesh_paper)) {
  if (experience_.rows() != update_.rows() || experience_.cols() != update_.cols()) {
    throw DimensionMismatch("experience and update matrices must share author and paper spaces");
  }
  if (mesh_paper_.cols() != update_.cols()) {
    throw DimensionMismatch("mesh-paper matrix does not cover the paper space");
  }
  update_t_ = transpose(update_);
  paper_mesh_ = transpose(mesh_paper_);
}

double dha_paper(Index a, Index p, Index m, const DhaYearInput& input) {
  if (input.update().at(a, p) == 0.0) {
    throw InvalidQuery("paper " + std::to_string(p) + " is not an update paper of author " +
                       std::to_string(a));
  }
  if (input.mesh_paper().at(m, p) == 0.0) {
    throw InvalidQuery("paper " + std::to_string(p) + " does not carry category " +
                       std::to_string(m));
  }
  const std::size_t n = input.update().cols();
  const SparseVector current = SparseVector::unit(n, p);
  const SparseVector x = add(input.experience().row(a), current);
  const SparseVector subset = binarize(
      add(vecmat(input.paper_author_update().row(p), input.experience()), current));
  const SparseVector v = elementwise_product(subset, input.mesh_paper().row(m));
  return dot(x, v) / std::sqrt(entry_sum(x) * entry_sum(v));
}

std::map<Index, double> dha_author_year(Index a, const DhaYearInput& input) {
  std::map<Index, double> out;
  for (Index p : input.update().row_indices(a)) {
    for (Index m : input.paper_mesh().row_indices(p)) out[m] += dha_paper(a, p, m, input);
  }
  return out;
}

namespace {

// Union of sorted index lists.
void merge_into(std::vector<Index>& acc, std::span<const Index> more, std::vector<Index>& scratch) {
  scratch.clear();
  std::set_union(acc.begin(), acc.end(), more.begin(), more.end(), std::back_inserter(scratch));
  acc.swap(scratch);
}

}  // namespace

std::vector<std::vector<std::pair<Index, double>>> dha_year_increments(
    const DhaYearInput& input, unsigned threads) {
  const SparseMatrix& exp = input.experience();
  const SparseMatrix& upd = input.update();
  const SparseMatrix& paper_mesh = input.paper_mesh();
  const std::size_t n_papers = upd.cols();

  // Per update paper p: for each category of p (in row order), the weighted
  // count of that category over p's subset (co-authors' history plus p).
  std::vector<std::vector<double>> subset_mass(n_papers);
  parallel_for(n_papers, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<Index> subset, scratch;
    for (std::size_t pi = begin; pi < end; ++pi) {
      const auto p = static_cast<Index>(pi);
      auto authors = input.paper_author_update().row_indices(p);
      if (authors.empty()) continue;
      auto cats = paper_mesh.row_indices(p);
      if (cats.empty()) continue;
      subset.assign(1, p);
      for (Index a : authors) merge_into(subset, exp.row_indices(a), scratch);

      std::vector<double> mass(cats.size(), 0.0);
      for (Index q : subset) {
        auto qc = paper_mesh.row_indices(q);
        auto qw = paper_mesh.row_values(q);
        for (std::size_t k = 0; k < qc.size(); ++k) {
          auto it = std::lower_bound(cats.begin(), cats.end(), qc[k]);
          if (it != cats.end() && *it == qc[k]) mass[static_cast<std::size_t>(it - cats.begin())] += qw[k];
        }
      }
      subset_mass[pi] = std::move(mass);
    }
  });

  std::vector<std::vector<std::pair<Index, double>>> out(upd.rows());
  parallel_for(upd.rows(), threads, [&](std::size_t begin, std::size_t end) {
    std::map<Index, double> history;  // category -> weighted count over a's experience
    std::map<Index, double> acc;
    for (std::size_t ai = begin; ai < end; ++ai) {
      const auto a = static_cast<Index>(ai);
      auto papers = upd.row_indices(a);
      if (papers.empty()) continue;
      history.clear();
      acc.clear();
      auto past = exp.row_indices(a);
      for (Index q : past) {
        auto qc = paper_mesh.row_indices(q);
        auto qw = paper_mesh.row_values(q);
        for (std::size_t k = 0; k < qc.size(); ++k) history[qc[k]] += qw[k];
      }
      const double experience_size = static_cast<double>(past.size()) + 1.0;
      for (Index p : papers) {
        auto cats = paper_mesh.row_indices(p);
        auto weights = paper_mesh.row_values(p);
        for (std::size_t k = 0; k < cats.size(); ++k) {
          auto h = history.find(cats[k]);
          const double numerator = (h == history.end() ? 0.0 : h->second) + weights[k];
          acc[cats[k]] += numerator / std::sqrt(experience_size * subset_mass[p][k]);
        }
      }
      out[ai].assign(acc.begin(), acc.end());
    }
  });
  return out;
}

// ---- Yearly drivers ---------------------------------------------------------

namespace {

int check_year(const ExpertiseStore& store, const YearLedger& ledger) {
  if (!ledger.has_pending_update()) throw OutOfOrderYear("ledger has no staged year");
  const int year = *ledger.year();
  if (auto last = store.year(); last && year != *last + 1) {
    throw OutOfOrderYear("store is at year " + std::to_string(*last) + ", ledger staged year " +
                         std::to_string(year));
  }
  return year;
}

// Copy of the latest snapshot re-stamped with `year`, with an (possibly empty)
// profile for every author of the year.
Snapshot next_snapshot(const ExpertiseStore& store, int year, const YearMatrices& ym,
                       const NodeInterner& nodes) {
  Snapshot s = store.latest();
  s.year = year;
  for (std::size_t a = 0; a < ym.update.rows(); ++a) {
    if (!ym.update.row_indices(static_cast<Index>(a)).empty()) {
      s.profiles[nodes.label(NodeType::Author, static_cast<Index>(a))];
    }
  }
  return s;
}

}  // namespace

ExpertiseStore run_year_dha(ExpertiseStore store, YearLedger& ledger,
                            const EngineOptions& options) {
  const int year = check_year(store, ledger);
  YearMatrices ym = materialize_year(ledger);
  const NodeInterner& nodes = ledger.nodes();
  Snapshot snapshot = next_snapshot(store, year, ym, nodes);

  SparseMatrix mesh = options.weighted ? weighted_incidence(ym.mesh_paper) : ym.mesh_paper;
  const DhaYearInput input(ym.experience, ym.update, std::move(mesh));
  const auto increments = dha_year_increments(input, options.threads);
  for (std::size_t a = 0; a < increments.size(); ++a) {
    if (increments[a].empty()) continue;
    Profile& profile = snapshot.profiles[nodes.label(NodeType::Author, static_cast<Index>(a))];
    for (const auto& [m, value] : increments[a]) {
      profile[nodes.label(NodeType::Mesh, m)] += value;
    }
  }
  store.append(std::move(snapshot));
  return store;
}

ExpertiseStore run_year_bl(ExpertiseStore store, YearLedger& ledger) {
  const int year = check_year(store, ledger);
  YearMatrices ym = materialize_year(ledger);
  const NodeInterner& nodes = ledger.nodes();
  Snapshot snapshot = next_snapshot(store, year, ym, nodes);

  const SparseMatrix paper_mesh = transpose(ym.mesh_paper);
  for (std::size_t a = 0; a < ym.update.rows(); ++a) {
    auto papers = ym.update.row_indices(static_cast<Index>(a));
    if (papers.empty()) continue;
    Profile& profile = snapshot.profiles[nodes.label(NodeType::Author, static_cast<Index>(a))];
    for (Index p : papers) {
      for (Index m : paper_mesh.row_indices(p)) profile[nodes.label(NodeType::Mesh, m)] += 1.0;
    }
  }
  store.append(std::move(snapshot));
  return store;
}

ExpertiseStore run_year_similarity(ExpertiseStore store, YearLedger& ledger,
                                   SimilarityMethod method, Aggregation aggregation,
                                   const EngineOptions& options) {
  const int year = check_year(store, ledger);
  YearMatrices ym = materialize_year(ledger);
  const NodeInterner& nodes = ledger.nodes();

  Network net(add(ym.experience, ym.update), ym.mesh_paper);
  if (options.weighted) net = net.weighted();

  std::vector<std::vector<std::pair<Index, double>>> values(net.authors());
  parallel_for(net.authors(), options.threads, [&](std::size_t begin, std::size_t end) {
    std::vector<Index> cats;
    for (std::size_t ai = begin; ai < end; ++ai) {
      const auto a = static_cast<Index>(ai);
      cats.clear();
      for (Index p : net.author_paper().row_indices(a)) {
        auto pc = net.paper_mesh().row_indices(p);
        cats.insert(cats.end(), pc.begin(), pc.end());
      }
      std::sort(cats.begin(), cats.end());
      cats.erase(std::unique(cats.begin(), cats.end()), cats.end());
      SparseVector ha1_mask;
      if (method == SimilarityMethod::Ha1 && !cats.empty()) ha1_mask = subset_ha1(a, net);
      for (Index m : cats) {
        double v = 0.0;
        switch (method) {
          case SimilarityMethod::HeteSim:
            v = hetesim_author_mesh(a, m, net);
            break;
          case SimilarityMethod::Ha1:
            v = hetealloc(a, m, ha1_mask, net);
            break;
          case SimilarityMethod::Ha2:
            v = hetealloc_ha2(a, m, net);
            break;
          case SimilarityMethod::Ha3:
            v = hetealloc_ha3(a, m, aggregation, net);
            break;
        }
        values[ai].emplace_back(m, v);
      }
    }
  });

  Snapshot snapshot;
  snapshot.year = year;
  for (std::size_t a = 0; a < net.authors(); ++a) {
    if (net.author_paper().row_indices(static_cast<Index>(a)).empty()) continue;
    Profile& profile = snapshot.profiles[nodes.label(NodeType::Author, static_cast<Index>(a))];
    for (const auto& [m, v] : values[a]) profile[nodes.label(NodeType::Mesh, m)] = v;
  }
  store.append(std::move(snapshot));
  return store;
}

}  // namespace hetealloc
