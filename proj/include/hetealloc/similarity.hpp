#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hetealloc/interner.hpp"
#include "hetealloc/sparse.hpp"

namespace hetealloc {

// Static author-paper-category network. author_paper is 0/1; mesh_paper is
// 0/1 or carries per-link weights (see weighted_incidence). Both share the
// paper index space. Transposes are kept alongside for column access.
class Network {
 public:
  Network() = default;
  Network(SparseMatrix author_paper, SparseMatrix mesh_paper);

  const SparseMatrix& author_paper() const noexcept { return author_paper_; }
  const SparseMatrix& paper_author() const noexcept { return paper_author_; }
  const SparseMatrix& mesh_paper() const noexcept { return mesh_paper_; }
  const SparseMatrix& paper_mesh() const noexcept { return paper_mesh_; }

  std::size_t authors() const noexcept { return author_paper_.rows(); }
  std::size_t papers() const noexcept { return author_paper_.cols(); }
  std::size_t categories() const noexcept { return mesh_paper_.rows(); }

  // Same network with each paper's category links weighted 1/k.
  Network weighted() const;

 private:
  SparseMatrix author_paper_;
  SparseMatrix paper_author_;
  SparseMatrix mesh_paper_;
  SparseMatrix paper_mesh_;
};

// Convenience for fixtures and bindings: papers listed with their authors and
// categories.
class NetworkBuilder {
 public:
  NetworkBuilder& add_paper(const std::string& paper,
                            const std::vector<std::string>& authors,
                            const std::vector<std::string>& categories);
  Network build() const;
  const NodeInterner& nodes() const noexcept { return nodes_; }
  Index author(const std::string& label) const;
  Index paper(const std::string& label) const;
  Index category(const std::string& label) const;

 private:
  NodeInterner nodes_;
  std::vector<Triplet> author_paper_;
  std::vector<Triplet> mesh_paper_;
};

// Row-normalised copy of w; empty rows stay empty.
SparseMatrix transition_matrix(const SparseMatrix& w);

// Column-normalised binary support: each paper's category links get weight
// 1 / (number of categories of that paper).
SparseMatrix weighted_incidence(const SparseMatrix& mesh_paper);

// ---- Meta-path HeteSim -----------------------------------------------------

struct MetaPath {
  std::vector<NodeType> node_types;

  std::size_t hops() const { return node_types.empty() ? 0 : node_types.size() - 1; }
  MetaPath reversed() const;
};

// Adjacency matrices keyed by (source type, target type). A hop whose reverse
// is registered uses the transpose.
class RelationRegistry {
 public:
  void add(NodeType from, NodeType to, SparseMatrix adjacency);
  SparseMatrix adjacency(NodeType from, NodeType to) const;
  bool has(NodeType from, NodeType to) const;

 private:
  std::map<std::pair<NodeType, NodeType>, SparseMatrix> relations_;
};

// Ordered product of the transition matrices along the path.
SparseMatrix reachable_probability(const MetaPath& path, const RelationRegistry& relations);

// Meeting-point form: PM_left(a,:) . PM_right_reversed(b,:). Requires an even
// number of hops.
double hetesim(Index a, Index b, const MetaPath& path, const RelationRegistry& relations);

// Cosine of the two reachable-probability rows; 0 if either row is empty.
double hetesim_normalized(Index a, Index b, const MetaPath& path,
                          const RelationRegistry& relations);

// ---- Author-category kernels ----------------------------------------------

// Adjacency form on Author-Paper-Mesh:
//   papers(a) with m / sqrt(|papers(a)| * |papers with m|)
double hetesim_author_mesh(Index a, Index m, const Network& net);

// Subset-filtered HeteSim. `mask` lives in paper space. Any zero factor in
// the denominator yields 0.
double hetealloc(Index a, Index m, const SparseVector& mask, const Network& net);

// Papers reachable along Author-Paper-Author-Paper (own and co-authors').
SparseVector subset_ha1(Index a, const Network& net);
// Own papers plus the papers of anyone who co-authored a paper carrying m
// with a.
SparseVector subset_ha2(Index a, Index m, const Network& net);
// Papers of every author of p. Throws InvalidQuery if a did not write p.
SparseVector subset_ha3(Index a, Index p, const Network& net);

enum class Aggregation { Sum, Average };

// Per-paper HeteAlloc over a's papers carrying m, each with the focal-paper
// subset, combined by sum or mean. 0 when a has no such paper.
double hetealloc_ha3(Index a, Index m, Aggregation aggregation, const Network& net);
double hetealloc_ha3_paper(Index a, Index p, Index m, const Network& net);

double hetealloc_ha1(Index a, Index m, const Network& net);
double hetealloc_ha2(Index a, Index m, const Network& net);

// sqrt(papers of a with m / total author-category incidences of a), computed
// on the binary support of mesh_paper.
double baseline_similarity(Index a, Index m, const Network& net);

}  // namespace hetealloc
