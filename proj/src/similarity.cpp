#include "hetealloc/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hetealloc/errors.hpp"

namespace hetealloc {
namespace {

double cosine(const SparseVector& u, const SparseVector& v) {
  const double nu = std::sqrt(dot(u, u));
  const double nv = std::sqrt(dot(v, v));
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::min(1.0, dot(u, v) / (nu * nv));
}

void require_binary(const SparseVector& mask) {
  for (double v : mask.values()) {
    if (v != 1.0) throw InvalidQuery("subset mask must be 0/1");
  }
}

}  // namespace

// ---- Network ----------------------------------------------------------------

Network::Network(SparseMatrix author_paper, SparseMatrix mesh_paper)
    : author_paper_(std::move(author_paper)), mesh_paper_(std::move(mesh_paper)) {
  if (author_paper_.cols() != mesh_paper_.cols()) {
    throw DimensionMismatch("author-paper and mesh-paper matrices disagree on the paper count (" +
                            std::to_string(author_paper_.cols()) + " vs " +
                            std::to_string(mesh_paper_.cols()) + ")");
  }
  paper_author_ = transpose(author_paper_);
  paper_mesh_ = transpose(mesh_paper_);
}

Network Network::weighted() const {
  return Network(author_paper_, weighted_incidence(mesh_paper_));
}

NetworkBuilder& NetworkBuilder::add_paper(const std::string& paper,
                                          const std::vector<std::string>& authors,
                                          const std::vector<std::string>& categories) {
  const Index p = nodes_.intern(paper, NodeType::Paper).index;
  for (const auto& a : authors) {
    author_paper_.push_back({nodes_.intern(a, NodeType::Author).index, p, 1.0});
  }
  for (const auto& m : categories) {
    mesh_paper_.push_back({nodes_.intern(m, NodeType::Mesh).index, p, 1.0});
  }
  return *this;
}

Network NetworkBuilder::build() const {
  const std::size_t papers = nodes_.size(NodeType::Paper);
  return Network(
      SparseMatrix::from_triplets(nodes_.size(NodeType::Author), papers, author_paper_),
      SparseMatrix::from_triplets(nodes_.size(NodeType::Mesh), papers, mesh_paper_));
}

namespace {
Index lookup(const NodeInterner& nodes, const std::string& label, NodeType type) {
  if (auto i = nodes.find(label, type)) return *i;
  throw std::out_of_range("unknown " + std::string(to_string(type)) + " '" + label + "'");
}
}  // namespace

Index NetworkBuilder::author(const std::string& label) const {
  return lookup(nodes_, label, NodeType::Author);
}
Index NetworkBuilder::paper(const std::string& label) const {
  return lookup(nodes_, label, NodeType::Paper);
}
Index NetworkBuilder::category(const std::string& label) const {
  return lookup(nodes_, label, NodeType::Mesh);
}

// ---- Normalisation ----------------------------------------------------------

SparseMatrix transition_matrix(const SparseMatrix& w) {
  CsrBuilder out(w.rows(), w.cols());
  std::vector<double> scaled;
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const auto row = static_cast<Index>(r);
    auto vals = w.row_values(row);
    const double total = w.row_sum(row);
    scaled.resize(vals.size());
    for (std::size_t k = 0; k < vals.size(); ++k) scaled[k] = vals[k] / total;
    out.append_row(w.row_indices(row), scaled);
  }
  return std::move(out).finish();
}

SparseMatrix weighted_incidence(const SparseMatrix& mesh_paper) {
  // Row-normalising the binary paper x category matrix gives 1/k per link.
  return transpose(transition_matrix(binarize(transpose(mesh_paper))));
}

// ---- Meta-path HeteSim ------------------------------------------------------

MetaPath MetaPath::reversed() const {
  return MetaPath{{node_types.rbegin(), node_types.rend()}};
}

void RelationRegistry::add(NodeType from, NodeType to, SparseMatrix adjacency) {
  relations_.insert_or_assign({from, to}, std::move(adjacency));
}

bool RelationRegistry::has(NodeType from, NodeType to) const {
  return relations_.contains({from, to}) || relations_.contains({to, from});
}

SparseMatrix RelationRegistry::adjacency(NodeType from, NodeType to) const {
  if (auto it = relations_.find({from, to}); it != relations_.end()) return it->second;
  if (auto it = relations_.find({to, from}); it != relations_.end()) {
    return transpose(it->second);
  }
  throw InvalidQuery("no relation registered between " + std::string(to_string(from)) +
                     " and " + std::string(to_string(to)));
}

SparseMatrix reachable_probability(const MetaPath& path, const RelationRegistry& relations) {
  if (path.node_types.size() < 2) throw InvalidQuery("a meta-path needs at least two node types");
  SparseMatrix pm = transition_matrix(relations.adjacency(path.node_types[0], path.node_types[1]));
  for (std::size_t i = 1; i + 1 < path.node_types.size(); ++i) {
    pm = matmul(pm, transition_matrix(
                        relations.adjacency(path.node_types[i], path.node_types[i + 1])));
  }
  return pm;
}

namespace {

struct SplitPath {
  MetaPath left;
  MetaPath right_reversed;
};

SplitPath split_at_middle(const MetaPath& path) {
  const std::size_t hops = path.hops();
  if (hops < 2 || hops % 2 != 0) {
    throw InvalidQuery("HeteSim needs a meta-path with an even number of hops");
  }
  const auto mid = static_cast<std::ptrdiff_t>(hops / 2);
  const auto& t = path.node_types;
  SplitPath s;
  s.left.node_types.assign(t.begin(), t.begin() + mid + 1);
  s.right_reversed.node_types.assign(t.rbegin(), t.rbegin() + mid + 1);
  return s;
}

}  // namespace

double hetesim(Index a, Index b, const MetaPath& path, const RelationRegistry& relations) {
  const SplitPath s = split_at_middle(path);
  return dot(reachable_probability(s.left, relations).row(a),
             reachable_probability(s.right_reversed, relations).row(b));
}

double hetesim_normalized(Index a, Index b, const MetaPath& path,
                          const RelationRegistry& relations) {
  const SplitPath s = split_at_middle(path);
  return cosine(reachable_probability(s.left, relations).row(a),
                reachable_probability(s.right_reversed, relations).row(b));
}

// ---- Author-category kernels -----------------------------------------------

double hetesim_author_mesh(Index a, Index m, const Network& net) {
  const SparseVector papers = net.author_paper().row(a);
  const SparseVector topic = net.mesh_paper().row(m);
  const double den = std::sqrt(entry_sum(papers)) * std::sqrt(entry_sum(topic));
  return den == 0.0 ? 0.0 : dot(papers, topic) / den;
}

double hetealloc(Index a, Index m, const SparseVector& mask, const Network& net) {
  if (mask.dim() != net.papers()) {
    throw DimensionMismatch("subset mask has dimension " + std::to_string(mask.dim()) +
                            ", network has " + std::to_string(net.papers()) + " papers");
  }
  require_binary(mask);
  const SparseVector papers = net.author_paper().row(a);
  const SparseVector masked = elementwise_product(mask, net.mesh_paper().row(m));
  const double den = std::sqrt(entry_sum(papers)) * std::sqrt(entry_sum(masked));
  return den == 0.0 ? 0.0 : dot(papers, masked) / den;
}

SparseVector subset_ha1(Index a, const Network& net) {
  const SparseVector coauthors = vecmat(net.author_paper().row(a), net.paper_author());
  return binarize(vecmat(coauthors, net.author_paper()));
}

SparseVector subset_ha2(Index a, Index m, const Network& net) {
  const SparseVector own = net.author_paper().row(a);
  const SparseVector on_topic = elementwise_product(own, binarize(net.mesh_paper().row(m)));
  const SparseVector coauthors = vecmat(on_topic, net.paper_author());
  return binarize(add(vecmat(coauthors, net.author_paper()), own));
}

SparseVector subset_ha3(Index a, Index p, const Network& net) {
  if (net.author_paper().at(a, p) == 0.0) {
    throw InvalidQuery("author " + std::to_string(a) + " is not an author of paper " +
                       std::to_string(p));
  }
  return binarize(vecmat(net.paper_author().row(p), net.author_paper()));
}

double hetealloc_ha1(Index a, Index m, const Network& net) {
  return hetealloc(a, m, subset_ha1(a, net), net);
}

double hetealloc_ha2(Index a, Index m, const Network& net) {
  return hetealloc(a, m, subset_ha2(a, m, net), net);
}

double hetealloc_ha3_paper(Index a, Index p, Index m, const Network& net) {
  if (net.mesh_paper().at(m, p) == 0.0) {
    throw InvalidQuery("paper " + std::to_string(p) + " does not carry category " +
                       std::to_string(m));
  }
  return hetealloc(a, m, subset_ha3(a, p, net), net);
}

double hetealloc_ha3(Index a, Index m, Aggregation aggregation, const Network& net) {
  double total = 0.0;
  std::size_t count = 0;
  for (Index p : net.author_paper().row_indices(a)) {
    if (net.mesh_paper().at(m, p) == 0.0) continue;
    total += hetealloc(a, m, subset_ha3(a, p, net), net);
    ++count;
  }
  if (count == 0) return 0.0;
  return aggregation == Aggregation::Sum ? total : total / static_cast<double>(count);
}

double baseline_similarity(Index a, Index m, const Network& net) {
  if (m >= net.categories()) {
    throw DimensionMismatch("category " + std::to_string(m) + " out of range");
  }
  std::size_t on_topic = 0;
  std::size_t incidences = 0;
  for (Index p : net.author_paper().row_indices(a)) {
    auto cats = net.paper_mesh().row_indices(p);
    incidences += cats.size();
    if (std::binary_search(cats.begin(), cats.end(), m)) ++on_topic;
  }
  if (incidences == 0) return 0.0;
  return std::sqrt(static_cast<double>(on_topic) / static_cast<double>(incidences));
}

}  // namespace hetealloc
