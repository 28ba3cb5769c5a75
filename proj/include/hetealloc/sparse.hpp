#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hetealloc/interner.hpp"

namespace hetealloc {

struct Triplet {
  Index row;
  Index col;
  double value = 1.0;
};

// Sorted-index sparse vector. Explicit zeros are never stored.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}
  // Indices must be strictly increasing and < dim; zero values are dropped.
  SparseVector(std::size_t dim, std::vector<Index> indices,
               std::vector<double> values);

  static SparseVector unit(std::size_t dim, Index i, double value = 1.0);
  static SparseVector from_dense(std::span<const double> dense);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::span<const Index> indices() const noexcept { return indices_; }
  std::span<const double> values() const noexcept { return values_; }

  double at(Index i) const;
  bool contains(Index i) const { return at(i) != 0.0; }
  std::vector<double> to_dense() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Index> indices_;
  std::vector<double> values_;
};

// Compressed sparse row matrix over non-negative weights. Immutable once built.
class SparseMatrix {
 public:
  SparseMatrix() : row_ptr_(1, 0) {}
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  // One entry per distinct (row, col). Repeats with an equal value collapse;
  // repeats with a different value throw ConflictingLink. Values must be > 0.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::span<const Triplet> triplets);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return col_idx_.size(); }

  std::span<const Index> row_indices(Index r) const;
  std::span<const double> row_values(Index r) const;
  SparseVector row(Index r) const;
  double at(Index r, Index c) const;
  double row_sum(Index r) const;

  std::vector<Triplet> triplets() const;
  bool is_binary() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  friend class CsrBuilder;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<Index> col_idx_;
  std::vector<double> values_;
};

// Row-by-row construction for kernels that produce already sorted rows.
class CsrBuilder {
 public:
  CsrBuilder(std::size_t rows, std::size_t cols);
  // Rows must be appended in order; indices sorted and unique within a row.
  void append_row(std::span<const Index> indices, std::span<const double> values);
  SparseMatrix finish() &&;

 private:
  SparseMatrix m_;
  std::size_t next_row_ = 0;
};

SparseMatrix transpose(const SparseMatrix& m);
SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix binarize(const SparseMatrix& m);

// m * v, v indexed by the columns of m.
SparseVector matvec(const SparseMatrix& m, const SparseVector& v);
// v' * m, v indexed by the rows of m.
SparseVector vecmat(const SparseVector& v, const SparseMatrix& m);

SparseVector elementwise_product(const SparseVector& u, const SparseVector& v);
SparseVector add(const SparseVector& u, const SparseVector& v);
SparseVector binarize(const SparseVector& v);
double dot(const SparseVector& u, const SparseVector& v);
double entry_sum(const SparseVector& v);

struct LabeledLink {
  std::string row_label;
  std::string col_label;
  double value = 1.0;
};

// Interns both endpoints and builds the incidence matrix. The shape is the
// interner's current size for each node type, so matrices built against the
// same interner share index spaces.
SparseMatrix build_incidence(std::span<const LabeledLink> links, NodeType row_type,
                             NodeType col_type, NodeInterner& nodes);

}  // namespace hetealloc
