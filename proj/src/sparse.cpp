#include "hetealloc/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hetealloc/errors.hpp"

namespace hetealloc {
namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_dim(const SparseVector& u, const SparseVector& v, const char* op) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch(std::string(op) + ": vector dimensions " +
                            std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
  }
}

// Scatter accumulator reused across rows of a kernel.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : dense_(dim, 0.0), seen_(dim, false) {}

  void add(Index i, double v) {
    if (!seen_[i]) {
      seen_[i] = true;
      touched_.push_back(i);
    }
    dense_[i] += v;
  }

  // Emits the sorted nonzero entries and resets.
  void drain(std::vector<Index>& idx, std::vector<double>& val) {
    std::sort(touched_.begin(), touched_.end());
    idx.clear();
    val.clear();
    for (Index i : touched_) {
      if (dense_[i] != 0.0) {
        idx.push_back(i);
        val.push_back(dense_[i]);
      }
      dense_[i] = 0.0;
      seen_[i] = false;
    }
    touched_.clear();
  }

 private:
  std::vector<double> dense_;
  std::vector<bool> seen_;
  std::vector<Index> touched_;
};

}  // namespace

// ---- SparseVector -----------------------------------------------------------

SparseVector::SparseVector(std::size_t dim, std::vector<Index> indices,
                           std::vector<double> values)
    : dim_(dim) {
  if (indices.size() != values.size()) {
    throw std::invalid_argument("SparseVector: index/value length mismatch");
  }
  indices_.reserve(indices.size());
  values_.reserve(values.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= dim) {
      throw DimensionMismatch("SparseVector: index " + std::to_string(indices[k]) +
                              " out of range for dimension " + std::to_string(dim));
    }
    if (k > 0 && indices[k] <= indices[k - 1]) {
      throw std::invalid_argument("SparseVector: indices must be strictly increasing");
    }
    if (values[k] != 0.0) {
      indices_.push_back(indices[k]);
      values_.push_back(values[k]);
    }
  }
}

SparseVector SparseVector::unit(std::size_t dim, Index i, double value) {
  return SparseVector(dim, {i}, {value});
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector v(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) {
      v.indices_.push_back(static_cast<Index>(i));
      v.values_.push_back(dense[i]);
    }
  }
  return v;
}

double SparseVector::at(Index i) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
  if (it == indices_.end() || *it != i) return 0.0;
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) out[indices_[k]] = values_[k];
  return out;
}

// ---- SparseMatrix -----------------------------------------------------------

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::span<const Triplet> triplets) {
  std::vector<Triplet> sorted(triplets.begin(), triplets.end());
  for (const Triplet& t : sorted) {
    if (t.row >= rows || t.col >= cols) {
      throw DimensionMismatch("entry (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ") outside " + shape(rows, cols));
    }
    if (!(t.value > 0.0)) {
      throw std::invalid_argument("incidence values must be positive");
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m(rows, cols);
  m.col_idx_.reserve(sorted.size());
  m.values_.reserve(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const Triplet& t = sorted[k];
    if (k > 0 && sorted[k - 1].row == t.row && sorted[k - 1].col == t.col) {
      if (sorted[k - 1].value != t.value) {
        throw ConflictingLink("link (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ") given with weights " +
                              std::to_string(sorted[k - 1].value) + " and " +
                              std::to_string(t.value));
      }
      continue;
    }
    m.col_idx_.push_back(t.col);
    m.values_.push_back(t.value);
    ++m.row_ptr_[t.row + 1];
  }
  std::partial_sum(m.row_ptr_.begin(), m.row_ptr_.end(), m.row_ptr_.begin());
  return m;
}

std::span<const Index> SparseMatrix::row_indices(Index r) const {
  if (r >= rows_) throw DimensionMismatch("row " + std::to_string(r) + " outside " + shape(rows_, cols_));
  return {col_idx_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
}

std::span<const double> SparseMatrix::row_values(Index r) const {
  if (r >= rows_) throw DimensionMismatch("row " + std::to_string(r) + " outside " + shape(rows_, cols_));
  return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
}

SparseVector SparseMatrix::row(Index r) const {
  auto idx = row_indices(r);
  auto val = row_values(r);
  return SparseVector(cols_, {idx.begin(), idx.end()}, {val.begin(), val.end()});
}

double SparseMatrix::at(Index r, Index c) const {
  if (c >= cols_) throw DimensionMismatch("column " + std::to_string(c) + " outside " + shape(rows_, cols_));
  auto idx = row_indices(r);
  auto it = std::lower_bound(idx.begin(), idx.end(), c);
  if (it == idx.end() || *it != c) return 0.0;
  return row_values(r)[static_cast<std::size_t>(it - idx.begin())];
}

double SparseMatrix::row_sum(Index r) const {
  auto val = row_values(r);
  return std::accumulate(val.begin(), val.end(), 0.0);
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      out.push_back({static_cast<Index>(r), col_idx_[k], values_[k]});
    }
  }
  return out;
}

bool SparseMatrix::is_binary() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 1.0; });
}

CsrBuilder::CsrBuilder(std::size_t rows, std::size_t cols) : m_(rows, cols) {}

void CsrBuilder::append_row(std::span<const Index> indices, std::span<const double> values) {
  if (next_row_ >= m_.rows_) throw DimensionMismatch("CsrBuilder: too many rows");
  m_.col_idx_.insert(m_.col_idx_.end(), indices.begin(), indices.end());
  m_.values_.insert(m_.values_.end(), values.begin(), values.end());
  ++next_row_;
  m_.row_ptr_[next_row_] = m_.col_idx_.size();
}

SparseMatrix CsrBuilder::finish() && {
  for (; next_row_ < m_.rows_; ++next_row_) m_.row_ptr_[next_row_ + 1] = m_.col_idx_.size();
  return std::move(m_);
}

// ---- Matrix kernels ---------------------------------------------------------

SparseMatrix transpose(const SparseMatrix& m) {
  std::vector<std::size_t> counts(m.cols() + 1, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (Index c : m.row_indices(static_cast<Index>(r))) ++counts[c + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  std::vector<Index> idx(m.nnz());
  std::vector<double> val(m.nnz());
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto ri = m.row_indices(static_cast<Index>(r));
    auto rv = m.row_values(static_cast<Index>(r));
    for (std::size_t k = 0; k < ri.size(); ++k) {
      const std::size_t pos = cursor[ri[k]]++;
      idx[pos] = static_cast<Index>(r);
      val[pos] = rv[k];
    }
  }
  CsrBuilder b(m.cols(), m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::size_t n = counts[c + 1] - counts[c];
    b.append_row({idx.data() + counts[c], n}, {val.data() + counts[c], n});
  }
  return std::move(b).finish();
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + shape(a.rows(), a.cols()) + " by " +
                            shape(b.rows(), b.cols()));
  }
  Accumulator acc(b.cols());
  std::vector<Index> idx;
  std::vector<double> val;
  CsrBuilder out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto ai = a.row_indices(static_cast<Index>(r));
    auto av = a.row_values(static_cast<Index>(r));
    for (std::size_t k = 0; k < ai.size(); ++k) {
      auto bi = b.row_indices(ai[k]);
      auto bv = b.row_values(ai[k]);
      for (std::size_t j = 0; j < bi.size(); ++j) acc.add(bi[j], av[k] * bv[j]);
    }
    acc.drain(idx, val);
    out.append_row(idx, val);
  }
  return std::move(out).finish();
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("add: " + shape(a.rows(), a.cols()) + " and " +
                            shape(b.rows(), b.cols()));
  }
  CsrBuilder out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector s = add(a.row(static_cast<Index>(r)), b.row(static_cast<Index>(r)));
    out.append_row(s.indices(), s.values());
  }
  return std::move(out).finish();
}

SparseMatrix binarize(const SparseMatrix& m) {
  CsrBuilder out(m.rows(), m.cols());
  std::vector<double> ones;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto idx = m.row_indices(static_cast<Index>(r));
    ones.assign(idx.size(), 1.0);
    out.append_row(idx, ones);
  }
  return std::move(out).finish();
}

SparseVector matvec(const SparseMatrix& m, const SparseVector& v) {
  if (m.cols() != v.dim()) {
    throw DimensionMismatch("matvec: " + shape(m.rows(), m.cols()) + " by vector of " +
                            std::to_string(v.dim()));
  }
  std::vector<Index> idx;
  std::vector<double> val;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto ri = m.row_indices(static_cast<Index>(r));
    auto rv = m.row_values(static_cast<Index>(r));
    double s = 0.0;
    // Merge the row against v.
    std::size_t i = 0, j = 0;
    auto vi = v.indices();
    auto vv = v.values();
    while (i < ri.size() && j < vi.size()) {
      if (ri[i] < vi[j]) {
        ++i;
      } else if (vi[j] < ri[i]) {
        ++j;
      } else {
        s += rv[i++] * vv[j++];
      }
    }
    if (s != 0.0) {
      idx.push_back(static_cast<Index>(r));
      val.push_back(s);
    }
  }
  return SparseVector(m.rows(), std::move(idx), std::move(val));
}

SparseVector vecmat(const SparseVector& v, const SparseMatrix& m) {
  if (m.rows() != v.dim()) {
    throw DimensionMismatch("vecmat: vector of " + std::to_string(v.dim()) + " by " +
                            shape(m.rows(), m.cols()));
  }
  Accumulator acc(m.cols());
  auto vi = v.indices();
  auto vv = v.values();
  for (std::size_t k = 0; k < vi.size(); ++k) {
    auto ri = m.row_indices(vi[k]);
    auto rv = m.row_values(vi[k]);
    for (std::size_t j = 0; j < ri.size(); ++j) acc.add(ri[j], vv[k] * rv[j]);
  }
  std::vector<Index> idx;
  std::vector<double> val;
  acc.drain(idx, val);
  return SparseVector(m.cols(), std::move(idx), std::move(val));
}

// ---- Vector kernels ---------------------------------------------------------

SparseVector elementwise_product(const SparseVector& u, const SparseVector& v) {
  require_same_dim(u, v, "elementwise_product");
  std::vector<Index> idx;
  std::vector<double> val;
  auto ui = u.indices();
  auto uv = u.values();
  auto vi = v.indices();
  auto vv = v.values();
  std::size_t i = 0, j = 0;
  while (i < ui.size() && j < vi.size()) {
    if (ui[i] < vi[j]) {
      ++i;
    } else if (vi[j] < ui[i]) {
      ++j;
    } else {
      idx.push_back(ui[i]);
      val.push_back(uv[i++] * vv[j++]);
    }
  }
  return SparseVector(u.dim(), std::move(idx), std::move(val));
}

SparseVector add(const SparseVector& u, const SparseVector& v) {
  require_same_dim(u, v, "add");
  std::vector<Index> idx;
  std::vector<double> val;
  auto ui = u.indices();
  auto uv = u.values();
  auto vi = v.indices();
  auto vv = v.values();
  std::size_t i = 0, j = 0;
  while (i < ui.size() || j < vi.size()) {
    if (j == vi.size() || (i < ui.size() && ui[i] < vi[j])) {
      idx.push_back(ui[i]);
      val.push_back(uv[i++]);
    } else if (i == ui.size() || vi[j] < ui[i]) {
      idx.push_back(vi[j]);
      val.push_back(vv[j++]);
    } else {
      idx.push_back(ui[i]);
      val.push_back(uv[i++] + vv[j++]);
    }
  }
  return SparseVector(u.dim(), std::move(idx), std::move(val));
}

SparseVector binarize(const SparseVector& v) {
  auto idx = v.indices();
  return SparseVector(v.dim(), {idx.begin(), idx.end()}, std::vector<double>(idx.size(), 1.0));
}

double dot(const SparseVector& u, const SparseVector& v) {
  return entry_sum(elementwise_product(u, v));
}

double entry_sum(const SparseVector& v) {
  auto val = v.values();
  return std::accumulate(val.begin(), val.end(), 0.0);
}

// ---- Incidence construction -------------------------------------------------

SparseMatrix build_incidence(std::span<const LabeledLink> links, NodeType row_type,
                             NodeType col_type, NodeInterner& nodes) {
  std::vector<Triplet> triplets;
  triplets.reserve(links.size());
  for (const LabeledLink& l : links) {
    if (!(l.value > 0.0)) {
      throw std::invalid_argument("link " + l.row_label + " -> " + l.col_label +
                                  " has a non-positive value");
    }
    const Index r = nodes.intern(l.row_label, row_type).index;
    const Index c = nodes.intern(l.col_label, col_type).index;
    triplets.push_back({r, c, l.value});
  }
  return SparseMatrix::from_triplets(nodes.size(row_type), nodes.size(col_type), triplets);
}

}  // namespace hetealloc
