#pragma once

// Exact linear algebra over a field F (RationalField or PrimeField).
//
// Internally everything is sparse: a vector is a sorted list of (column,
// value) pairs and elimination maintains an incremental row echelon form.
// DenseMatrix is the value type exposed at the API boundary.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "etalab/field.hpp"

namespace etalab {

template <class E>
struct SparseEntry {
  std::uint32_t col;
  E value;
};

/// Sparse vector with strictly increasing column indices and no zero values.
template <class E>
using SparseVec = std::vector<SparseEntry<E>>;

/// a += scale * b, both sorted.
template <class F>
SparseVec<typename F::Element> axpy(const F& field, const SparseVec<typename F::Element>& a,
                                    const typename F::Element& scale,
                                    const SparseVec<typename F::Element>& b) {
  SparseVec<typename F::Element> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      auto v = field.mul(scale, b[j].value);
      if (!field.is_zero(v)) out.push_back({b[j].col, std::move(v)});
      ++j;
    } else {
      auto v = field.add(a[i].value, field.mul(scale, b[j].value));
      if (!field.is_zero(v)) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
void scale_in_place(const F& field, SparseVec<typename F::Element>& v,
                    const typename F::Element& s) {
  for (auto& e : v) e.value = field.mul(e.value, s);
}

/// Incremental row echelon form over a fixed number of columns. The pivot of
/// a row is its smallest column; pivot entries are normalized to 1.
template <class F>
class Echelon {
 public:
  using Element = typename F::Element;
  using Row = SparseVec<Element>;

  Echelon(F field, std::size_t ncols)
      : field_(std::move(field)), ncols_(ncols), pivot_row_(ncols, -1) {}

  const F& field() const { return field_; }
  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  /// Rows in insertion order; row(i) has pivot column pivot_of(i).
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::uint32_t pivot_of(std::size_t i) const { return rows_[i].front().col; }
  /// Row whose pivot is col, or nullptr.
  const Row* row_for_pivot(std::size_t col) const {
    return pivot_row_[col] < 0 ? nullptr : &rows_[pivot_row_[col]];
  }

  /// Remainder of v modulo the row space; it has no entries in pivot columns.
  Row reduce(const Row& v) const {
    if (rows_.empty()) return v;
    auto& spa = scratch();
    auto& live = live_flags();
    if (spa.size() < ncols_) {
      spa.resize(ncols_, field_.zero());
      live.resize(ncols_, 0);
    }
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    for (const auto& e : v) {
      spa[e.col] = e.value;
      live[e.col] = 1;
      heap.push(e.col);
    }
    Row out;
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      live[c] = 0;
      if (field_.is_zero(spa[c])) continue;
      int r = pivot_row_[c];
      if (r < 0) {
        out.push_back({c, spa[c]});
        spa[c] = field_.zero();
        continue;
      }
      Element coef = spa[c];
      spa[c] = field_.zero();
      const Row& prow = rows_[r];
      for (std::size_t k = 1; k < prow.size(); ++k) {
        auto col = prow[k].col;
        field_.sub_mul(spa[col], coef, prow[k].value);
        if (!live[col]) {
          live[col] = 1;
          heap.push(col);
        }
      }
    }
    return out;
  }

  bool contains(const Row& v) const { return reduce(v).empty(); }

  /// Adds v to the row space. Returns true when the rank grew.
  bool insert(const Row& v) {
    Row r = reduce(v);
    if (r.empty()) return false;
    if (!field_.is_one(r.front().value)) scale_in_place(field_, r, field_.inv(r.front().value));
    pivot_row_[r.front().col] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    reduced_ = false;
    return true;
  }

  /// Back-substitutes so that no row has an entry in another row's pivot column.
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_of(a) > pivot_of(b); });
    for (std::size_t i : order) {
      Row tail(rows_[i].begin() + 1, rows_[i].end());
      Row red = reduce(tail);
      Row fresh;
      fresh.reserve(red.size() + 1);
      fresh.push_back(rows_[i].front());
      fresh.insert(fresh.end(), red.begin(), red.end());
      rows_[i] = std::move(fresh);
    }
    reduced_ = true;
  }

  bool is_reduced() const { return reduced_; }

 private:
  static std::vector<Element>& scratch() {
    thread_local std::vector<Element> spa;
    return spa;
  }
  static std::vector<std::uint8_t>& live_flags() {
    thread_local std::vector<std::uint8_t> live;
    return live;
  }

  F field_;
  std::size_t ncols_;
  std::vector<int> pivot_row_;
  std::vector<Row> rows_;
  bool reduced_ = true;
};

/// Rank of the span of the given vectors in a space of dimension dim.
/// Rows are only head-reduced: elimination stops at the first column without
/// a pivot, which keeps stored rows short.
template <class F>
std::size_t rank_of(const F& field, std::size_t dim,
                    const std::vector<SparseVec<typename F::Element>>& vectors) {
  using E = typename F::Element;
  std::vector<SparseVec<E>> rows;
  std::vector<int> pivot(dim, -1);
  std::vector<E> acc(dim, field.zero());
  for (const auto& v : vectors) {
    if (v.empty()) continue;
    for (const auto& e : v) acc[e.col] = e.value;
    std::size_t c = v.front().col, hi = v.back().col;
    for (; c <= hi; ++c) {
      if (field.is_zero(acc[c])) continue;
      const int r = pivot[c];
      if (r < 0) break;
      const E coef = acc[c];
      acc[c] = field.zero();
      const auto& prow = rows[r];
      for (std::size_t k = 1; k < prow.size(); ++k) field.sub_mul(acc[prow[k].col], coef, prow[k].value);
      hi = std::max<std::size_t>(hi, prow.back().col);
    }
    if (c > hi) continue;
    SparseVec<E> row;
    const E inv = field.inv(acc[c]);
    for (std::size_t k = c; k <= hi; ++k) {
      if (!field.is_zero(acc[k])) row.push_back({static_cast<std::uint32_t>(k), field.mul(acc[k], inv)});
      acc[k] = field.zero();
    }
    pivot[c] = static_cast<int>(rows.size());
    rows.push_back(std::move(row));
    if (rows.size() == dim) break;
  }
  return rows.size();
}

/// Basis of the kernel of the linear map whose k-th column (image of the k-th
/// source basis vector) is columns[k]. Returned vectors live in source
/// coordinates and are in reduced echelon form.
template <class F>
std::vector<SparseVec<typename F::Element>> kernel_of(
    const F& field, std::size_t target_dim,
    const std::vector<SparseVec<typename F::Element>>& columns) {
  using E = typename F::Element;
  const std::size_t source_dim = columns.size();
  Echelon<F> ech(field, target_dim + source_dim);
  for (std::size_t k = 0; k < source_dim; ++k) {
    SparseVec<E> aug = columns[k];
    aug.push_back({static_cast<std::uint32_t>(target_dim + k), field.one()});
    ech.insert(aug);
  }
  ech.make_reduced();
  std::vector<std::pair<std::uint32_t, SparseVec<E>>> found;
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    if (ech.pivot_of(i) < target_dim) continue;
    SparseVec<E> v;
    for (const auto& e : ech.row(i))
      v.push_back({static_cast<std::uint32_t>(e.col - target_dim), e.value});
    found.emplace_back(ech.pivot_of(i), std::move(v));
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseVec<E>> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

/// Row-major dense matrix over F.
template <class F>
class DenseMatrix {
 public:
  using Element = typename F::Element;

  DenseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  static DenseMatrix identity(F field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Builds a matrix from integer rows; all rows must have equal length.
  static DenseMatrix from_rows(F field, const std::vector<std::vector<long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  /// Matrix whose k-th column is columns[k] (a vector of length rows).
  static DenseMatrix from_columns(F field, std::size_t rows,
                                  const std::vector<SparseVec<Element>>& columns) {
    DenseMatrix m(field, rows, columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k)
      for (const auto& e : columns[k]) m(e.col, k) = e.value;
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  SparseVec<Element> row_vector(std::size_t i) const {
    SparseVec<Element> v;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!field_.is_zero((*this)(i, j))) v.push_back({static_cast<std::uint32_t>(j), (*this)(i, j)});
    return v;
  }

  SparseVec<Element> column_vector(std::size_t j) const {
    SparseVec<Element> v;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!field_.is_zero((*this)(i, j))) v.push_back({static_cast<std::uint32_t>(i), (*this)(i, j)});
    return v;
  }

  std::vector<SparseVec<Element>> column_vectors() const {
    std::vector<SparseVec<Element>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column_vector(j));
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Element& e) { return field_.is_zero(e); });
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    DenseMatrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(i, k);
        if (a.field_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = a.field_.add(c(i, j), a.field_.mul(aik, b(k, j)));
      }
    return c;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

template <class F>
struct RrefResult {
  DenseMatrix<F> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form; zero rows are placed last.
template <class F>
RrefResult<F> rref(const DenseMatrix<F>& a) {
  Echelon<F> ech(a.field(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) ech.insert(a.row_vector(i));
  ech.make_reduced();
  std::vector<std::size_t> order(ech.rank());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return ech.pivot_of(x) < ech.pivot_of(y); });
  RrefResult<F> out{DenseMatrix<F>(a.field(), a.rows(), a.cols()), {}, ech.rank()};
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (const auto& e : ech.row(order[r])) out.reduced(r, e.col) = e.value;
    out.pivot_cols.push_back(ech.pivot_of(order[r]));
  }
  return out;
}

template <class F>
std::size_t rank(const DenseMatrix<F>& a) {
  return rank_of(a.field(), a.rows(), a.column_vectors());
}

/// Columns form a basis of {v : a v = 0}.
template <class F>
DenseMatrix<F> kernel_basis(const DenseMatrix<F>& a) {
  auto ker = kernel_of(a.field(), a.rows(), a.column_vectors());
  return DenseMatrix<F>::from_columns(a.field(), a.cols(), ker);
}

template <class F>
bool in_column_span(const DenseMatrix<F>& a, const std::vector<typename F::Element>& v) {
  if (v.size() != a.rows()) throw std::invalid_argument("in_column_span: length mismatch");
  Echelon<F> ech(a.field(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) ech.insert(a.column_vector(j));
  SparseVec<typename F::Element> sv;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!a.field().is_zero(v[i])) sv.push_back({static_cast<std::uint32_t>(i), v[i]});
  return ech.contains(sv);
}

}  // namespace etalab
