#pragma once

// Exact linear algebra over Q and Q(i): dense matrices with reduced row
// echelon form, plus an incremental sparse echelon basis for rank counts of
// many sparse vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cliffk/scalar.hpp"

namespace cliffk {

template <class S>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return is_zero(x); });
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
template <class S>
std::vector<std::size_t> rref(DenseMatrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const S inv = S(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(DenseMatrix<S> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> nullspace(DenseMatrix<S> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(m.cols());
    v[free] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!is_zero(m(r, free))) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Sparse vector: strictly increasing indices, no zero values.
template <class S>
using SparseVector = std::vector<std::pair<std::uint64_t, S>>;

/// Echelon basis grown one vector at a time. Each stored vector is keyed by
/// its leading index and normalized to leading coefficient 1.
template <class S>
class EchelonBasis {
 public:
  /// Reduces `v` against the basis; keeps it if independent. Returns whether
  /// the dimension grew.
  bool insert(SparseVector<S> v) {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) break;
      v = axpy(v, it->second, v.front().second);
    }
    if (v.empty()) return false;
    const S inv = S(1) / v.front().second;
    for (auto& [idx, val] : v) val = val * inv;
    const auto lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  std::size_t dimension() const { return pivots_.size(); }

 private:
  // v - factor * w
  static SparseVector<S> axpy(const SparseVector<S>& v, const SparseVector<S>& w, const S& factor) {
    SparseVector<S> out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
      if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || w[j].first < v[i].first) {
        out.emplace_back(w[j].first, -(factor * w[j].second));
        ++j;
      } else {
        S val = v[i].second - factor * w[j].second;
        if (!is_zero(val)) out.emplace_back(v[i].first, std::move(val));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<std::uint64_t, SparseVector<S>> pivots_;
};

template <class S>
std::size_t sparse_rank(const std::vector<SparseVector<S>>& vectors) {
  EchelonBasis<S> basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.dimension();
}

}  // namespace cliffk
