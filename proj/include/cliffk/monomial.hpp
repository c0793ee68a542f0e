#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cliffk/linalg.hpp"
#include "cliffk/scalar.hpp"

namespace cliffk {

/// Square matrix with exactly one nonzero entry per column, each a power of
/// i. Column c has entry i^phase(c) in row row(c). Real matrices use only
/// phases 0 and 2, i.e. they are signed permutation matrices.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  /// Throws std::invalid_argument unless `rows` is a permutation.
  MonomialMatrix(std::vector<std::uint32_t> rows, std::vector<std::uint8_t> phases);

  static MonomialMatrix identity(std::size_t n);
  /// i^phase * I
  static MonomialMatrix scalar(std::size_t n, int phase);

  std::size_t size() const { return rows_.size(); }
  std::uint32_t row(std::size_t col) const { return rows_[col]; }
  int phase(std::size_t col) const { return phases_[col]; }

  bool is_real() const;
  /// Returns the phase k when the matrix equals i^k * I, otherwise -1.
  int scalar_phase() const;

  MonomialMatrix times_unit(int phase) const;
  MonomialMatrix operator-() const { return times_unit(2); }
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

  /// Kronecker product; index (i, j) of the result is i * b.size() + j.
  friend MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b);
  /// Block diagonal diag(a, b).
  friend MonomialMatrix direct_sum(const MonomialMatrix& a, const MonomialMatrix& b);

  template <class S>
  DenseMatrix<S> dense() const {
    DenseMatrix<S> m(size(), size());
    for (std::size_t c = 0; c < size(); ++c) m(rows_[c], c) = unit_power<S>(phases_[c]);
    return m;
  }

  /// Entries flattened row-major (index row * size + col).
  template <class S>
  SparseVector<S> flattened() const {
    SparseVector<S> v;
    v.reserve(size());
    for (std::size_t c = 0; c < size(); ++c)
      v.emplace_back(std::uint64_t{rows_[c]} * size() + c, unit_power<S>(phases_[c]));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

 private:
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint8_t> phases_;
};

}  // namespace cliffk
