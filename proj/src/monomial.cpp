#include "cliffk/monomial.hpp"

#include <stdexcept>

namespace cliffk {

MonomialMatrix::MonomialMatrix(std::vector<std::uint32_t> rows, std::vector<std::uint8_t> phases)
    : rows_(std::move(rows)), phases_(std::move(phases)) {
  if (rows_.size() != phases_.size()) throw std::invalid_argument("row/phase length mismatch");
  std::vector<bool> seen(rows_.size(), false);
  for (auto r : rows_) {
    if (r >= rows_.size() || seen[r]) throw std::invalid_argument("rows do not form a permutation");
    seen[r] = true;
  }
  for (auto& ph : phases_) ph &= 3U;
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) { return scalar(n, 0); }

MonomialMatrix MonomialMatrix::scalar(std::size_t n, int phase) {
  std::vector<std::uint32_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<std::uint32_t>(i);
  return {std::move(rows), std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(phase & 3))};
}

bool MonomialMatrix::is_real() const {
  for (auto ph : phases_)
    if (ph % 2 != 0) return false;
  return true;
}

int MonomialMatrix::scalar_phase() const {
  if (rows_.empty()) return 0;
  for (std::size_t c = 0; c < size(); ++c)
    if (rows_[c] != c || phases_[c] != phases_[0]) return -1;
  return phases_[0];
}

MonomialMatrix MonomialMatrix::times_unit(int phase) const {
  MonomialMatrix out = *this;
  for (auto& ph : out.phases_) ph = static_cast<std::uint8_t>((ph + phase) & 3);
  return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial size mismatch");
  MonomialMatrix out = b;
  for (std::size_t c = 0; c < b.size(); ++c) {
    const auto mid = b.rows_[c];
    out.rows_[c] = a.rows_[mid];
    out.phases_[c] = static_cast<std::uint8_t>((b.phases_[c] + a.phases_[mid]) & 3);
  }
  return out;
}

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
  const std::size_t nb = b.size();
  std::vector<std::uint32_t> rows(a.size() * nb);
  std::vector<std::uint8_t> phases(a.size() * nb);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      rows[i * nb + j] = static_cast<std::uint32_t>(a.rows_[i] * nb + b.rows_[j]);
      phases[i * nb + j] = static_cast<std::uint8_t>((a.phases_[i] + b.phases_[j]) & 3);
    }
  return {std::move(rows), std::move(phases)};
}

MonomialMatrix direct_sum(const MonomialMatrix& a, const MonomialMatrix& b) {
  const auto na = static_cast<std::uint32_t>(a.size());
  std::vector<std::uint32_t> rows = a.rows_;
  std::vector<std::uint8_t> phases = a.phases_;
  for (std::size_t c = 0; c < b.size(); ++c) {
    rows.push_back(b.rows_[c] + na);
    phases.push_back(b.phases_[c]);
  }
  return {std::move(rows), std::move(phases)};
}

}  // namespace cliffk
