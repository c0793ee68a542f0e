#pragma once

// Classification of C^{p,q} and its complexification as one or two copies
// of a full matrix algebra over R, C or H.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffk/blade.hpp"

namespace cliffk {

enum class DivisionRing { R, C, H };
enum class ScalarField { Real, Complex };

constexpr unsigned real_dimension(DivisionRing d) {
  switch (d) {
    case DivisionRing::R: return 1;
    case DivisionRing::C: return 2;
    case DivisionRing::H: return 4;
  }
  return 0;
}

std::string to_string(DivisionRing d);
std::string to_string(ScalarField f);

/// `factors` copies of M_k(ring) over the given scalar field.
struct AlgebraDescriptor {
  unsigned factors = 1;
  std::uint64_t matrix_size = 1;
  DivisionRing ring = DivisionRing::R;
  ScalarField field = ScalarField::Real;

  /// Dimension of the ring over the scalar field (1 for every complex algebra).
  unsigned ring_dimension() const {
    return field == ScalarField::Complex ? 1 : real_dimension(ring);
  }
  /// Dimension of the whole algebra over the scalar field.
  std::uint64_t dimension() const { return factors * matrix_size * matrix_size * ring_dimension(); }
  /// Dimension over the scalar field of one irreducible module.
  std::uint64_t irrep_dimension() const { return matrix_size * ring_dimension(); }

  /// Same ring, field and factor count; matrix size may differ.
  bool morita_equivalent(const AlgebraDescriptor& o) const {
    return factors == o.factors && ring == o.ring && field == o.field;
  }

  /// "R", "M_2(H)", "H ⊕ H", "M_2(C) ⊕ M_2(C)".
  std::string to_string() const;

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

AlgebraDescriptor classify(Signature sig, ScalarField field);

/// Descriptor of A (x) M_n(field).
AlgebraDescriptor tensor_with_matrices(const AlgebraDescriptor& a, std::uint64_t n);

/// Both sides of C^{0,m+2} ≅ C^{m,0} (x) M_2(k) at descriptor level.
struct MatrixShiftShape {
  AlgebraDescriptor lhs;
  std::pair<AlgebraDescriptor, AlgebraDescriptor> rhs;

  /// Tensoring with M_2 doubles the matrix size and keeps ring and factors.
  bool consistent() const;
};

MatrixShiftShape matrix_shift_shape(unsigned m, ScalarField field);

/// Dimension over the scalar field of each irreducible module, one entry per
/// simple factor. For C^{n,0} over R this is the Adams number.
std::vector<std::uint64_t> irrep_dims(Signature sig, ScalarField field);

}  // namespace cliffk
