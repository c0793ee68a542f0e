#include "cliffk/structure.hpp"

#include <array>
#include <bit>

namespace cliffk {

std::string to_string(DivisionRing d) {
  switch (d) {
    case DivisionRing::R: return "R";
    case DivisionRing::C: return "C";
    case DivisionRing::H: return "H";
  }
  return "?";
}

std::string to_string(ScalarField f) { return f == ScalarField::Real ? "real" : "complex"; }

std::string AlgebraDescriptor::to_string() const {
  const DivisionRing base = field == ScalarField::Real ? DivisionRing::R : DivisionRing::C;
  const std::string ring_name = cliffk::to_string(ring);
  const std::string m = "M_" + std::to_string(matrix_size) + "(" + ring_name + ")";
  if (factors == 2) {
    const std::string one = matrix_size == 1 ? ring_name : m;
    return one + " ⊕ " + one;
  }
  if (matrix_size == 1 && ring == base) return ring_name;
  return m;
}

namespace {

struct RealType {
  unsigned factors;
  DivisionRing ring;
};

// Indexed by (p - q) mod 8.
constexpr std::array<RealType, 8> kRealTypes{{
    {1, DivisionRing::R},
    {1, DivisionRing::C},
    {1, DivisionRing::H},
    {2, DivisionRing::H},
    {1, DivisionRing::H},
    {1, DivisionRing::C},
    {1, DivisionRing::R},
    {2, DivisionRing::R},
}};

std::uint64_t exact_sqrt_pow2(std::uint64_t x) {
  // x is a power of two with even exponent
  const int e = std::countr_zero(x);
  return std::uint64_t{1} << (e / 2);
}

}  // namespace

AlgebraDescriptor classify(Signature sig, ScalarField field) {
  sig.validate();
  const unsigned n = sig.generators();
  AlgebraDescriptor d;
  d.field = field;
  if (field == ScalarField::Complex) {
    d.ring = DivisionRing::C;
    d.factors = n % 2 == 0 ? 1 : 2;
    d.matrix_size = std::uint64_t{1} << (n / 2);
    return d;
  }
  const int residue = ((static_cast<int>(sig.p) - static_cast<int>(sig.q)) % 8 + 8) % 8;
  const RealType t = kRealTypes[static_cast<std::size_t>(residue)];
  d.factors = t.factors;
  d.ring = t.ring;
  d.matrix_size = exact_sqrt_pow2(sig.algebra_dimension() / (t.factors * real_dimension(t.ring)));
  return d;
}

AlgebraDescriptor tensor_with_matrices(const AlgebraDescriptor& a, std::uint64_t n) {
  AlgebraDescriptor out = a;
  out.matrix_size *= n;
  return out;
}

bool MatrixShiftShape::consistent() const {
  const auto& [inner, mat] = rhs;
  if (mat.factors != 1 || mat.matrix_size != 2) return false;
  const DivisionRing base = mat.field == ScalarField::Real ? DivisionRing::R : DivisionRing::C;
  if (mat.ring != base || mat.field != inner.field) return false;
  return lhs == tensor_with_matrices(inner, mat.matrix_size);
}

MatrixShiftShape matrix_shift_shape(unsigned m, ScalarField field) {
  const AlgebraDescriptor lhs = classify(Signature{0, m + 2}, field);
  const AlgebraDescriptor inner = classify(Signature{m, 0}, field);
  AlgebraDescriptor m2;
  m2.field = field;
  m2.ring = field == ScalarField::Real ? DivisionRing::R : DivisionRing::C;
  m2.matrix_size = 2;
  return {lhs, {inner, m2}};
}

std::vector<std::uint64_t> irrep_dims(Signature sig, ScalarField field) {
  const auto d = classify(sig, field);
  return std::vector<std::uint64_t>(d.factors, d.irrep_dimension());
}

}  // namespace cliffk
