#pragma once

// Finitely generated abelian groups in invariant-factor form and the
// homomorphisms between them, computed through Smith normal form.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cliffk/error.hpp"
#include "cliffk/linalg.hpp"
#include "cliffk/scalar.hpp"

namespace cliffk {

using IntMatrix = DenseMatrix<Integer>;

/// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ..., all
/// diagonal entries non-negative.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// U^{-1}, kept so column lattices can be read off without inverting.
  IntMatrix U_inverse;

  /// Nonzero diagonal entries of D.
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Z^rank + Z/d1 + ... + Z/dt with d1 | d2 | ... and every di >= 2.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  /// Throws std::invalid_argument unless `torsion` is a divisibility chain of
  /// entries >= 2.
  FGAbelianGroup(std::size_t rank, std::vector<Integer> torsion);

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  /// Z/d; d = 0 gives Z and d = 1 the trivial group.
  static FGAbelianGroup cyclic(const Integer& d);
  /// Z^free + sum Z/di for arbitrary di >= 0, brought to canonical form.
  static FGAbelianGroup from_orders(std::size_t free, const std::vector<Integer>& orders);
  /// Parses "0", "Z", "Z^2", "Z/4" and sums of these joined by '+'.
  static FGAbelianGroup parse(std::string_view text);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  /// Free generators first, then one generator per invariant factor.
  std::size_t generator_count() const { return rank_ + torsion_.size(); }
  /// 0 for a free generator, its order otherwise.
  Integer generator_order(std::size_t i) const;

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  std::optional<Integer> order() const;

  /// generator_count() x torsion().size() matrix of defining relations.
  IntMatrix relations() const;

  /// "Z^2 + Z/2 + Z/4", "0" when trivial.
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FGAbelianGroup& g) { return os << g.to_string(); }

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Homomorphism given by an integer matrix whose column j is the image of
/// source generator j in target coordinates. Torsion coordinates are stored
/// reduced to [0, d).
class GroupHom {
 public:
  /// Throws HomomorphismError on shape mismatch or when the image of a
  /// torsion generator does not have compatible order.
  GroupHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix);

  static GroupHom zero(const FGAbelianGroup& source, const FGAbelianGroup& target);
  static GroupHom identity(const FGAbelianGroup& g);
  /// Map between single-generator groups sending generator to k * generator.
  static GroupHom scalar(const FGAbelianGroup& source, const FGAbelianGroup& target, const Integer& k);

  const FGAbelianGroup& source() const { return source_; }
  const FGAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  bool is_zero() const { return matrix_.is_zero_matrix(); }

  /// this after first.
  GroupHom after(const GroupHom& first) const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  FGAbelianGroup source_;
  FGAbelianGroup target_;
  IntMatrix matrix_;
};

/// True when `matrix` defines a homomorphism source -> target.
bool is_well_defined(const FGAbelianGroup& source, const FGAbelianGroup& target, const IntMatrix& matrix);

FGAbelianGroup cokernel(const GroupHom& f);
FGAbelianGroup kernel(const GroupHom& f);
FGAbelianGroup image(const GroupHom& f);

/// Comparison of im(in) and ker(out) inside the middle group.
struct ExactnessReport {
  bool composite_zero = false;
  bool exact = false;
  /// ker(out) / im(in); trivial iff exact.
  FGAbelianGroup homology;
  /// Index of im(in) in the middle group; empty when infinite.
  std::optional<Integer> image_index;
  /// Index of ker(out) in the middle group; empty when infinite.
  std::optional<Integer> kernel_index;
};

/// Throws SequenceError when in.target() != out.source().
ExactnessReport exactness(const GroupHom& in, const GroupHom& out);

}  // namespace cliffk
