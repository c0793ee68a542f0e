#pragma once

// Explicit matrix representations of C^{p,q} with exact entries, intertwiner
// spaces between them, and the algebra-level checks built on top.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cliffk/blade.hpp"
#include "cliffk/monomial.hpp"
#include "cliffk/structure.hpp"

namespace cliffk {

/// Generator bound for explicit representations and restriction matrices.
inline constexpr unsigned kRepBound = 16;
/// Generator bound for verify_classification.
inline constexpr unsigned kVerifyBound = 8;
inline constexpr unsigned kMatrixShiftBound = 6;
inline constexpr unsigned kUntwistBound = 6;

/// Generator images gamma_1..gamma_{p+q}, all of size `dim`.
struct MatrixRep {
  Signature sig;
  ScalarField field = ScalarField::Real;
  std::size_t dim = 1;
  std::vector<MonomialMatrix> generators;

  /// gamma_i gamma_j = -gamma_j gamma_i for i != j, gamma_i^2 = -I for i <= p
  /// and +I otherwise; real reps must have real entries.
  bool satisfies_relations() const;

  /// Image of a basis blade: ordered product of its generators.
  MonomialMatrix image(Blade b) const;
};

/// Irreducible representations, one per simple factor. With two factors the
/// one where the volume element acts by the smaller power of i comes first.
/// Deterministic; entries are 0 and powers of i (only +-1 when real).
std::vector<MatrixRep> irreducible_reps(Signature sig, ScalarField field);

/// Faithful representation: the direct sum of irreducible_reps.
MatrixRep build_rep(Signature sig, ScalarField field = ScalarField::Real);

/// Restriction to C^{small} embedded on the first small.p negative and the
/// first small.q positive generators.
MatrixRep restrict_rep(const MatrixRep& rep, Signature small);

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

/// Module V (x) R^2 over C^{b,a+2} built from a C^{a,b}-module V by
/// t -> t (x) e1e2 for the old generators and v -> 1 (x) v for the two new
/// positive ones (e1, e2 acting as [[0,1],[1,0]] and diag(1,-1)).
MatrixRep matrix_shift_module(const MatrixRep& rep);

/// Dimension over the scalar field of {X : X from(g) = to(g) X for all g}.
std::size_t hom_dimension(const MatrixRep& from, const MatrixRep& to);

/// Basis of the intertwiner space as dense to.dim x from.dim matrices.
template <class S>
std::vector<DenseMatrix<S>> hom_basis(const MatrixRep& from, const MatrixRep& to);

/// Multiplicity of each irreducible_reps(module.sig, module.field) summand.
std::vector<std::uint64_t> decompose(const MatrixRep& module);

/// Entry (i, j): multiplicity of small irreducible i in big irreducible j.
struct RestrictionMatrix {
  Signature big;
  Signature small;
  ScalarField field = ScalarField::Real;
  std::vector<std::uint64_t> small_dims;
  std::vector<std::uint64_t> big_dims;
  std::vector<std::vector<std::uint64_t>> entries;

  /// sum_i entries[i][j] * small_dims[i] == big_dims[j] for every column j.
  bool column_check() const;
};

RestrictionMatrix restriction_multiplicities(Signature big, Signature small, ScalarField field);

struct ClassificationReport {
  AlgebraDescriptor predicted;
  bool relations = false;
  std::size_t irreducibles = 0;
  std::uint64_t faithful_rank = 0;
  std::vector<std::uint64_t> block_dims;
  std::vector<std::uint64_t> block_ranks;
  bool blocks_distinct = false;
  bool ok = false;
};

/// Checks the explicit representation against classify(): exact relations,
/// span of all blade images of dimension 2^(p+q), and each irreducible block
/// spanning k^2 dim(D) with module dimension k dim(D).
ClassificationReport classification_report(Signature sig, ScalarField field);
bool verify_classification(Signature sig, ScalarField field = ScalarField::Real);

struct MatrixShiftIsoReport {
  unsigned m = 0;
  bool relations = false;
  std::uint64_t rank = 0;
  std::uint64_t expected_rank = 0;
  bool ok = false;
};

/// C^{0,m+2} -> C^{m,0} (x) C^{0,2} given on generators by
/// (t, v) -> t (x) e1e2 + 1 (x) v: checks the relations of the images and the
/// rank of the induced map on all 2^(m+2) blades.
MatrixShiftIsoReport matrix_shift_iso_report(unsigned m);
bool verify_matrix_shift_iso(unsigned m);

/// Images of the generators of C^{0,m+2} under the map above.
std::vector<TensorElement> matrix_shift_generator_images(unsigned m);

struct UntwistReport {
  unsigned n = 0;
  bool central = false;
  bool involution = false;
  bool idempotents = false;
  std::array<std::uint64_t, 2> corner_dims{0, 0};
  bool corners_faithful = false;
  bool ok = false;
};

/// In C^{0,n+1} twisted by eta (eta^2 = 1, eta anticommuting with e_1..e_n
/// and commuting with e_{n+1}), u = eta e_{n+1} is a central involution whose
/// idempotents (1 +- u)/2 split the algebra into two copies of C^{0,n+1}.
UntwistReport untwist_report(unsigned n);
bool untwist_split_check(unsigned n);

}  // namespace cliffk
