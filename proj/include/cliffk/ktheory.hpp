#pragma once

// K-groups of Clifford module categories over a point and of the forgetful
// functors between them. Indexing is cohomological throughout: point_k(i)
// is K^{-i}, which some texts also write K_i.

#include <cstddef>
#include <string>
#include <vector>

#include "cliffk/abgroup.hpp"
#include "cliffk/rep.hpp"
#include "cliffk/sequence.hpp"
#include "cliffk/structure.hpp"

namespace cliffk {

enum class Theory { KO, KU };

std::string to_string(Theory t);
/// R for KO, C for KU.
ScalarField field_of(Theory t);

/// Restriction of modules along the initial-segment inclusion small ⊂ big.
struct ForgetfulFunctor {
  Signature big;
  Signature small;
  ScalarField field = ScalarField::Real;

  /// Throws EmbeddingError unless small.p <= big.p and small.q <= big.q.
  void validate() const;
};

/// K_0 of finitely generated modules: Z^(number of simple factors).
FGAbelianGroup k0(Signature sig, ScalarField field);

/// K_0 of the forgetful functor; its matrix is the restriction matrix.
GroupHom forgetful_k_map(const ForgetfulFunctor& f);

/// Relative K-data of a forgetful functor with the map it came from.
struct RelativeK {
  FGAbelianGroup coker;
  FGAbelianGroup ker;
  GroupHom map;
  RestrictionMatrix restriction;

  bool same_groups(const RelativeK& o) const { return coker == o.coker && ker == o.ker; }
};

RelativeK relative_k(const ForgetfulFunctor& f);

/// Reduced K-theory of RP^n: cokernel of K(C^{n,0}) -> K(C^{0,0}).
FGAbelianGroup reduced_k_rpn(unsigned n, Theory theory);

/// #{0 < s <= n : s = 0, 1, 2, 4 mod 8}.
unsigned adams_f(unsigned n);

/// K^{-i} of a point: Z for i = 0, otherwise the cokernel of
/// K(C^{i,0}) -> K(C^{i-1,0}) over the theory's field.
FGAbelianGroup point_k(unsigned i, Theory theory);

struct ThomComparison {
  unsigned r = 0;
  /// (0, n+r+1) -> (0, n+r) against (0, n+r+9) -> (0, n+r+8).
  bool periodic = false;
  /// (r, n+r+1) -> (r, n+r) against (0, n+1) -> (0, n).
  bool degree_shift = false;
  FGAbelianGroup coker;
  FGAbelianGroup ker;
};

struct ThomReport {
  unsigned n = 0;
  std::vector<ThomComparison> comparisons;
  bool ok = false;
};

/// Compares, for 0 <= r <= r_max, the relative groups of
/// C^{0,n+r+1} -> C^{0,n+r} with the same functor eight generators up, and
/// with the degree-0 functor C^{0,n+1} -> C^{0,n} shifted by r negative
/// generators on both sides.
ThomReport thom_report(unsigned n, unsigned r_max);
bool thom_stability(unsigned n, unsigned r_max);

/// KU^{-i} -> KO^{-i} -> KO^{-i-1} -> KU^{-i+1} over a point with unknown
/// maps, exactness required at the two middle terms.
Sequence bott_sequence_instance(int i);

/// Same sequence named after KR(X) -> KO_G(X) -> KO_G(X x R) -> KR_{-1}(X)
/// for X = point x S^0 with the free involution.
Sequence equivariant_sequence_point_instance(int degree = 0);

/// Enumeration bound used for the Bott and equivariant sequence instances.
inline constexpr int kSequenceBound = 2;

struct FiberCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FiberReport {
  std::vector<FiberCheck> checks;
  /// Both composites of the K_0 square.
  IntMatrix top_then_right;
  IntMatrix left_then_bottom;
  bool ok() const;
};

/// Fiber-level checks for the twist by a trivialized line bundle L:
/// (a) modules over C^{1,0} are complex vector spaces, K_0 = Z = KU(point);
/// (b) C^{0,3} Morita-equivalent to C^{1,0};
/// (c) C^{0,2} Morita-equivalent to C^{0,0};
/// (d) the square of K_0 maps through C^{0,3} -> C^{0,2} commutes.
FiberReport fiber_twist_check();

}  // namespace cliffk
