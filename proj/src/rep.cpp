#include "cliffk/rep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cliffk/linalg.hpp"

namespace cliffk {

namespace {

// 2x2 building blocks.
MonomialMatrix mat_z() { return {{0, 1}, {0, 2}}; }   // diag(1, -1)
MonomialMatrix mat_x() { return {{1, 0}, {0, 0}}; }   // [[0,1],[1,0]]
MonomialMatrix mat_j() { return {{1, 0}, {0, 2}}; }   // [[0,-1],[1,0]], J^2 = -I
MonomialMatrix mat_ij() { return {{1, 0}, {1, 3}}; }  // iJ, squares to +I
MonomialMatrix mat_ix() { return {{1, 0}, {1, 1}}; }  // iX, squares to -I

// Left multiplication by i and j on H with basis (1, i, j, k).
MonomialMatrix quat_i() { return {{1, 0, 3, 2}, {0, 2, 0, 2}}; }
MonomialMatrix quat_j() { return {{2, 3, 0, 1}, {0, 2, 2, 0}}; }

struct Generators {
  std::size_t dim = 1;
  std::vector<MonomialMatrix> neg;
  std::vector<MonomialMatrix> pos;
};

std::vector<MonomialMatrix> tensor_each(const std::vector<MonomialMatrix>& gens,
                                        const MonomialMatrix& right) {
  std::vector<MonomialMatrix> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(kron(g, right));
  return out;
}

// C^{p+1,q+1} = C^{p,q} (x) M_2(R).
Generators add_hyperbolic_pair(const Generators& g) {
  Generators out;
  out.dim = g.dim * 2;
  const auto id = MonomialMatrix::identity(g.dim);
  out.neg = tensor_each(g.neg, mat_z());
  out.neg.push_back(kron(id, mat_j()));
  out.pos = tensor_each(g.pos, mat_z());
  out.pos.push_back(kron(id, mat_x()));
  return out;
}

// C^{b,a+2} = C^{a,b} (x) C^{0,2} via t -> t (x) e1e2, v -> 1 (x) v with
// e1 = X, e2 = Z and e1e2 = J.
Generators matrix_shift(const Generators& g) {
  Generators out;
  out.dim = g.dim * 2;
  const auto id = MonomialMatrix::identity(g.dim);
  out.neg = tensor_each(g.pos, mat_j());
  out.pos = tensor_each(g.neg, mat_j());
  out.pos.push_back(kron(id, mat_x()));
  out.pos.push_back(kron(id, mat_z()));
  return out;
}

// C^{a,b} = C^{a+4,b-4}: four positive generators f_j become f_j w with
// w = f1 f2 f3 f4, which squares to +1 and is central in the rest.
Generators trade_four_positive(const Generators& g) {
  if (g.pos.size() < 4) throw std::logic_error("need four positive generators");
  Generators out;
  out.dim = g.dim;
  out.neg = g.neg;
  const std::size_t first = g.pos.size() - 4;
  const MonomialMatrix w = g.pos[first] * g.pos[first + 1] * g.pos[first + 2] * g.pos[first + 3];
  for (std::size_t j = first; j < g.pos.size(); ++j) out.neg.push_back(g.pos[j] * w);
  out.pos.assign(g.pos.begin(), g.pos.begin() + static_cast<std::ptrdiff_t>(first));
  return out;
}

std::vector<Generators> real_irreps(unsigned p, unsigned q) {
  if (p == 0 && q == 0) return {Generators{}};
  if (p >= 1 && q >= 1) {
    auto out = real_irreps(p - 1, q - 1);
    for (auto& g : out) g = add_hyperbolic_pair(g);
    return out;
  }
  if (q == 0) {
    switch (p) {
      case 1: return {Generators{2, {mat_j()}, {}}};
      case 2: return {Generators{4, {quat_i(), quat_j()}, {}}};
      case 3: {
        const auto k = quat_i() * quat_j();
        return {Generators{4, {quat_i(), quat_j(), k}, {}}, Generators{4, {quat_i(), quat_j(), -k}, {}}};
      }
      default: {
        auto out = real_irreps(p - 4, 4);
        for (auto& g : out) g = trade_four_positive(g);
        return out;
      }
    }
  }
  // p == 0
  if (q == 1) {
    return {Generators{1, {}, {MonomialMatrix::scalar(1, 0)}},
            Generators{1, {}, {MonomialMatrix::scalar(1, 2)}}};
  }
  auto out = real_irreps(q - 2, 0);
  for (auto& g : out) g = matrix_shift(g);
  return out;
}

std::vector<Generators> complex_irreps(unsigned p, unsigned q) {
  if (p == 0 && q == 0) return {Generators{}};
  if (p + q == 1) {
    // e1 acts by +-1 (positive) or +-i (negative).
    const int base = p == 1 ? 1 : 0;
    Generators a{1, {}, {}}, b{1, {}, {}};
    auto& la = p == 1 ? a.neg : a.pos;
    auto& lb = p == 1 ? b.neg : b.pos;
    la.push_back(MonomialMatrix::scalar(1, base));
    lb.push_back(MonomialMatrix::scalar(1, base + 2));
    return {a, b};
  }
  if (p >= 1 && q >= 1) {
    auto out = complex_irreps(p - 1, q - 1);
    for (auto& g : out) g = add_hyperbolic_pair(g);
    return out;
  }
  const bool positive = p == 0;
  auto out = positive ? complex_irreps(0, q - 2) : complex_irreps(p - 2, 0);
  for (auto& g : out) {
    Generators next;
    next.dim = g.dim * 2;
    const auto id = MonomialMatrix::identity(g.dim);
    next.neg = tensor_each(g.neg, mat_z());
    next.pos = tensor_each(g.pos, mat_z());
    if (positive) {
      next.pos.push_back(kron(id, mat_x()));
      next.pos.push_back(kron(id, mat_ij()));
    } else {
      next.neg.push_back(kron(id, mat_j()));
      next.neg.push_back(kron(id, mat_ix()));
    }
    g = std::move(next);
  }
  return out;
}

MatrixRep assemble(Signature sig, ScalarField field, Generators g) {
  MatrixRep rep;
  rep.sig = sig;
  rep.field = field;
  rep.dim = g.dim;
  rep.generators = std::move(g.neg);
  rep.generators.insert(rep.generators.end(), g.pos.begin(), g.pos.end());
  return rep;
}

void check_bound(Signature sig, unsigned bound, const char* what) {
  sig.validate();
  if (sig.generators() > bound)
    throw BoundError(std::string(what) + " limited to " + std::to_string(bound) + " generators");
}

// Union-find over matrix entries with a power of i attached to each edge:
// value(x) = i^offset(x) * value(root(x)).
class PhaseUnionFind {
 public:
  explicit PhaseUnionFind(std::size_t n) : parent_(n), offset_(n, 0), bad_(n, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    std::size_t root = x;
    int total = 0;
    while (parent_[root] != root) {
      total += offset_[root];
      root = parent_[root];
    }
    // Path compression.
    int acc = total;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int step = offset_[x];
      parent_[x] = root;
      offset_[x] = static_cast<std::uint8_t>(acc & 3);
      acc -= step;
      x = next;
    }
    return {root, total & 3};
  }

  // Records value(a) = i^w * value(b).
  void unite(std::size_t a, std::size_t b, int w) {
    auto [ra, oa] = find(a);
    auto [rb, ob] = find(b);
    if (ra == rb) {
      if (((oa - w - ob) & 3) != 0) bad_[ra] = true;
      return;
    }
    parent_[ra] = rb;
    offset_[ra] = static_cast<std::uint8_t>((w + ob - oa) & 3);
    bad_[rb] = bad_[rb] || bad_[ra];
  }

  bool is_root(std::size_t x) const { return parent_[x] == x; }
  bool bad(std::size_t root) const { return bad_[root]; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> offset_;
  std::vector<bool> bad_;
};

// X is to.dim x from.dim, entry (s, c) at node s * from.dim + c. Every
// equation of X from(g) = to(g) X links exactly two entries because both
// sides are monomial.
PhaseUnionFind intertwiner_orbits(const MatrixRep& from, const MatrixRep& to) {
  if (from.sig != to.sig || from.field != to.field)
    throw SignatureError("intertwiners need representations of the same algebra");
  const std::size_t m = from.dim;
  PhaseUnionFind uf(to.dim * m);
  for (std::size_t g = 0; g < from.generators.size(); ++g) {
    const auto& src = from.generators[g];
    const auto& dst = to.generators[g];
    for (std::size_t s = 0; s < to.dim; ++s)
      for (std::size_t c = 0; c < m; ++c) {
        // u_c X[sigma(s), pi(c)] = v_s X[s, c]
        const int w = src.phase(c) - dst.phase(s);
        uf.unite(s * m + c, dst.row(s) * m + src.row(c), w);
      }
  }
  return uf;
}

}  // namespace

bool MatrixRep::satisfies_relations() const {
  if (generators.size() != sig.generators()) return false;
  for (const auto& g : generators) {
    if (g.size() != dim) return false;
    if (field == ScalarField::Real && !g.is_real()) return false;
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const int square = i < sig.p ? 2 : 0;
    if (generators[i] * generators[i] != MonomialMatrix::scalar(dim, square)) return false;
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] * generators[j] != -(generators[j] * generators[i])) return false;
  }
  return true;
}

MonomialMatrix MatrixRep::image(Blade b) const {
  if ((b.mask & ~sig.full_mask()) != 0) throw SignatureError("blade outside signature");
  MonomialMatrix out = MonomialMatrix::identity(dim);
  for (unsigned i = 0; i < sig.generators(); ++i)
    if (b.mask & (std::uint32_t{1} << i)) out = out * generators[i];
  return out;
}

std::vector<MatrixRep> irreducible_reps(Signature sig, ScalarField field) {
  check_bound(sig, kRepBound, "representations");
  auto gens = field == ScalarField::Real ? real_irreps(sig.p, sig.q) : complex_irreps(sig.p, sig.q);
  std::vector<MatrixRep> reps;
  for (auto& g : gens) reps.push_back(assemble(sig, field, std::move(g)));
  if (reps.size() == 2) {
    const Blade top{sig.full_mask()};
    const int a = reps[0].image(top).scalar_phase();
    const int b = reps[1].image(top).scalar_phase();
    if (a < 0 || b < 0 || a == b) throw std::logic_error("volume element does not separate irreducibles");
    if (b < a) std::swap(reps[0], reps[1]);
  }
  return reps;
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (a.sig != b.sig || a.field != b.field) throw SignatureError("direct sum of different algebras");
  MatrixRep out;
  out.sig = a.sig;
  out.field = a.field;
  out.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    out.generators.push_back(direct_sum(a.generators[i], b.generators[i]));
  return out;
}

MatrixRep matrix_shift_module(const MatrixRep& rep) {
  Generators g;
  g.dim = rep.dim;
  g.neg.assign(rep.generators.begin(), rep.generators.begin() + rep.sig.p);
  g.pos.assign(rep.generators.begin() + rep.sig.p, rep.generators.end());
  return assemble(Signature{rep.sig.q, rep.sig.p + 2}, rep.field, matrix_shift(g));
}

MatrixRep build_rep(Signature sig, ScalarField field) {
  auto irreps = irreducible_reps(sig, field);
  MatrixRep out = irreps.front();
  for (std::size_t i = 1; i < irreps.size(); ++i) out = direct_sum(out, irreps[i]);
  return out;
}

MatrixRep restrict_rep(const MatrixRep& rep, Signature small) {
  if (small.p > rep.sig.p || small.q > rep.sig.q)
    throw EmbeddingError("C^{" + std::to_string(small.p) + "," + std::to_string(small.q) +
                         "} does not embed in C^{" + std::to_string(rep.sig.p) + "," +
                         std::to_string(rep.sig.q) + "}");
  MatrixRep out;
  out.sig = small;
  out.field = rep.field;
  out.dim = rep.dim;
  for (unsigned i = 0; i < small.p; ++i) out.generators.push_back(rep.generators[i]);
  for (unsigned i = 0; i < small.q; ++i) out.generators.push_back(rep.generators[rep.sig.p + i]);
  return out;
}

std::size_t hom_dimension(const MatrixRep& from, const MatrixRep& to) {
  auto uf = intertwiner_orbits(from, to);
  std::size_t dim = 0;
  for (std::size_t x = 0; x < uf.size(); ++x)
    if (uf.is_root(x) && !uf.bad(x)) ++dim;
  return dim;
}

template <class S>
std::vector<DenseMatrix<S>> hom_basis(const MatrixRep& from, const MatrixRep& to) {
  auto uf = intertwiner_orbits(from, to);
  std::vector<std::size_t> slot(uf.size(), SIZE_MAX);
  std::vector<DenseMatrix<S>> basis;
  for (std::size_t x = 0; x < uf.size(); ++x)
    if (uf.is_root(x) && !uf.bad(x)) {
      slot[x] = basis.size();
      basis.emplace_back(to.dim, from.dim);
    }
  for (std::size_t x = 0; x < uf.size(); ++x) {
    auto [root, off] = uf.find(x);
    if (slot[root] == SIZE_MAX) continue;
    basis[slot[root]](x / from.dim, x % from.dim) = unit_power<S>(off);
  }
  return basis;
}

template std::vector<DenseMatrix<Rational>> hom_basis<Rational>(const MatrixRep&, const MatrixRep&);
template std::vector<DenseMatrix<Gaussian>> hom_basis<Gaussian>(const MatrixRep&, const MatrixRep&);

std::vector<std::uint64_t> decompose(const MatrixRep& module) {
  const auto irreps = irreducible_reps(module.sig, module.field);
  std::vector<std::uint64_t> mult;
  std::uint64_t covered = 0;
  for (const auto& s : irreps) {
    const auto hom = hom_dimension(s, module);
    const auto end = hom_dimension(s, s);
    if (end == 0 || hom % end != 0) throw std::logic_error("intertwiner dimension not a multiple of End");
    mult.push_back(hom / end);
    covered += mult.back() * s.dim;
  }
  if (covered != module.dim) throw std::logic_error("module is not a sum of the known irreducibles");
  return mult;
}

bool RestrictionMatrix::column_check() const {
  for (std::size_t j = 0; j < big_dims.size(); ++j) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < small_dims.size(); ++i) sum += entries[i][j] * small_dims[i];
    if (sum != big_dims[j]) return false;
  }
  return true;
}

RestrictionMatrix restriction_multiplicities(Signature big, Signature small, ScalarField field) {
  check_bound(big, kRepBound, "restriction multiplicities");
  if (small.p > big.p || small.q > big.q)
    throw EmbeddingError("C^{" + std::to_string(small.p) + "," + std::to_string(small.q) +
                         "} does not embed in C^{" + std::to_string(big.p) + "," +
                         std::to_string(big.q) + "}");
  RestrictionMatrix r;
  r.big = big;
  r.small = small;
  r.field = field;
  const auto big_irreps = irreducible_reps(big, field);
  for (const auto& s : irreducible_reps(small, field)) r.small_dims.push_back(s.dim);
  r.entries.assign(r.small_dims.size(), std::vector<std::uint64_t>(big_irreps.size(), 0));
  for (std::size_t j = 0; j < big_irreps.size(); ++j) {
    r.big_dims.push_back(big_irreps[j].dim);
    const auto column = decompose(restrict_rep(big_irreps[j], small));
    for (std::size_t i = 0; i < column.size(); ++i) r.entries[i][j] = column[i];
  }
  return r;
}

namespace {

template <class S>
std::uint64_t span_rank(const MatrixRep& rep) {
  EchelonBasis<S> basis;
  for (std::uint32_t b = 0; b < rep.sig.algebra_dimension(); ++b)
    basis.insert(rep.image(Blade{b}).template flattened<S>());
  return basis.dimension();
}

std::uint64_t span_rank(const MatrixRep& rep) {
  return rep.field == ScalarField::Real ? span_rank<Rational>(rep) : span_rank<Gaussian>(rep);
}

}  // namespace

ClassificationReport classification_report(Signature sig, ScalarField field) {
  check_bound(sig, kVerifyBound, "verify_classification");
  ClassificationReport r;
  r.predicted = classify(sig, field);
  const auto irreps = irreducible_reps(sig, field);
  const auto faithful = build_rep(sig, field);
  r.relations = faithful.satisfies_relations();
  for (const auto& s : irreps) r.relations = r.relations && s.satisfies_relations();
  r.irreducibles = irreps.size();
  r.faithful_rank = span_rank(faithful);
  for (const auto& s : irreps) {
    r.block_dims.push_back(s.dim);
    r.block_ranks.push_back(span_rank(s));
  }
  r.blocks_distinct = irreps.size() < 2 || hom_dimension(irreps[0], irreps[1]) == 0;

  const auto& d = r.predicted;
  bool blocks = r.irreducibles == d.factors;
  for (std::size_t i = 0; i < irreps.size(); ++i)
    blocks = blocks && r.block_dims[i] == d.irrep_dimension() &&
             r.block_ranks[i] == d.matrix_size * d.matrix_size * d.ring_dimension();
  r.ok = r.relations && blocks && r.blocks_distinct && r.faithful_rank == sig.algebra_dimension();
  return r;
}

bool verify_classification(Signature sig, ScalarField field) {
  return classification_report(sig, field).ok;
}

std::vector<TensorElement> matrix_shift_generator_images(unsigned m) {
  if (m > kMatrixShiftBound)
    throw BoundError("matrix shift check limited to m <= " + std::to_string(kMatrixShiftBound));
  const Signature inner{m, 0};
  const Signature plane{0, 2};
  const auto one_inner = CliffordElement::scalar(inner, 1);
  const auto e12 = CliffordElement::generator(plane, 1) * CliffordElement::generator(plane, 2);
  std::vector<TensorElement> images;
  for (unsigned i = 1; i <= m; ++i)
    images.push_back(TensorElement::pure(CliffordElement::generator(inner, i), e12));
  for (unsigned i = 1; i <= 2; ++i)
    images.push_back(TensorElement::pure(one_inner, CliffordElement::generator(plane, i)));
  return images;
}

MatrixShiftIsoReport matrix_shift_iso_report(unsigned m) {
  const auto images = matrix_shift_generator_images(m);
  const Signature inner{m, 0};
  const Signature plane{0, 2};
  const auto one = TensorElement::pure(CliffordElement::scalar(inner, 1), CliffordElement::scalar(plane, 1));

  MatrixShiftIsoReport r;
  r.m = m;
  r.relations = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    r.relations = r.relations && images[i] * images[i] == one;
    for (std::size_t j = i + 1; j < images.size(); ++j)
      r.relations = r.relations && (images[i] * images[j] + images[j] * images[i]).is_zero();
  }

  const Signature source{0, m + 2};
  r.expected_rank = source.algebra_dimension();
  EchelonBasis<Rational> basis;
  for (std::uint32_t b = 0; b < source.algebra_dimension(); ++b) {
    TensorElement img = one;
    for (unsigned i = 0; i < source.generators(); ++i)
      if (b & (std::uint32_t{1} << i)) img = img * images[i];
    basis.insert(img.sparse());
  }
  r.rank = basis.dimension();
  r.ok = r.relations && r.rank == r.expected_rank;
  return r;
}

bool verify_matrix_shift_iso(unsigned m) { return matrix_shift_iso_report(m).ok; }

namespace {

// x0 + x1 eta in C^{0,n+1} twisted by eta, where eta x = alpha(x) eta and
// alpha negates e_1..e_n.
struct Twisted {
  CliffordElement even;
  CliffordElement odd;

  friend bool operator==(const Twisted&, const Twisted&) = default;
};

class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(unsigned n) : sig_{0, n + 1}, moved_((std::uint32_t{1} << n) - 1) {}

  Signature signature() const { return sig_; }

  CliffordElement alpha(const CliffordElement& x) const {
    CliffordElement out(sig_);
    for (const auto& [m, c] : x.terms()) {
      const bool flip = std::popcount(m & moved_) % 2 != 0;
      out += CliffordElement::blade(sig_, Blade{m}, flip ? Rational(-c) : c);
    }
    return out;
  }

  Twisted mul(const Twisted& x, const Twisted& y) const {
    return {x.even * y.even + x.odd * alpha(y.odd), x.even * y.odd + x.odd * alpha(y.even)};
  }

  Twisted embed(const CliffordElement& x) const { return {x, CliffordElement(sig_)}; }
  Twisted eta() const { return {CliffordElement(sig_), CliffordElement::scalar(sig_, 1)}; }
  Twisted scalar(const Rational& s) const { return embed(CliffordElement::scalar(sig_, s)); }

  SparseVector<Rational> flatten(const Twisted& x) const {
    SparseVector<Rational> v;
    for (const auto& [m, c] : x.even.terms()) v.emplace_back(m, c);
    for (const auto& [m, c] : x.odd.terms()) v.emplace_back(sig_.algebra_dimension() + m, c);
    return v;
  }

 private:
  Signature sig_;
  std::uint32_t moved_;
};

}  // namespace

UntwistReport untwist_report(unsigned n) {
  if (n > kUntwistBound) throw BoundError("untwist check limited to n <= " + std::to_string(kUntwistBound));
  const TwistedAlgebra alg(n);
  const Signature sig = alg.signature();
  const Twisted one = alg.scalar(1);
  const Twisted u = alg.mul(alg.eta(), alg.embed(CliffordElement::generator(sig, n + 1)));

  UntwistReport r;
  r.n = n;
  r.central = alg.mul(u, alg.eta()) == alg.mul(alg.eta(), u);
  for (unsigned i = 1; i <= sig.generators(); ++i) {
    const Twisted g = alg.embed(CliffordElement::generator(sig, i));
    r.central = r.central && alg.mul(u, g) == alg.mul(g, u);
  }
  r.involution = alg.mul(u, u) == one;

  const Rational half(1, 2);
  const Twisted plus{half * (one.even + u.even), half * (one.odd + u.odd)};
  const Twisted minus{half * (one.even - u.even), half * (one.odd - u.odd)};
  const Twisted sum{plus.even + minus.even, plus.odd + minus.odd};
  const Twisted cross = alg.mul(plus, minus);
  r.idempotents = alg.mul(plus, plus) == plus && alg.mul(minus, minus) == minus && sum == one &&
                  cross.even.is_zero() && cross.odd.is_zero();

  r.corners_faithful = true;
  const std::array<const Twisted*, 2> idem{&plus, &minus};
  for (std::size_t k = 0; k < 2; ++k) {
    EchelonBasis<Rational> corner;
    EchelonBasis<Rational> image;
    for (std::uint32_t b = 0; b < sig.algebra_dimension(); ++b) {
      const Twisted blade = alg.embed(CliffordElement::blade(sig, Blade{b}));
      const Twisted blade_eta = alg.mul(blade, alg.eta());
      const auto bx = alg.mul(blade, *idem[k]);
      corner.insert(alg.flatten(bx));
      corner.insert(alg.flatten(alg.mul(blade_eta, *idem[k])));
      image.insert(alg.flatten(bx));
    }
    r.corner_dims[k] = corner.dimension();
    r.corners_faithful = r.corners_faithful && image.dimension() == sig.algebra_dimension();
  }
  r.ok = r.central && r.involution && r.idempotents && r.corners_faithful &&
         r.corner_dims[0] == sig.algebra_dimension() && r.corner_dims[1] == sig.algebra_dimension();
  return r;
}

bool untwist_split_check(unsigned n) { return untwist_report(n).ok; }

}  // namespace cliffk
