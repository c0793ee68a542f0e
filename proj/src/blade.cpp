#include "cliffk/blade.hpp"

#include "cliffk/linalg.hpp"

namespace cliffk {

void Signature::validate() const {
  if (p + q > kMaxGenerators)
    throw SignatureError("signature (" + std::to_string(p) + "," + std::to_string(q) +
                         ") exceeds " + std::to_string(kMaxGenerators) + " generators");
}

std::string to_string(Blade b) {
  if (b.mask == 0) return "1";
  std::string out;
  for (unsigned i = 0; i < 32; ++i)
    if (b.mask & (std::uint32_t{1} << i)) out += "e" + std::to_string(i + 1);
  return out;
}

SignedBlade blade_mul(Blade a, Blade b, Signature sig) {
  sig.validate();
  const auto full = sig.full_mask();
  if ((a.mask & ~full) != 0 || (b.mask & ~full) != 0)
    throw SignatureError("blade references a generator beyond " + std::to_string(sig.generators()));
  return {blade_sign(a.mask, b.mask, sig.negative_mask()), Blade{a.mask ^ b.mask}};
}

CliffordElement top_element(Signature sig) {
  sig.validate();
  return CliffordElement::blade(sig, Blade{sig.full_mask()});
}

std::vector<CliffordElement> center_basis(Signature sig, unsigned bound) {
  sig.validate();
  if (sig.generators() > bound)
    throw BoundError("center_basis limited to " + std::to_string(bound) + " generators");
  const auto n = sig.generators();
  const auto dim = sig.algebra_dimension();
  const auto neg = sig.negative_mask();

  // Row (i, c) holds the coefficient of blade c in x e_i - e_i x.
  DenseMatrix<Rational> system(n * dim, dim);
  for (unsigned i = 0; i < n; ++i) {
    const std::uint32_t g = std::uint32_t{1} << i;
    for (std::uint32_t b = 0; b < dim; ++b) {
      const int right = blade_sign(b, g, neg);
      const int left = blade_sign(g, b, neg);
      system(i * dim + (b ^ g), b) = right - left;
    }
  }

  std::vector<CliffordElement> basis;
  for (const auto& v : nullspace(std::move(system))) {
    CliffordElement e(sig);
    for (std::uint32_t b = 0; b < dim; ++b)
      if (!is_zero(v[b])) e += CliffordElement::blade(sig, Blade{b}, v[b]);
    basis.push_back(std::move(e));
  }
  return basis;
}

TensorElement TensorElement::pure(const CliffordElement& a, const CliffordElement& b) {
  TensorElement out(a.signature(), b.signature());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.accumulate({ma, mb}, Rational(ca * cb));
  return out;
}

void TensorElement::accumulate(const Key& k, const Rational& c) {
  if (cliffk::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (cliffk::is_zero(it->second)) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (left_ != o.left_ || right_ != o.right_)
    throw SignatureError("tensor operands belong to different factor signatures");
  for (const auto& [k, c] : o.terms_) accumulate(k, c);
  return *this;
}

TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) {
  if (x.left_ != y.left_ || x.right_ != y.right_)
    throw SignatureError("tensor operands belong to different factor signatures");
  TensorElement out(x.left_, x.right_);
  const auto nl = x.left_.negative_mask();
  const auto nr = x.right_.negative_mask();
  for (const auto& [ka, ca] : x.terms_)
    for (const auto& [kb, cb] : y.terms_) {
      Rational c = ca * cb;
      if (blade_sign(ka.first, kb.first, nl) * blade_sign(ka.second, kb.second, nr) < 0) c = -c;
      out.accumulate({ka.first ^ kb.first, ka.second ^ kb.second}, c);
    }
  return out;
}

SparseVector<Rational> TensorElement::sparse() const {
  SparseVector<Rational> v;
  const unsigned shift = right_.generators();
  for (const auto& [k, c] : terms_)
    v.emplace_back((std::uint64_t{k.first} << shift) | k.second, c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

}  // namespace cliffk
