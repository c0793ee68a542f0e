#pragma once

// Exact arithmetic in the Clifford algebra C^{p,q}: generators e_1..e_p square
// to -1, e_{p+1}..e_{p+q} square to +1, distinct generators anticommute.
// Basis blades are ascending products of distinct generators, encoded as bit
// masks (bit i-1 stands for e_i).

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cliffk/error.hpp"
#include "cliffk/linalg.hpp"
#include "cliffk/scalar.hpp"

namespace cliffk {

/// Largest generator count representable by a blade mask.
inline constexpr unsigned kMaxGenerators = 30;

struct Signature {
  unsigned p = 0;  // generators squaring to -1
  unsigned q = 0;  // generators squaring to +1

  constexpr unsigned generators() const { return p + q; }
  constexpr std::uint64_t algebra_dimension() const { return std::uint64_t{1} << (p + q); }
  /// Mask of the negative generators e_1..e_p.
  constexpr std::uint32_t negative_mask() const { return (std::uint32_t{1} << p) - 1; }
  constexpr std::uint32_t full_mask() const { return (std::uint32_t{1} << (p + q)) - 1; }

  /// Throws SignatureError when the generator count exceeds kMaxGenerators.
  void validate() const;

  friend constexpr auto operator<=>(const Signature&, const Signature&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << "C^{" << s.p << "," << s.q << "}";
  }
};

struct Blade {
  std::uint32_t mask = 0;

  constexpr unsigned grade() const { return static_cast<unsigned>(std::popcount(mask)); }

  friend constexpr auto operator<=>(const Blade&, const Blade&) = default;
};

/// Renders a blade as "1" or "e1e2...".
std::string to_string(Blade b);

struct SignedBlade {
  int sign = 1;
  Blade blade;

  friend constexpr bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Product of two basis blades: sign from the transpositions needed to merge
/// the ordered generator lists, times -1 for every repeated negative generator.
SignedBlade blade_mul(Blade a, Blade b, Signature sig);

/// Same sign rule without validation; masks must already fit `sig`.
inline int blade_sign(std::uint32_t a, std::uint32_t b, std::uint32_t negative_mask) {
  unsigned swaps = 0;
  for (std::uint32_t rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b & negative_mask);
  return (swaps & 1U) ? -1 : 1;
}

/// Sparse exact linear combination of blades of one signature.
template <class Scalar>
class BasicElement {
 public:
  using Terms = std::map<std::uint32_t, Scalar>;

  explicit BasicElement(Signature sig) : sig_(sig) { sig_.validate(); }

  static BasicElement scalar(Signature sig, const Scalar& s) { return blade(sig, Blade{0}, s); }

  static BasicElement blade(Signature sig, Blade b, const Scalar& coeff = Scalar(1)) {
    BasicElement e(sig);
    e.check_blade(b);
    if (!cliffk::is_zero(coeff)) e.terms_.emplace(b.mask, coeff);
    return e;
  }

  /// Generator e_index, 1-based.
  static BasicElement generator(Signature sig, unsigned index) {
    if (index == 0 || index > sig.generators())
      throw SignatureError("generator index " + std::to_string(index) + " outside " +
                           std::to_string(sig.generators()) + " generators");
    return blade(sig, Blade{std::uint32_t{1} << (index - 1)});
  }

  Signature signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Blade b) const {
    auto it = terms_.find(b.mask);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  BasicElement& operator+=(const BasicElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, Scalar(-c));
    return *this;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator-(const BasicElement& a) { return BasicElement(a.sig_) - a; }

  friend BasicElement operator*(const Scalar& s, const BasicElement& a) {
    BasicElement out(a.sig_);
    if (cliffk::is_zero(s)) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, Scalar(s * c));
    return out;
  }

  /// Bilinear extension of blade_mul.
  friend BasicElement operator*(const BasicElement& x, const BasicElement& y) {
    x.check_same(y);
    BasicElement out(x.sig_);
    const auto neg = x.sig_.negative_mask();
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) {
        Scalar c = ca * cb;
        if (blade_sign(a, b, neg) < 0) c = -c;
        out.accumulate(a ^ b, c);
      }
    return out;
  }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  /// Coefficients in blade-mask order, length 2^(p+q).
  std::vector<Scalar> dense() const {
    std::vector<Scalar> v(sig_.algebra_dimension());
    for (const auto& [m, c] : terms_) v[m] = c;
    return v;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicElement& e) {
    if (e.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : e.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      if (m != 0) os << "*" << to_string(Blade{m});
    }
    return os;
  }

 private:
  void check_blade(Blade b) const {
    if ((b.mask & ~sig_.full_mask()) != 0)
      throw SignatureError("blade references a generator beyond " +
                           std::to_string(sig_.generators()));
  }
  void check_same(const BasicElement& o) const {
    if (sig_ != o.sig_) throw SignatureError("operands belong to different signatures");
  }
  void accumulate(std::uint32_t mask, const Scalar& c) {
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (cliffk::is_zero(it->second)) terms_.erase(it);
    } else if (cliffk::is_zero(c)) {
      terms_.erase(it);
    }
  }

  Signature sig_;
  Terms terms_;
};

using CliffordElement = BasicElement<Rational>;
using ComplexCliffordElement = BasicElement<Gaussian>;

/// Volume element e_1 e_2 ... e_{p+q}.
CliffordElement top_element(Signature sig);

/// Default generator bound for center_basis.
inline constexpr unsigned kCenterBound = 8;

/// Basis of the center, found by solving x e_i = e_i x over all 2^(p+q)
/// coefficients.
std::vector<CliffordElement> center_basis(Signature sig, unsigned bound = kCenterBound);

/// Element of the ungraded tensor product C^{left} (x) C^{right}; the two
/// factors commute elementwise.
class TensorElement {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using Terms = std::map<Key, Rational>;

  TensorElement(Signature left, Signature right) : left_(left), right_(right) {
    left_.validate();
    right_.validate();
  }

  /// a (x) b
  static TensorElement pure(const CliffordElement& a, const CliffordElement& b);

  Signature left_signature() const { return left_; }
  Signature right_signature() const { return right_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  /// (a (x) b)(a' (x) b') = aa' (x) bb', extended bilinearly.
  friend TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);
  friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    return tensor_mul(x, y);
  }

  /// Coefficient of blade pair (a, b) sits at index a * 2^{|right|} + b.
  SparseVector<Rational> sparse() const;

 private:
  void accumulate(const Key& k, const Rational& c);

  Signature left_;
  Signature right_;
  Terms terms_;
};

}  // namespace cliffk
