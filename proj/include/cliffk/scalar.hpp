#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace cliffk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  /// i^k for k taken mod 4.
  static Gaussian unit(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  Gaussian conj() const { return {re, -im}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.re * b.re + b.im * b.im;
    Gaussian t = a * b.conj();
    return {Rational(t.re / n), Rational(t.im / n)};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
    return os << "(" << z.re << (sgn(z.im) < 0 ? "-" : "+") << abs(z.im) << "i)";
  }
};

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Gaussian& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

/// i^k as a scalar; only even k are representable over the rationals.
template <class S>
S unit_power(int k);

template <>
inline Rational unit_power<Rational>(int k) {
  const int r = ((k % 4) + 4) % 4;
  if (r % 2 != 0) throw std::logic_error("odd power of i is not rational");
  return r == 2 ? Rational(-1) : Rational(1);
}

template <>
inline Gaussian unit_power<Gaussian>(int k) {
  return Gaussian::unit(k);
}

}  // namespace cliffk
