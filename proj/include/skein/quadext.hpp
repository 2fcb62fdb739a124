#pragma once
// Quadratic extension R[xi]/(xi^2 - D) of an exact field R; carries the
// square-symbol discriminant D shared between elements. Used for the pair of
// 2-2 idempotents, whose coefficients live in Q(d,t)[xi].

#include <memory>
#include <string>

#include "skein/rational.hpp"

namespace skein {

template <class R>
struct QuadExt {
  R a, b;  // a + b*xi
  std::shared_ptr<const R> disc;

  QuadExt(R av, R bv, std::shared_ptr<const R> d)
      : a(std::move(av)), b(std::move(bv)), disc(std::move(d)) {}
  static QuadExt of(const R& v, std::shared_ptr<const R> d) {
    return QuadExt(v, zero_like(v), std::move(d));
  }
  static QuadExt xi(std::shared_ptr<const R> d) {
    return QuadExt(zero_like(*d), one_like(*d), std::move(d));
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, x.disc);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, x.disc);
  }
  friend QuadExt operator-(const QuadExt& x) {
    return QuadExt(zero_like(x.a) - x.a, zero_like(x.b) - x.b, x.disc);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a * y.a + x.b * y.b * (*x.disc), x.a * y.b + x.b * y.a, x.disc);
  }
  bool operator==(const QuadExt& o) const {
    return is_zero(a - o.a) && is_zero(b - o.b);
  }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  std::string str() const {
    return "(" + to_string(a) + ") + (" + to_string(b) + ")*xi";
  }
};

template <class R>
bool is_zero(const QuadExt<R>& x) {
  return is_zero(x.a) && is_zero(x.b);
}
template <class R>
QuadExt<R> zero_like(const QuadExt<R>& x) {
  return QuadExt<R>(zero_like(x.a), zero_like(x.a), x.disc);
}
template <class R>
QuadExt<R> one_like(const QuadExt<R>& x) {
  return QuadExt<R>(one_like(x.a), zero_like(x.a), x.disc);
}
template <class R>
QuadExt<R> from_long(const QuadExt<R>& x, long v) {
  return QuadExt<R>(from_long(x.a, v), zero_like(x.a), x.disc);
}
template <class R>
QuadExt<R> inverse(const QuadExt<R>& x) {
  // (a + b xi)^-1 = (a - b xi)/(a^2 - b^2 D); requires the norm nonzero,
  // i.e. D not a square in R.
  R norm = x.a * x.a - x.b * x.b * (*x.disc);
  if (is_zero(norm)) throw SkeinError("quadratic extension: zero norm (D is a square?)");
  R ninv = inverse(norm);
  return QuadExt<R>(x.a * ninv, (zero_like(x.b) - x.b) * ninv, x.disc);
}
template <class R>
QuadExt<R> exact_div(const QuadExt<R>& x, const QuadExt<R>& y) {
  return x * inverse(y);
}
template <class R>
std::string to_string(const QuadExt<R>& x) {
  return x.str();
}

}  // namespace skein
