#pragma once
// Rational functions in (d, t). During Gram work denominators stay powers of
// the bubble-free quadratic dt+d+t, so the cheap reduction (content, common
// monomial, common power of that quadratic) keeps everything small; a full
// bivariate gcd is available for printing and final normalisation.

#include <climits>
#include <optional>
#include <string>

#include "skein/bivar_poly.hpp"
#include "skein/bivar_tools.hpp"

namespace skein {

struct RatFunc {
  BivarPoly num, den;

  RatFunc() : num(), den(Rat(1)) {}
  explicit RatFunc(const Rat& c) : num(c), den(Rat(1)) {}
  explicit RatFunc(BivarPoly p) : num(std::move(p)), den(Rat(1)) {}
  RatFunc(BivarPoly n, BivarPoly d) : num(std::move(n)), den(std::move(d)) { reduce_light(); }

  static RatFunc var_d() { return RatFunc(BivarPoly::var_d()); }
  static RatFunc var_t() { return RatFunc(BivarPoly::var_t()); }
  static const BivarPoly& q11() {
    static const BivarPoly q = BivarPoly::parse("d*t+d+t");
    return q;
  }

  bool is_zero_r() const { return num.is_zero(); }
  bool is_polynomial() const { return den.is_constant(); }

  void reduce_light() {
    if (den.is_zero()) throw SkeinError("rational function: zero denominator");
    if (num.is_zero()) {
      den = BivarPoly(Rat(1));
      return;
    }
    // Common monomial factor.
    int md = INT_MAX, mt = INT_MAX;
    for (auto& [e, c] : num.terms) {
      md = std::min(md, e[0]);
      mt = std::min(mt, e[1]);
    }
    for (auto& [e, c] : den.terms) {
      md = std::min(md, e[0]);
      mt = std::min(mt, e[1]);
    }
    if (md > 0 || mt > 0) {
      BivarPoly m = BivarPoly::monomial(Rat(1), md, mt);
      num = *num.exact_divide(m);
      den = *den.exact_divide(m);
    }
    // Common powers of the square-relation denominator.
    while (den.deg_d() + den.deg_t() >= 2) {
      auto dq = den.exact_divide(q11());
      if (!dq) break;
      auto nq = num.exact_divide(q11());
      if (!nq) break;
      den = *dq;
      num = *nq;
    }
    // Denominator primitive with positive leading coefficient.
    Rat c = den.content();
    if (c != 1) {
      den = den.primitive_part();
      num *= Rat(1) / c;
    }
  }

  RatFunc reduced_full() const {
    if (num.is_zero()) return RatFunc();
    BivarPoly g = bivar_gcd(num, den);
    RatFunc r(*num.exact_divide(g), *den.exact_divide(g));
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den == b.den) return RatFunc(a.num - b.num, a.den);
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num = -r.num;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero_r()) throw SkeinError("rational function division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
  }
  bool operator==(const RatFunc& o) const { return num * o.den == o.num * den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc pow(unsigned e) const {
    RatFunc r(Rat(1)), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  template <class R>
  R eval(const R& dv, const R& tv) const {
    R n = num.eval(dv, tv), d = den.eval(dv, tv);
    if (is_zero(d)) throw SkeinError("rational function: denominator vanishes at point");
    return n * inverse(d);
  }

  std::string str() const {
    RatFunc r = reduced_full();
    if (r.den.is_constant()) {
      Rat c = r.den.constant_value();
      if (c != 1) r.num *= Rat(1) / c;
      return r.num.str();
    }
    return "(" + r.num.str() + ")/(" + r.den.str() + ")";
  }
};

inline bool is_zero(const RatFunc& a) { return a.is_zero_r(); }
inline RatFunc zero_like(const RatFunc&) { return RatFunc(); }
inline RatFunc one_like(const RatFunc&) { return RatFunc(Rat(1)); }
inline RatFunc from_long(const RatFunc&, long v) { return RatFunc(Rat(v)); }
inline RatFunc inverse(const RatFunc& a) {
  if (a.is_zero_r()) throw SkeinError("rational function: inverse of zero");
  return RatFunc(a.den, a.num);
}
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }
inline std::string to_string(const RatFunc& a) { return a.str(); }

}  // namespace skein
