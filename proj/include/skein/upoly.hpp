#pragma once
// Dense univariate polynomials over an exact coefficient field K, plus the
// fraction field URat<K>. K is duck-typed: it must supply +,-,*, is_zero,
// zero_like, one_like, from_long, inverse. Every polynomial carries `unit`
// (the coefficient 1) so rings with runtime context (prime fields, number
// fields) never lose it on the zero polynomial.

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

template <class K>
struct UPoly {
  K unit;
  std::vector<K> c;  // c[i]*x^i, no trailing zeros

  explicit UPoly(const K& one) : unit(one) {}
  UPoly(const K& one, std::vector<K> coeffs) : unit(one), c(std::move(coeffs)) { trim(); }
  static UPoly constant(const K& one, const K& v) { return UPoly(one, {v}); }
  static UPoly var(const K& one) { return UPoly(one, {zero_like(one), one}); }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  bool is_zero_p() const { return c.empty(); }
  const K& lead() const {
    if (c.empty()) throw SkeinError("lead of zero polynomial");
    return c.back();
  }
  K coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : zero_like(unit); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r(a.unit);
    r.c.resize(std::max(a.c.size(), b.c.size()), zero_like(a.unit));
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r(a.unit);
    r.c.resize(std::max(a.c.size(), b.c.size()), zero_like(a.unit));
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] - b.c[i];
    }
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& v : r.c) v = zero_like(a.unit) - v;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r(a.unit);
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, zero_like(a.unit));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend UPoly operator*(const UPoly& a, const K& s) {
    UPoly r = a;
    for (auto& v : r.c) v = v * s;
    r.trim();
    return r;
  }
  bool operator==(const UPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i] - o.c[i])) return false;
    return true;
  }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  UPoly pow(unsigned e) const {
    UPoly r = constant(unit, unit), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  // Euclidean division; requires invertible leading coefficient (K a field).
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero_p()) throw SkeinError("polynomial division by zero");
    UPoly q(a.unit), r = a;
    K linv = inverse(b.lead());
    int db = b.degree();
    q.c.assign(std::max<int>(0, a.degree() - db + 1), zero_like(a.unit));
    while (r.degree() >= db) {
      K f = r.lead() * linv;
      int shift = r.degree() - db;
      q.c[shift] = q.c[shift] + f;
      for (int i = 0; i <= db; ++i) r.c[shift + i] = r.c[shift + i] - f * b.c[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  UPoly monic() const {
    if (is_zero_p()) return *this;
    return *this * inverse(lead());
  }

  template <class R>
  R eval(const R& x) const {
    R acc = zero_like(x);
    for (int i = degree(); i >= 0; --i) acc = acc * x + promote_coeff(x, c[i]);
    return acc;
  }
  // Horner over K itself.
  K eval_k(const K& x) const {
    K acc = zero_like(unit);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c[i];
    return acc;
  }

  UPoly derivative() const {
    UPoly r(unit);
    for (int i = 1; i <= degree(); ++i) r.c.push_back(c[i] * from_long(unit, i));
    r.trim();
    return r;
  }

  std::string str(const std::string& var = "x") const;

 private:
  template <class R>
  static R promote_coeff(const R& sample, const K& v);
};

template <class K>
UPoly<K> gcd_poly(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero_p()) {
    auto [q, r] = UPoly<K>::divmod(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero_p()) a = a.monic();
  return a;
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::array<UPoly<K>, 3> xgcd_poly(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(a.unit, a.unit), s1(a.unit);
  UPoly<K> t0(a.unit), t1 = UPoly<K>::constant(a.unit, a.unit);
  while (!r1.is_zero_p()) {
    auto [q, r] = UPoly<K>::divmod(r0, r1);
    r0 = r1;
    r1 = r;
    UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero_p()) {
    K linv = inverse(r0.lead());
    r0 = r0 * linv;
    s0 = s0 * linv;
    t0 = t0 * linv;
  }
  return {r0, s0, t0};
}

template <class K>
bool is_zero(const UPoly<K>& p) {
  return p.is_zero_p();
}
template <class K>
UPoly<K> zero_like(const UPoly<K>& p) {
  return UPoly<K>(p.unit);
}
template <class K>
UPoly<K> one_like(const UPoly<K>& p) {
  return UPoly<K>::constant(p.unit, p.unit);
}
template <class K>
UPoly<K> from_long(const UPoly<K>& p, long v) {
  return UPoly<K>::constant(p.unit, from_long(p.unit, v));
}
// Exact division in K[x]; throws if the remainder is nonzero.
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
  auto [q, r] = UPoly<K>::divmod(a, b);
  if (!r.is_zero_p()) throw SkeinError("inexact polynomial division");
  return q;
}

template <class K>
template <class R>
R UPoly<K>::promote_coeff(const R& sample, const K& v) {
  if constexpr (std::is_same_v<R, K>) {
    (void)sample;
    return v;
  } else {
    // Only rational coefficient promotion crosses ring boundaries.
    static_assert(std::is_same_v<K, Rat>, "cross-ring eval needs rational coefficients");
    R num = from_long(sample, 0), ten = from_long(sample, 10);
    auto build = [&](const Int& n) {
      R acc = from_long(sample, 0);
      std::string s = n.get_str();
      size_t i = s[0] == '-' ? 1 : 0;
      for (; i < s.size(); ++i) acc = acc * ten + from_long(sample, s[i] - '0');
      if (s[0] == '-') acc = from_long(sample, 0) - acc;
      return acc;
    };
    if constexpr (std::is_same_v<K, Rat>) {
      num = build(Int(v.get_num()));
      if (v.get_den() == 1) return num;
      return num * inverse(build(Int(v.get_den())));
    }
  }
}

template <class K>
std::string UPoly<K>::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (is_zero(c[i])) continue;
    std::string cs;
    if constexpr (std::is_same_v<K, Rat>) {
      cs = c[i].get_str();
    } else {
      cs = to_string(c[i]);
    }
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? "-" : "+"));
    first = false;
    bool trivial = (cs == "1") && i > 0;
    bool wrap = cs.find_first_of("+-") != std::string::npos && i > 0;
    if (!trivial) {
      if (wrap) os << "(" << cs << ")";
      else os << cs;
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  std::string s = os.str();
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Fraction field of K[x]. Denominator kept monic; gcd-reduced on construction.

template <class K>
struct URat {
  UPoly<K> num, den;

  explicit URat(const K& one) : num(one), den(UPoly<K>::constant(one, one)) {}
  URat(UPoly<K> n, UPoly<K> d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  static URat of(const UPoly<K>& p) { return URat(p, UPoly<K>::constant(p.unit, p.unit)); }
  static URat constant(const K& one, const K& v) {
    return of(UPoly<K>::constant(one, v));
  }
  static URat var(const K& one) { return of(UPoly<K>::var(one)); }

  void normalize() {
    if (den.is_zero_p()) throw SkeinError("rational function with zero denominator");
    if (num.is_zero_p()) {
      den = UPoly<K>::constant(num.unit, num.unit);
      return;
    }
    UPoly<K> g = gcd_poly(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    K linv = inverse(den.lead());
    num = num * linv;
    den = den * linv;
  }

  bool is_zero_r() const { return num.is_zero_p(); }
  friend URat operator+(const URat& a, const URat& b) {
    return URat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend URat operator-(const URat& a, const URat& b) {
    return URat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend URat operator-(const URat& a) { return URat(-a.num, a.den); }
  friend URat operator*(const URat& a, const URat& b) {
    return URat(a.num * b.num, a.den * b.den);
  }
  friend URat operator/(const URat& a, const URat& b) {
    if (b.is_zero_r()) throw SkeinError("rational function division by zero");
    return URat(a.num * b.den, a.den * b.num);
  }
  bool operator==(const URat& o) const { return num * o.den == o.num * den; }
  bool operator!=(const URat& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const {
    if (den.degree() == 0 && !den.c.empty() && is_zero(den.c[0] - den.unit))
      return num.str(var);
    return "(" + num.str(var) + ")/(" + den.str(var) + ")";
  }
};

template <class K>
bool is_zero(const URat<K>& r) {
  return r.is_zero_r();
}
template <class K>
URat<K> zero_like(const URat<K>& r) {
  return URat<K>(r.num.unit);
}
template <class K>
URat<K> one_like(const URat<K>& r) {
  return URat<K>::constant(r.num.unit, r.num.unit);
}
template <class K>
URat<K> from_long(const URat<K>& r, long v) {
  return URat<K>::constant(r.num.unit, from_long(r.num.unit, v));
}
template <class K>
URat<K> inverse(const URat<K>& r) {
  if (r.is_zero_r()) throw SkeinError("inverse of zero rational function");
  return URat<K>(r.den, r.num);
}
template <class K>
URat<K> exact_div(const URat<K>& a, const URat<K>& b) {
  return a / b;
}

}  // namespace skein
