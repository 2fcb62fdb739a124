#pragma once
// Algebraic number fields Q[x]/(m) in a power basis, with a pinned complex
// embedding for numeric images. Elements share their field description.

#include <cmath>
#include <complex>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "skein/upoly.hpp"

namespace skein {

struct NumberField {
  std::string name;
  std::string gen;          // printed generator symbol
  UPoly<Rat> minpoly;       // monic
  std::complex<double> root;  // chosen embedding of the generator

  NumberField(std::string n, std::string g, UPoly<Rat> m, std::complex<double> r)
      : name(std::move(n)), gen(std::move(g)), minpoly(std::move(m)), root(r) {}

  int degree() const { return minpoly.degree(); }

  static std::shared_ptr<const NumberField> make(const std::string& name, const std::string& gen,
                                                 std::vector<Rat> coeffs, std::complex<double> root) {
    UPoly<Rat> m(Rat(1), std::move(coeffs));
    if (m.degree() < 1 || !skein::is_zero(m.lead() - Rat(1)))
      throw SkeinError("number field needs a monic minimal polynomial");
    return std::make_shared<NumberField>(name, gen, std::move(m), root);
  }

  // x^2-x-1, generator tau = (1+sqrt5)/2
  static std::shared_ptr<const NumberField> golden();
  // x^2-3x-1, generator (3+sqrt13)/2
  static std::shared_ptr<const NumberField> sqrt13_half();
  // x^2+x+1, generator a primitive cube root of unity
  static std::shared_ptr<const NumberField> omega();
  // n-th cyclotomic field
  static std::shared_ptr<const NumberField> cyclotomic(unsigned n);
  // x^4-36x^2+64, generator sqrt13+sqrt5 (compositum via a primitive element)
  static std::shared_ptr<const NumberField> sqrt13_sqrt5();
};

struct NFElem {
  std::shared_ptr<const NumberField> F;
  std::vector<Rat> c;  // power-basis coordinates, length F->degree()

  NFElem() = default;
  explicit NFElem(std::shared_ptr<const NumberField> f) : F(std::move(f)), c(F->degree(), Rat(0)) {}
  NFElem(std::shared_ptr<const NumberField> f, std::vector<Rat> coords)
      : F(std::move(f)), c(std::move(coords)) {
    c.resize(F->degree(), Rat(0));
  }
  static NFElem from_rat(std::shared_ptr<const NumberField> f, const Rat& v) {
    NFElem e(std::move(f));
    e.c[0] = v;
    return e;
  }
  static NFElem generator(std::shared_ptr<const NumberField> f) {
    NFElem e(std::move(f));
    if (e.F->degree() < 2) throw SkeinError("generator of a degree-1 field");
    e.c[1] = Rat(1);
    return e;
  }

  bool zero() const {
    for (auto& v : c)
      if (!skein::is_zero(v)) return false;
    return true;
  }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    NFElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    NFElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend NFElem operator-(const NFElem& a) {
    NFElem r = a;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    int n = a.F->degree();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i) {
      if (skein::is_zero(a.c[i])) continue;
      for (int j = 0; j < n; ++j) prod[i + j] += a.c[i] * b.c[j];
    }
    // Reduce x^k for k >= n against the monic minimal polynomial.
    for (int k = 2 * n - 2; k >= n; --k) {
      if (skein::is_zero(prod[k])) continue;
      Rat f = prod[k];
      prod[k] = 0;
      for (int j = 0; j < n; ++j) prod[k - n + j] -= f * a.F->minpoly.c[j];
    }
    prod.resize(n);
    return NFElem(a.F, std::move(prod));
  }
  bool operator==(const NFElem& o) const { return (*this - o).zero(); }
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  std::complex<double> to_complex() const {
    std::complex<double> acc(0), x = F->root;
    for (int i = (int)c.size() - 1; i >= 0; --i) acc = acc * x + std::complex<double>(c[i].get_d());
    return acc;
  }

  std::string str() const {
    UPoly<Rat> p(Rat(1), c);
    return p.str(F->gen);
  }
};

inline bool is_zero(const NFElem& a) { return a.zero(); }
inline NFElem zero_like(const NFElem& a) { return NFElem(a.F); }
inline NFElem one_like(const NFElem& a) { return NFElem::from_rat(a.F, Rat(1)); }
inline NFElem from_long(const NFElem& a, long v) { return NFElem::from_rat(a.F, Rat(v)); }
inline NFElem inverse(const NFElem& a) {
  if (a.zero()) throw SkeinError("number field: inverse of zero");
  UPoly<Rat> p(Rat(1), a.c);
  auto [g, s, t] = xgcd_poly(p, a.F->minpoly);
  if (g.degree() != 0)
    throw SkeinError("number field: inverse failed (reducible minimal polynomial?)");
  UPoly<Rat> inv = s * inverse(g.c[0]);
  auto [q, r] = UPoly<Rat>::divmod(inv, a.F->minpoly);
  return NFElem(a.F, r.c);
}
inline NFElem exact_div(const NFElem& a, const NFElem& b) { return a * inverse(b); }
inline std::string to_string(const NFElem& a) { return a.str(); }

inline std::shared_ptr<const NumberField> NumberField::golden() {
  static auto f = make("Q(tau)", "tau", {Rat(-1), Rat(-1), Rat(1)}, {1.6180339887498949, 0});
  return f;
}
inline std::shared_ptr<const NumberField> NumberField::sqrt13_half() {
  // Generator is the larger root (3+sqrt13)/2 of x^2-3x-1.
  static auto f = make("Q(sqrt13)", "g", {Rat(-1), Rat(-3), Rat(1)}, {3.302775637731995, 0});
  return f;
}
inline std::shared_ptr<const NumberField> NumberField::omega() {
  static auto f = make("Q(omega)", "w", {Rat(1), Rat(1), Rat(1)}, {-0.5, 0.8660254037844386});
  return f;
}
namespace detail {
inline UPoly<Rat> cyclotomic_poly(unsigned n) {
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  UPoly<Rat> num(Rat(1));
  num.c.assign(n + 1, Rat(0));
  num.c[0] = Rat(-1);
  num.c[n] = Rat(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = exact_div(num, cyclotomic_poly(d));
  return num;
}
}  // namespace detail

inline std::shared_ptr<const NumberField> NumberField::cyclotomic(unsigned n) {
  UPoly<Rat> phi = detail::cyclotomic_poly(n);
  double ang = 2.0 * 3.14159265358979323846 / n;
  return make("Q(zeta" + std::to_string(n) + ")", "z", phi.c, {std::cos(ang), std::sin(ang)});
}
inline std::shared_ptr<const NumberField> NumberField::sqrt13_sqrt5() {
  static auto f = make("Q(sqrt13,sqrt5)", "g", {Rat(64), Rat(0), Rat(-36), Rat(0), Rat(1)},
                       {5.841618911298925, 0});  // sqrt13+sqrt5
  return f;
}

}  // namespace skein
