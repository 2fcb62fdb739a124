#pragma once
// Bivariate utilities built on the univariate layer: gcd via a primitive
// pseudo-remainder sequence, and Sylvester resultants eliminating either
// variable. No general multivariate factorization lives here by design;
// divisibility questions are answered by exact division.

#include <vector>

#include "skein/bivar_poly.hpp"
#include "skein/linalg.hpp"
#include "skein/upoly.hpp"

namespace skein {

// Coefficients of p viewed in Q[d][t]: result[i] is the d-polynomial on t^i.
inline std::vector<UPoly<Rat>> t_coeffs(const BivarPoly& p) {
  std::vector<UPoly<Rat>> out(std::max(0, p.deg_t()) + 1, UPoly<Rat>(Rat(1)));
  for (auto& [e, c] : p.terms) {
    auto& u = out[e[1]];
    if ((int)u.c.size() <= e[0]) u.c.resize(e[0] + 1, Rat(0));
    u.c[e[0]] = c;
  }
  for (auto& u : out) u.trim();
  while (out.size() > 1 && out.back().is_zero_p()) out.pop_back();
  return out;
}

inline std::vector<UPoly<Rat>> d_coeffs(const BivarPoly& p) {
  std::vector<UPoly<Rat>> out(std::max(0, p.deg_d()) + 1, UPoly<Rat>(Rat(1)));
  for (auto& [e, c] : p.terms) {
    auto& u = out[e[0]];
    if ((int)u.c.size() <= e[1]) u.c.resize(e[1] + 1, Rat(0));
    u.c[e[1]] = c;
  }
  for (auto& u : out) u.trim();
  while (out.size() > 1 && out.back().is_zero_p()) out.pop_back();
  return out;
}

inline BivarPoly from_t_coeffs(const std::vector<UPoly<Rat>>& cs) {
  BivarPoly p;
  for (size_t i = 0; i < cs.size(); ++i)
    for (int j = 0; j <= cs[i].degree(); ++j)
      p += BivarPoly::monomial(cs[i].c[j], j, (int)i);
  return p;
}

inline BivarPoly from_d_coeffs(const std::vector<UPoly<Rat>>& cs) {
  BivarPoly p;
  for (size_t i = 0; i < cs.size(); ++i)
    for (int j = 0; j <= cs[i].degree(); ++j)
      p += BivarPoly::monomial(cs[i].c[j], (int)i, j);
  return p;
}

namespace detail {
// Content of p in Q[d][t]: a monic gcd of the t-coefficients.
inline UPoly<Rat> t_content(const std::vector<UPoly<Rat>>& cs) {
  UPoly<Rat> g(Rat(1));
  for (auto& c : cs) g = gcd_poly(g, c);
  return g;
}
inline std::vector<UPoly<Rat>> divide_all(std::vector<UPoly<Rat>> cs, const UPoly<Rat>& g) {
  if (g.degree() > 0)
    for (auto& c : cs) c = exact_div(c, g);
  return cs;
}
// Pseudo-remainder of a by b in Q[d][t] (both as t-coefficient vectors).
inline std::vector<UPoly<Rat>> prem_t(std::vector<UPoly<Rat>> a, const std::vector<UPoly<Rat>>& b) {
  int db = (int)b.size() - 1;
  const UPoly<Rat>& lb = b.back();
  while ((int)a.size() - 1 >= db && !(a.size() == 1 && a[0].is_zero_p())) {
    int da = (int)a.size() - 1;
    UPoly<Rat> la = a.back();
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - la * b[i];
    while (a.size() > 1 && a.back().is_zero_p()) a.pop_back();
    if (a.size() == 1 && a[0].is_zero_p()) break;
    if ((int)a.size() - 1 == da) throw SkeinError("pseudo-division failed to reduce degree");
  }
  return a;
}
}  // namespace detail

// Gcd in Q[d,t], primitive with positive leading coefficient (map order).
inline BivarPoly bivar_gcd(const BivarPoly& A, const BivarPoly& B) {
  if (A.is_zero()) return B.primitive_part();
  if (B.is_zero()) return A.primitive_part();
  auto a = t_coeffs(A), b = t_coeffs(B);
  UPoly<Rat> ca = detail::t_content(a), cb = detail::t_content(b);
  a = detail::divide_all(a, ca);
  b = detail::divide_all(b, cb);
  UPoly<Rat> cg = gcd_poly(ca, cb);
  if ((int)a.size() < (int)b.size()) std::swap(a, b);
  // Primitive PRS: re-extract contents every step to keep growth in check.
  while (!(b.size() == 1 && b[0].is_zero_p())) {
    auto r = detail::prem_t(a, b);
    a = b;
    if (r.size() == 1 && r[0].is_zero_p()) {
      b = r;
      break;
    }
    b = detail::divide_all(r, detail::t_content(r));
  }
  BivarPoly prim = from_t_coeffs(a);
  prim = prim.primitive_part();
  BivarPoly g = prim * from_t_coeffs({cg});
  return g.primitive_part();
}

namespace detail {
// Sylvester determinant over Q[d] (entries are univariate polynomials, the
// Bareiss divisions stay exact).
inline UPoly<Rat> sylvester_det(const std::vector<UPoly<Rat>>& f, const std::vector<UPoly<Rat>>& g) {
  int m = (int)f.size() - 1, n = (int)g.size() - 1;
  UPoly<Rat> one = UPoly<Rat>::constant(Rat(1), Rat(1));
  if (m < 0 || n < 0) return UPoly<Rat>(Rat(1));
  if (m == 0 && n == 0) return one;
  int N = m + n;
  Matrix<UPoly<Rat>> s(N, std::vector<UPoly<Rat>>(N, UPoly<Rat>(Rat(1))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return det_bareiss(std::move(s));
}
}  // namespace detail

// Resultant eliminating t: a polynomial in d whose roots are the d-coordinates
// of common zeros (plus contributions from leading-coefficient collapse).
inline BivarPoly resultant_t(const BivarPoly& A, const BivarPoly& B) {
  return from_t_coeffs({detail::sylvester_det(t_coeffs(A), t_coeffs(B))});
}

inline BivarPoly resultant_d(const BivarPoly& A, const BivarPoly& B) {
  UPoly<Rat> r = detail::sylvester_det(d_coeffs(A), d_coeffs(B));
  BivarPoly out;
  for (int j = 0; j <= r.degree(); ++j) out += BivarPoly::monomial(r.c[j], 0, j);
  return out;
}

}  // namespace skein
