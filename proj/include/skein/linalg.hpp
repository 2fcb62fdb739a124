#pragma once
// Generic exact linear algebra: fraction-free Bareiss determinants over an
// integral domain (divisions are exact by construction), plain Gaussian
// elimination over fields, kernels and ranks, CRT lifting, and Cauchy-system
// rational interpolation over a prime field.

#include <utility>
#include <vector>

#include "skein/primefield.hpp"
#include "skein/rational.hpp"

namespace skein {

template <class R>
using Matrix = std::vector<std::vector<R>>;

// Fraction-free determinant. Requires exact_div(R, R); every division in the
// Bareiss recurrence is exact over an integral domain.
template <class R>
R det_bareiss(Matrix<R> a) {
  if (a.empty()) throw SkeinError("det_bareiss: empty matrix (caller handles 0x0)");
  const size_t n = a.size();
  R prev = one_like(a[0][0]);
  bool neg = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      size_t piv = k + 1;
      while (piv < n && is_zero(a[piv][k])) ++piv;
      if (piv == n) return zero_like(a[0][0]);
      std::swap(a[k], a[piv]);
      neg = !neg;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = zero_like(a[0][0]);
    }
    prev = a[k][k];
  }
  return neg ? zero_like(a[0][0]) - a[n - 1][n - 1] : a[n - 1][n - 1];
}

template <class F>
F det_gauss(Matrix<F> a) {
  if (a.empty()) throw SkeinError("det_gauss: empty matrix (caller handles 0x0)");
  const size_t n = a.size();
  F det = one_like(a[0][0]);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && is_zero(a[piv][k])) ++piv;
    if (piv == n) return zero_like(a[0][0]);
    if (piv != k) {
      std::swap(a[k], a[piv]);
      det = zero_like(det) - det;
    }
    det = det * a[k][k];
    F inv = inverse(a[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      if (is_zero(a[i][k])) continue;
      F f = a[i][k] * inv;
      for (size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  return det;
}

// Row echelon; returns rank and (optionally) records pivot columns.
template <class F>
int echelon(Matrix<F>& a, std::vector<int>* pivots = nullptr) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    F inv = inverse(a[r][c]);
    for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      F f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    if (pivots) pivots->push_back((int)c);
    ++r;
  }
  return (int)r;
}

template <class F>
int rank_gauss(Matrix<F> a) {
  return echelon(a);
}

// Basis of the right kernel {v : A v = 0}.
template <class F>
Matrix<F> kernel_basis(Matrix<F> a, const F& one) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  std::vector<int> pivots;
  int rank = echelon(a, &pivots);
  Matrix<F> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<F> v(cols, zero_like(one));
    v[free_c] = one;
    for (int r = 0; r < rank; ++r) v[pivots[r]] = zero_like(one) - a[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// CRT with balanced lifts (coefficients of determinants are signed).

inline Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) throw SkeinError("crt: moduli not coprime");
  Int m = m1 * m2;
  Int r = (r1 * t % m) * m2 + (r2 * s % m) * m1;
  r %= m;
  if (sgn(r) < 0) r += m;
  return r;
}

inline Int balanced_mod(Int r, const Int& m) {
  r %= m;
  if (sgn(r) < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// ---------------------------------------------------------------------------
// Rational-function interpolation over F_p by solving the Cauchy system
//   sum a_j x^j - y * sum b_j x^j = 0  with b monic of degree dden.
// Returns {numerator, denominator}; throws if the system is inconsistent or
// if any sample sits on a pole.

struct FpRatio {
  std::vector<uint64_t> num, den;
};

inline FpRatio interpolate_rational_fp(const std::vector<uint64_t>& xs,
                                       const std::vector<uint64_t>& ys, int dnum, int dden,
                                       uint64_t p) {
  const int unknowns = dnum + 1 + dden;  // b_dden fixed to 1
  if ((int)xs.size() < unknowns) throw SkeinError("interpolate: not enough sample points");
  Matrix<Fp> sys;
  for (size_t i = 0; i < xs.size(); ++i) {
    std::vector<Fp> row;
    Fp x{xs[i], p}, y{ys[i], p};
    Fp xp = one_like(x);
    for (int j = 0; j <= dnum; ++j) {
      row.push_back(xp);
      xp = xp * x;
    }
    xp = one_like(x);
    for (int j = 0; j < dden; ++j) {
      row.push_back(zero_like(x) - y * xp);
      xp = xp * x;
    }
    // RHS: y * x^dden (from the monic denominator term moved across).
    row.push_back(y * fp_pow(x, dden));
    sys.push_back(std::move(row));
  }
  std::vector<int> pivots;
  int rank = echelon(sys, &pivots);
  // Inconsistent if a pivot lands in the RHS column.
  for (int c : pivots)
    if (c == unknowns) throw SkeinError("interpolate: inconsistent system (degree bounds too small)");
  if (rank < unknowns) throw SkeinError("interpolate: underdetermined system");
  std::vector<uint64_t> sol(unknowns);
  for (int r = 0; r < rank; ++r) sol[pivots[r]] = sys[r][unknowns].v;
  FpRatio out;
  out.num.assign(sol.begin(), sol.begin() + dnum + 1);
  out.den.assign(sol.begin() + dnum + 1, sol.end());
  out.den.push_back(1);
  return out;
}

}  // namespace skein
