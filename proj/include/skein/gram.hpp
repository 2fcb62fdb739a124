#pragma once
// Gram matrices of diagram inner products and the determinant work on them.
// The symbolic matrices live over Q(d,t), or over Q(omega)(d) for twisted
// sets. Exact determinants run fraction-free on a common-denominator lift;
// univariate lifts instead go through evaluation at enough points and Newton
// interpolation, which stays exact because the lift's degree is bounded by
// the row degrees. Factorization claims are checked by sampling mod 62-bit
// primes; a cofactor of declared shape is recovered through unique odd roots
// and grid interpolation, then rationally reconstructed. The prime-by-prime
// guessing recursion rebuilds integer coefficient polynomials from
// specializations d = p. Kernels at exactly specialized points and ranks
// modulo primes of a number field round out the toolkit.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skein/bivar_tools.hpp"
#include "skein/enumerate.hpp"
#include "skein/eval.hpp"
#include "skein/linalg.hpp"
#include "skein/numberfield.hpp"
#include "skein/primefield.hpp"
#include "skein/ratfunc.hpp"
#include "skein/relations.hpp"
#include "skein/upoly.hpp"

namespace skein {

// --- matrices ----------------------------------------------------------------

template <class R>
struct GramMatrix {
  BasisSet basis;
  std::string relations;  // relation-set name; parameter values live in R
  bool twisted = false;   // members were dotted before gluing
  Matrix<R> entries;

  int size() const { return (int)entries.size(); }
};

// Twisted matrices dot every vertex at the corner just before its leg 0 in
// counterclockwise order. Moving any dot only rescales a row and the matching
// column by a power of omega, so determinants are pinned up to such a phase.
inline PlanarDiagram standard_dotting(PlanarDiagram d) {
  for (int& c : d.dots) c = 2;
  return d;
}

// <x, y> closes x against the mirror image of y; glue() realizes the mirror
// through the nested slot matching, so no reflection of dots is involved.
// The pairing is symmetric (the closed diagrams for <x,y> and <y,x> differ by
// a rotation of the plane), which the upper-triangle fill exploits; the
// symmetry itself is covered by tests.
template <class R>
GramMatrix<R> gram_matrix(const BasisSet& basis, const RelationSet<R>& rels) {
  GramMatrix<R> m{basis, rels.name, rels.twisted, {}};
  const int N = (int)basis.members.size();
  std::vector<PlanarDiagram> rows = basis.members;
  if (rels.twisted)
    for (PlanarDiagram& d : rows) d = standard_dotting(std::move(d));
  m.entries.assign(N, std::vector<R>(N, zero_like(rels.loop)));
  Evaluator<R> ev(rels);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      EvalResult<R> r = ev.value(glue(rows[i], rows[j]));
      if (!r.ok())
        throw SkeinError("gram matrix: evaluation stuck on the pair (" + std::to_string(i) +
                         ", " + std::to_string(j) + ")");
      m.entries[i][j] = *r.value;
      if (j != i) m.entries[j][i] = m.entries[i][j];
    }
  return m;
}

// Pairings <x_i, y_j> of one diagram family against another, as a matrix.
// Lets dependence questions be settled without rewriting to a basis.
template <class R>
Matrix<R> pairing_matrix(const std::vector<PlanarDiagram>& xs,
                         const std::vector<PlanarDiagram>& ys, const RelationSet<R>& rels) {
  Matrix<R> m((int)xs.size(), std::vector<R>((int)ys.size(), zero_like(rels.loop)));
  Evaluator<R> ev(rels);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < ys.size(); ++j) {
      EvalResult<R> r = ev.value(glue(xs[i], ys[j]));
      if (!r.ok()) throw SkeinError("pairing matrix: evaluation stuck");
      m[i][j] = *r.value;
    }
  return m;
}

// --- exact determinants --------------------------------------------------------

// Determinant over Q(d,t): every row is cleared by the least common multiple
// of its denominators, the integer-polynomial lift goes through fraction-free
// elimination, and the row denominators divide back out at the end. The
// check_seed drives a three-point modular re-check of the result.
struct ExactDet {
  RatFunc value;
  BivarPoly lift;      // determinant of the cleared-denominator matrix
  BivarPoly row_dens;  // product of the per-row common denominators
  uint64_t check_seed = 0;
};
ExactDet det_exact(const GramMatrix<RatFunc>& m, uint64_t check_seed = 0x5eed);

// Newton-form interpolation through distinct nodes over any field.
template <class K>
UPoly<K> interpolate_points(const std::vector<K>& xs, const std::vector<K>& ys) {
  if (xs.empty() || xs.size() != ys.size())
    throw SkeinError("interpolation: node and value counts differ");
  const size_t n = xs.size();
  std::vector<K> dd = ys;  // divided differences, filled in place
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) * inverse(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  K one = one_like(xs[0]);
  UPoly<K> p = UPoly<K>::constant(one, dd[n - 1]);
  for (int i = (int)n - 2; i >= 0; --i) {
    UPoly<K> lin(one, {zero_like(one) - xs[i], one});
    p = p * lin + UPoly<K>::constant(one, dd[i]);
  }
  return p;
}

// Determinant of a univariate rational-function matrix: clear each row by the
// monic lcm of its denominators, bound the lift's degree by the sum of row
// maxima, evaluate at that many points plus one, interpolate, and confirm at
// one extra node. Exact over any characteristic-zero field K.
template <class K>
struct UnivarDet {
  URat<K> value;
  UPoly<K> lift;
  UPoly<K> row_dens;
  int degree_bound = 0;
};

template <class K>
UnivarDet<K> det_univariate(const Matrix<URat<K>>& m) {
  if (m.empty()) throw SkeinError("det: empty matrix (caller handles 0x0)");
  const int N = (int)m.size();
  const K one = one_like(m[0][0].num.unit);
  Matrix<UPoly<K>> lift(N, std::vector<UPoly<K>>(N, UPoly<K>(one)));
  UPoly<K> dens = UPoly<K>::constant(one, one);
  int bound = 0;
  for (int i = 0; i < N; ++i) {
    UPoly<K> D = UPoly<K>::constant(one, one);
    for (int j = 0; j < N; ++j) {
      const UPoly<K>& dj = m[i][j].den;
      D = exact_div(D * dj, gcd_poly(D, dj));
    }
    int row_max = -1;
    for (int j = 0; j < N; ++j) {
      lift[i][j] = m[i][j].num * exact_div(D, m[i][j].den);
      row_max = std::max(row_max, lift[i][j].degree());
    }
    bound += std::max(0, row_max);
    dens = dens * D;
  }
  auto det_at = [&](const K& x) {
    Matrix<K> a(N, std::vector<K>(N, zero_like(one)));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) a[i][j] = lift[i][j].eval_k(x);
    return det_gauss(std::move(a));
  };
  std::vector<K> xs, ys;
  for (int s = 0; s <= bound; ++s) {
    xs.push_back(from_long(one, s));
    ys.push_back(det_at(xs.back()));
  }
  UnivarDet<K> out;
  out.lift = interpolate_points(xs, ys);
  out.degree_bound = bound;
  K extra = from_long(one, bound + 1);
  if (!(out.lift.eval_k(extra) == det_at(extra)))
    throw SkeinError("det interpolation failed its extra-node check");
  out.row_dens = dens;
  out.value = URat<K>(out.lift, dens);
  return out;
}

template <class K>
UnivarDet<K> det_exact(const GramMatrix<URat<K>>& m) {
  return det_univariate(m.entries);
}

// Determinant of a matrix already over a field (number field, Q, F_p).
template <class F>
F det_field(const GramMatrix<F>& m) {
  if (m.size() == 0) throw SkeinError("det: empty matrix (caller handles 0x0)");
  return det_gauss(m.entries);
}

// A value over Q(omega)(d) of the form omega^j * (rational function over Q)
// is reported with the phase split off; phase -1 means no power of omega
// rationalizes the value.
struct OmegaPhase {
  int phase = -1;
  std::optional<URat<NFElem>> rational;
};
OmegaPhase normalize_omega_phase(const URat<NFElem>& f);

// --- modular specialization ----------------------------------------------------

// Seeded sampling: primes from [2^61, 2^62) and coordinates from [2, 2^62),
// as recorded in reports for reproducibility.
struct PointSampler {
  std::mt19937_64 rng;
  explicit PointSampler(uint64_t seed) : rng(seed) {}
  uint64_t prime() { return random_prime62(rng); }
  // A 62-bit prime p with gcd(e, p-1) = 1, so x -> x^e is a bijection mod p.
  uint64_t prime_coprime_order(uint64_t e) {
    if (e % 2 == 0) throw SkeinError("even cofactor exponents admit no root-friendly prime");
    for (;;) {
      uint64_t p = random_prime62(rng);
      uint64_t g = std::gcd(e, p - 1);
      if (g == 1) return p;
    }
  }
  uint64_t coordinate() {
    std::uniform_int_distribution<uint64_t> u(2, (uint64_t(1) << 62) - 1);
    return u(rng);
  }
};

// A Gram matrix over Q(d,t) with every coefficient reduced mod a fixed prime,
// for fast re-specialization at many points.
struct ModGram {
  uint64_t p = 0;
  int n = 0;
  struct Term {
    int ed, et;
    uint64_t c;
  };
  struct Entry {
    std::vector<Term> num, den;
  };
  std::vector<Entry> entries;  // row-major, full square

  // Throws when an entry's denominator vanishes at the point.
  Matrix<Fp> at(uint64_t d0, uint64_t t0) const;
  Fp det_at(uint64_t d0, uint64_t t0) const;
};
ModGram compile_mod(const GramMatrix<RatFunc>& m, uint64_t p);

// One-shot specialized determinant; compile_mod + det_at is cheaper in loops.
Fp det_modular(const GramMatrix<RatFunc>& m, uint64_t p, uint64_t d0, uint64_t t0);

// --- factorization claims --------------------------------------------------------

struct ClaimedFactor {
  BivarPoly poly;
  int exponent = 1;  // negative exponents are denominator factors
};
// A factor whose polynomial is not known, only its degrees and exponent; odd
// exponents coprime to p-1 make its values pointwise recoverable.
struct UnknownFactor {
  int deg_d = 0;
  int deg_t = 0;
  int exponent = 1;
};
struct FactorClaim {
  Rat constant = Rat(1);
  std::vector<ClaimedFactor> known;
  std::optional<UnknownFactor> unknown;
};

struct VerifyReport {
  bool verified = false;
  int trials = 0;
  double log10_per_trial = 0;  // log10 of the one-trial false-agreement bound D/N
  uint64_t seed = 0;
  std::vector<uint64_t> primes_used;
  std::string witness;  // refuting (p, d, t) triple when some trial disagrees
  std::optional<BivarPoly> recovered;  // the unknown factor, when one was declared
  std::string notes;

  double log10_error() const { return log10_per_trial * trials; }
};

// Schwartz-Zippel check of det(m) against constant * prod known^e (* unknown).
// With an unknown factor, its values are recovered on an interpolation grid
// over each of three primes, reconstructed to a rational-coefficient
// polynomial, cross-checked between primes, and then used in the trials.
VerifyReport verify_factorization(const GramMatrix<RatFunc>& m, const FactorClaim& claim,
                                  int trials, uint64_t seed);

// --- guessing from specializations -----------------------------------------------

// Reconstruct an integer-coefficient polynomial L(d) from its values at the
// given primes: digits L_s with L = sum_s L_s d^s are read off one at a time,
//   L_s = (value_p - sum_{u<s} L_u p^u) / p^s  (mod p),
// combined across primes by balanced CRT, until every residual vanishes.
// Returns nothing if residuals survive past the degree cap.
std::optional<UPoly<Rat>> digit_reconstruct(const std::vector<uint64_t>& primes,
                                            const std::vector<Int>& values, int max_deg = 64);

// Yun's squarefree decomposition over a characteristic-zero field: returns
// monic squarefree parts with their multiplicities, in increasing order.
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_decompose(const UPoly<K>& f) {
  std::vector<std::pair<UPoly<K>, int>> out;
  if (f.degree() <= 0) return out;
  UPoly<K> df = f.derivative();
  UPoly<K> g = gcd_poly(f, df);
  UPoly<K> w = exact_div(f, g);
  UPoly<K> y = exact_div(df, g);
  int i = 1;
  while (w.degree() > 0) {
    UPoly<K> z = y - w.derivative();
    UPoly<K> h = gcd_poly(w, z);
    if (h.degree() > 0) out.push_back({h, i});
    w = exact_div(w, h);
    y = exact_div(z, h);
    ++i;
  }
  return out;
}

struct GuessPrimeData {
  uint64_t d_prime = 0;
  Rat constant;                                  // det(p, t) = constant * prod parts^mult
  std::vector<std::pair<UPoly<Rat>, int>> parts;  // primitive integer, positive leading coeff
  UPoly<Rat> denominator;  // monic denominator of the specialization; 1 when polynomial
};
struct GuessReport {
  std::vector<GuessPrimeData> per_prime;
  std::optional<BivarPoly> candidate;
  bool low_confidence = false;  // fewer than two primes feeding the CRT
  std::string notes;
};

// Specialize d to each given prime, factor the univariate determinant into
// squarefree parts, and rebuild bivariate coefficients by the digit
// recursion. The candidate re-checks exactly against every input prime.
GuessReport guess_determinant(const GramMatrix<RatFunc>& m, const std::vector<uint64_t>& d_primes);

// --- kernels and ranks ------------------------------------------------------------

// Null-space basis with the re-multiplication check: every returned vector is
// verified to pair to zero against each basis row.
template <class F>
Matrix<F> kernel_at_point(const GramMatrix<F>& m) {
  if (m.size() == 0) return {};
  F one = one_like(m.entries[0][0]);
  Matrix<F> ker = kernel_basis(m.entries, one);
  for (const std::vector<F>& v : ker)
    for (int i = 0; i < m.size(); ++i) {
      F acc = zero_like(one);
      for (int j = 0; j < m.size(); ++j) acc = acc + m.entries[i][j] * v[j];
      if (!is_zero(acc)) throw SkeinError("kernel vector fails the re-multiplication check");
    }
  return ker;
}

// Image of x in the residue field of the prime (p, g - r) of its number
// field; r must be a simple root of the minimal polynomial mod p.
// Coordinate denominators divisible by p are handled by lifting r p-adically
// and dividing exactly; throws when x is not integral at the prime.
Fp nf_residue(const NFElem& x, uint64_t p, uint64_t r);

Matrix<Fp> reduce_mod_prime(const GramMatrix<NFElem>& m, uint64_t p, uint64_t r);

// Rank of the reduction, a lower bound for the rank over the field itself.
int rank_mod_prime(const GramMatrix<NFElem>& m, uint64_t p, uint64_t r);

// Balanced rational reconstruction: the unique n/d with |n|, d <= sqrt(m/2)
// congruent to a mod m, when one exists.
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m);

// --- cached symbolic matrices -------------------------------------------------------

// In-process caches of the symbolic Gram matrices; the generic family is over
// Q(d,t) with the generic cubic relations, the twisted family over
// Q(omega)(d) with the twisted cubic relations.
const GramMatrix<RatFunc>& cached_generic_gram(int n, int k, BasisVariant v);
const GramMatrix<URat<NFElem>>& cached_twisted_gram(int n, int k, BasisVariant v);

}  // namespace skein
