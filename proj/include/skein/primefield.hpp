#pragma once
// Prime fields F_p for word-sized primes (sampling range [2, 2^62)), used by
// the modular determinant pipeline. Elements carry their modulus so generic
// ring code never needs global state.

#include <cstdint>
#include <random>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

struct Fp {
  uint64_t v = 0;
  uint64_t p = 0;

  Fp() = default;
  Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

  friend Fp operator+(const Fp& a, const Fp& b) {
    uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return {s, a.p};
  }
  friend Fp operator-(const Fp& a) { return {a.v ? a.p - a.v : 0, a.p}; }
  friend Fp operator*(const Fp& a, const Fp& b) {
    return {(uint64_t)((unsigned __int128)a.v * b.v % a.p), a.p};
  }
  bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
  bool operator!=(const Fp& o) const { return !(*this == o); }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp zero_like(const Fp& a) { return {0, a.p}; }
inline Fp one_like(const Fp& a) { return {1 % a.p, a.p}; }
inline Fp from_long(const Fp& a, long x) {
  long m = x % (long)a.p;
  if (m < 0) m += (long)a.p;
  return {(uint64_t)m, a.p};
}
inline Fp inverse(const Fp& a) {
  if (a.v == 0) throw SkeinError("F_p: inverse of zero");
  // Extended Euclid on signed words; p < 2^63 keeps everything in range.
  int64_t t = 0, nt = 1, r = (int64_t)a.p, nr = (int64_t)a.v;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw SkeinError("F_p: non-invertible element (modulus not prime?)");
  if (t < 0) t += (int64_t)a.p;
  return {(uint64_t)t, a.p};
}
inline Fp exact_div(const Fp& a, const Fp& b) { return a * inverse(b); }
inline Fp fp_pow(Fp b, uint64_t e) {
  Fp r = one_like(b);
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline Fp rat_mod_p(const Rat& q, uint64_t p) {
  Fp sample{0, p};
  auto build = [&](const Int& n) {
    Int m = n % Int(Rat(p).get_num());
    if (sgn(m) < 0) m += Int(Rat(p).get_num());
    return Fp{mpz_get_ui(m.get_mpz_t()), p};
  };
  Fp num = build(Int(q.get_num()));
  if (q.get_den() == 1) return num;
  return num * inverse(build(Int(q.get_den())));
}

inline bool miller_rabin(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    Fp x = fp_pow(Fp{a % n, n}, d);
    if (x.v == 1 || x.v == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x;
      if (x.v == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Uniform prime from [2^61, 2^62): large enough that a single agreement test
// already carries strong Schwartz-Zippel weight.
inline uint64_t random_prime62(std::mt19937_64& rng) {
  for (;;) {
    uint64_t c = (rng() | (1ull << 61) | 1ull) & ((1ull << 62) - 1);
    if (miller_rabin(c)) return c;
  }
}

// All roots of a rational-coefficient polynomial mod p (coefficient
// denominators must be invertible). Cantor–Zassenhaus specialised to the tiny
// degrees of our minimal polynomials.
std::vector<uint64_t> poly_roots_mod_p(const std::vector<Rat>& coeffs, uint64_t p,
                                       std::mt19937_64& rng);

}  // namespace skein
