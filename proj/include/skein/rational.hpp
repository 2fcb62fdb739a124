#pragma once
// Exact scalars. GMP's C++ layer supplies arbitrary-precision integers and
// rationals; everything else in the tower is built on top of these.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skein {

using Int = mpz_class;
using Rat = mpq_class;

struct SkeinError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_long(const Rat&, long v) { return Rat(v); }
inline Rat inverse(const Rat& a) {
  if (is_zero(a)) throw SkeinError("rational: division by zero");
  return Rat(1) / a;
}
inline Rat exact_div(const Rat& a, const Rat& b) {
  if (is_zero(b)) throw SkeinError("rational: division by zero");
  return a / b;
}

inline Rat rat_pow(const Rat& a, unsigned long e) {
  Rat r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }

// Parses "p" or "p/q"; used by the polynomial text format.
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw SkeinError("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// Exact integer n-th root when it exists.
inline bool int_nth_root(const Int& a, unsigned n, Int& out) {
  if (n == 0) return false;
  if (sgn(a) < 0 && n % 2 == 0) return false;
  Int m = abs(a);
  Int r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), n);
  Int chk;
  mpz_pow_ui(chk.get_mpz_t(), r.get_mpz_t(), n);
  if (chk != m) return false;
  out = sgn(a) < 0 ? Int(-r) : r;
  return true;
}

inline bool rat_nth_root(const Rat& a, unsigned n, Rat& out) {
  Int num, den;
  if (!int_nth_root(a.get_num(), n, num)) return false;
  if (!int_nth_root(a.get_den(), n, den)) return false;
  out = Rat(num) / Rat(den);
  return true;
}

}  // namespace skein
