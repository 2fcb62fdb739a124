// Root finding over F_p. Degrees here are tiny (minimal polynomials of the
// classification points, squarefree resultant factors), so schoolbook
// polynomial arithmetic plus Cantor-Zassenhaus splitting is plenty.

#include <algorithm>

#include "skein/primefield.hpp"

namespace skein {
namespace {

using Poly = std::vector<uint64_t>;  // c[0] + c[1] x + ..., reduced mod p

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((unsigned __int128)a * b % p);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& a, const Poly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + (unsigned __int128)a[i] * b[j]) % p;
    }
  }
  trim(r);
  return r;
}

// Remainder of a by the monic polynomial m.
Poly rem(Poly a, const Poly& m, uint64_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    uint64_t c = a.back();
    size_t shift = a.size() - m.size();
    if (c != 0) {
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t sub = mulmod(c, m[i], p);
        uint64_t& slot = a[shift + i];
        slot = slot >= sub ? slot - sub : slot + p - sub;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly make_monic(Poly f, uint64_t p) {
  trim(f);
  if (f.empty()) return f;
  uint64_t inv = inverse(Fp{f.back(), p}).v;
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

Poly gcd(Poly a, Poly b, uint64_t p) {
  a = make_monic(std::move(a), p);
  b = make_monic(std::move(b), p);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = make_monic(std::move(r), p);
  }
  return a;
}

// x^e mod m, m monic.
Poly x_powmod(uint64_t e, const Poly& m, uint64_t p) {
  Poly result{1}, base{0, 1};
  base = rem(base, m, p);
  while (e) {
    if (e & 1) result = rem(mul(result, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

Poly powmod(Poly b, uint64_t e, const Poly& m, uint64_t p) {
  Poly result{1};
  b = rem(std::move(b), m, p);
  while (e) {
    if (e & 1) result = rem(mul(result, b, p), m, p);
    b = rem(mul(b, b, p), m, p);
    e >>= 1;
  }
  return result;
}

// f monic, squarefree, splitting completely into linear factors.
void split_linear(const Poly& f, uint64_t p, std::mt19937_64& rng,
                  std::vector<uint64_t>& out) {
  size_t deg = f.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(f[0] ? p - f[0] : 0);  // root of x + c
    return;
  }
  for (;;) {
    // gcd(f, (x+a)^((p-1)/2) - 1) splits off the roots r with r+a a QR.
    uint64_t a = rng() % p;
    Poly w = powmod(Poly{a, 1}, (p - 1) / 2, f, p);
    if (w.empty()) w = Poly{0};
    w[0] = w[0] ? w[0] - 1 : p - 1;
    trim(w);
    Poly g = gcd(f, w, p);
    if (g.size() <= 1 || g.size() == f.size()) continue;
    // h = f / g by synthetic division (both monic).
    Poly h;
    {
      Poly q(f.size() - g.size() + 1, 0);
      Poly r = f;
      while (r.size() >= g.size()) {
        uint64_t c = r.back();
        size_t shift = r.size() - g.size();
        q[shift] = c;
        for (size_t i = 0; i < g.size(); ++i) {
          uint64_t sub = mulmod(c, g[i], p);
          uint64_t& slot = r[shift + i];
          slot = slot >= sub ? slot - sub : slot + p - sub;
        }
        r.pop_back();
        trim(r);
      }
      h = q;
      trim(h);
    }
    split_linear(g, p, rng, out);
    split_linear(h, p, rng, out);
    return;
  }
}

}  // namespace

std::vector<uint64_t> poly_roots_mod_p(const std::vector<Rat>& coeffs, uint64_t p,
                                       std::mt19937_64& rng) {
  Poly f;
  f.reserve(coeffs.size());
  for (const Rat& c : coeffs) f.push_back(rat_mod_p(c, p).v);
  trim(f);
  if (f.empty()) throw SkeinError("poly_roots_mod_p: polynomial vanishes mod p");
  f = make_monic(std::move(f), p);
  if (f.size() == 1) return {};
  // Keep only the distinct linear part: gcd(f, x^p - x).
  Poly xp = x_powmod(p, f, p);
  // xp - x
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = xp[1] >= 1 ? xp[1] - 1 : p - 1;
  trim(xp);
  Poly lin = gcd(f, xp, p);
  std::vector<uint64_t> roots;
  if (lin.size() > 1) split_linear(lin, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace skein
