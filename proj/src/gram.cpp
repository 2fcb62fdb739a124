#include "skein/gram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

namespace skein {

namespace {

uint64_t inv_mod_u64(uint64_t a, uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw SkeinError("no modular inverse: arguments not coprime");
  if (t < 0) t += m;
  return (uint64_t)t;
}

std::vector<ModGram::Term> compile_terms(const BivarPoly& f, uint64_t p) {
  std::vector<ModGram::Term> ts;
  ts.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) {
    Fp v = rat_mod_p(c, p);
    if (v.v != 0) ts.push_back({e[0], e[1], v.v});
  }
  return ts;
}

Fp eval_terms(const std::vector<ModGram::Term>& ts, uint64_t p, uint64_t d0, uint64_t t0) {
  Fp acc{0, p}, dv{d0, p}, tv{t0, p};
  for (const ModGram::Term& t : ts)
    acc = acc + Fp{t.c, p} * fp_pow(dv, (uint64_t)t.ed) * fp_pow(tv, (uint64_t)t.et);
  return acc;
}

Rat pow_rat(const Rat& b, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

// --- exact determinants --------------------------------------------------------

ExactDet det_exact(const GramMatrix<RatFunc>& m, uint64_t check_seed) {
  ExactDet out;
  out.check_seed = check_seed;
  const int N = m.size();
  out.lift = BivarPoly(Rat(1));
  out.row_dens = BivarPoly(Rat(1));
  out.value = RatFunc(Rat(1));
  if (N == 0) return out;

  Matrix<BivarPoly> lift(N, std::vector<BivarPoly>(N));
  BivarPoly dens(Rat(1));
  for (int i = 0; i < N; ++i) {
    BivarPoly D(Rat(1));
    for (int j = 0; j < N; ++j) {
      const BivarPoly& dj = m.entries[i][j].den;
      D = exact_div(D * dj, bivar_gcd(D, dj));
    }
    for (int j = 0; j < N; ++j)
      lift[i][j] = m.entries[i][j].num * exact_div(D, m.entries[i][j].den);
    dens = dens * D;
  }
  out.lift = det_bareiss(std::move(lift));
  out.row_dens = dens;
  out.value = RatFunc(out.lift, out.row_dens).reduced_full();

  // Re-check the cancellation at three random modular points.
  PointSampler s(check_seed);
  int done = 0;
  for (int attempts = 0; done < 3; ++attempts) {
    if (attempts > 64)
      throw SkeinError("determinant self-check could not find usable sample points");
    uint64_t p = s.prime();
    Fp dv{s.coordinate() % p, p}, tv{s.coordinate() % p, p};
    Matrix<Fp> a(N, std::vector<Fp>(N, Fp{0, p}));
    Fp rhs{0, p};
    try {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) a[i][j] = m.entries[i][j].eval<Fp>(dv, tv);
      rhs = out.value.eval<Fp>(dv, tv);
    } catch (const SkeinError&) {
      continue;  // a denominator vanished at the sample; try another
    }
    if (!(det_gauss(std::move(a)) == rhs))
      throw SkeinError("exact determinant failed its modular self-check");
    ++done;
  }
  return out;
}

OmegaPhase normalize_omega_phase(const URat<NFElem>& f) {
  OmegaPhase out;
  const NFElem& unit = f.num.unit;
  if (!unit.F || unit.F->degree() != 2)
    throw SkeinError("omega normalization expects a quadratic field element");
  auto rational_coeffs = [](const UPoly<NFElem>& p) {
    for (const NFElem& k : p.c)
      if (k.c.size() > 1 && !is_zero(k.c[1])) return false;
    return true;
  };
  if (f.num.is_zero_p()) {
    out.phase = 0;
    out.rational = f;
    return out;
  }
  if (!rational_coeffs(f.den)) return out;
  NFElem w = NFElem::generator(unit.F);
  NFElem winv = w * w;  // omega^3 = 1, so omega^2 is the inverse
  NFElem mult = one_like(unit);
  for (int j = 0; j < 3; ++j) {
    UPoly<NFElem> cand = f.num * mult;
    if (rational_coeffs(cand)) {
      out.phase = j;
      out.rational = URat<NFElem>(std::move(cand), f.den);
      return out;
    }
    mult = mult * winv;
  }
  return out;
}

// --- modular specialization ----------------------------------------------------

Matrix<Fp> ModGram::at(uint64_t d0, uint64_t t0) const {
  int maxd = 0, maxt = 0;
  for (const Entry& e : entries)
    for (const std::vector<Term>* side : {&e.num, &e.den})
      for (const Term& t : *side) {
        maxd = std::max(maxd, t.ed);
        maxt = std::max(maxt, t.et);
      }
  std::vector<Fp> dp(maxd + 1, Fp{1 % p, p}), tp(maxt + 1, Fp{1 % p, p});
  Fp dv{d0 % p, p}, tv{t0 % p, p};
  for (int i = 1; i <= maxd; ++i) dp[i] = dp[i - 1] * dv;
  for (int i = 1; i <= maxt; ++i) tp[i] = tp[i - 1] * tv;
  auto val = [&](const std::vector<Term>& ts) {
    Fp acc{0, p};
    for (const Term& t : ts) acc = acc + Fp{t.c, p} * dp[t.ed] * tp[t.et];
    return acc;
  };
  Matrix<Fp> a(n, std::vector<Fp>(n, Fp{0, p}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Entry& e = entries[i * n + j];
      Fp den = val(e.den);
      if (is_zero(den)) throw SkeinError("modular point hits a vanishing denominator");
      a[i][j] = val(e.num) * inverse(den);
    }
  return a;
}

Fp ModGram::det_at(uint64_t d0, uint64_t t0) const {
  if (n == 0) return Fp{1 % p, p};
  return det_gauss(at(d0, t0));
}

ModGram compile_mod(const GramMatrix<RatFunc>& m, uint64_t p) {
  ModGram g;
  g.p = p;
  g.n = m.size();
  g.entries.reserve((size_t)g.n * g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      g.entries.push_back(
          {compile_terms(m.entries[i][j].num, p), compile_terms(m.entries[i][j].den, p)});
  return g;
}

Fp det_modular(const GramMatrix<RatFunc>& m, uint64_t p, uint64_t d0, uint64_t t0) {
  return compile_mod(m, p).det_at(d0, t0);
}

// --- factorization claims --------------------------------------------------------

namespace {

// The value of the claim's right-hand side at a point, without any unknown
// factor. nullopt when a negative-exponent factor vanishes there.
struct CompiledClaim {
  uint64_t p;
  Fp constant;
  struct KF {
    std::vector<ModGram::Term> terms;
    int e;
  };
  std::vector<KF> known;
};

CompiledClaim compile_claim(const FactorClaim& claim, uint64_t p) {
  CompiledClaim cc{p, rat_mod_p(claim.constant, p), {}};
  for (const ClaimedFactor& f : claim.known)
    cc.known.push_back({compile_terms(f.poly, p), f.exponent});
  return cc;
}

std::optional<Fp> claim_value(const CompiledClaim& cc, uint64_t d0, uint64_t t0) {
  Fp acc = cc.constant;
  for (const CompiledClaim::KF& f : cc.known) {
    Fp v = eval_terms(f.terms, cc.p, d0, t0);
    if (is_zero(v)) {
      if (f.e < 0) return std::nullopt;
      return Fp{0, cc.p};
    }
    Fp pw = fp_pow(v, (uint64_t)std::abs(f.e));
    acc = acc * (f.e < 0 ? inverse(pw) : pw);
  }
  return acc;
}

// Values of the unknown factor on an interpolation grid mod p, read off as
// the unique e-th roots of det / (constant * prod known^e). The recovered
// coefficient table is confirmed at two fresh points before it is returned.
std::optional<std::vector<std::vector<uint64_t>>> recover_table_mod_p(
    const ModGram& g, const CompiledClaim& cc, const UnknownFactor& u, PointSampler& s) {
  const uint64_t p = g.p;
  const uint64_t einv = inv_mod_u64((uint64_t)u.exponent, p - 1);
  const int R = u.deg_d + 1, C = u.deg_t + 1;

  auto u_at = [&](uint64_t d0, uint64_t t0) -> std::optional<Fp> {
    Fp det{0, p};
    try {
      det = g.det_at(d0, t0);
    } catch (const SkeinError&) {
      return std::nullopt;
    }
    std::optional<Fp> kv = claim_value(cc, d0, t0);
    if (!kv || is_zero(*kv)) return std::nullopt;
    return fp_pow(det * inverse(*kv), einv);
  };

  for (int restart = 0; restart < 16; ++restart) {
    std::vector<uint64_t> xs, ys;
    std::set<uint64_t> seen;
    while ((int)xs.size() < R) {
      uint64_t x = s.coordinate() % p;
      if (x >= 2 && seen.insert(x).second) xs.push_back(x);
    }
    seen.clear();
    while ((int)ys.size() < C) {
      uint64_t y = s.coordinate() % p;
      if (y >= 2 && seen.insert(y).second) ys.push_back(y);
    }
    std::vector<std::vector<Fp>> grid(R, std::vector<Fp>(C, Fp{0, p}));
    bool ok = true;
    for (int i = 0; ok && i < R; ++i)
      for (int j = 0; ok && j < C; ++j) {
        std::optional<Fp> v = u_at(xs[i], ys[j]);
        if (!v)
          ok = false;
        else
          grid[i][j] = *v;
      }
    if (!ok) continue;

    // Interpolate rows in t, then each t-coefficient in d.
    Fp one{1 % p, p};
    std::vector<Fp> yk(C, one);
    for (int j = 0; j < C; ++j) yk[j] = Fp{ys[j], p};
    std::vector<UPoly<Fp>> rows;
    for (int i = 0; i < R; ++i) rows.push_back(interpolate_points(yk, grid[i]));
    std::vector<Fp> xk(R, one);
    for (int i = 0; i < R; ++i) xk[i] = Fp{xs[i], p};
    std::vector<std::vector<uint64_t>> table(R, std::vector<uint64_t>(C, 0));
    for (int k = 0; k < C; ++k) {
      std::vector<Fp> col(R, Fp{0, p});
      for (int i = 0; i < R; ++i) col[i] = rows[i].coeff(k);
      UPoly<Fp> ck = interpolate_points(xk, col);
      for (int a = 0; a < R; ++a) table[a][k] = ck.coeff(a).v;
    }

    // Fresh-point confirmation of the declared shape.
    int confirmed = 0;
    for (int attempts = 0; confirmed < 2 && attempts < 32; ++attempts) {
      uint64_t d0 = s.coordinate() % p, t0 = s.coordinate() % p;
      if (d0 < 2 || t0 < 2) continue;
      std::optional<Fp> direct = u_at(d0, t0);
      if (!direct) continue;
      Fp acc{0, p}, dv{d0, p}, tv{t0, p};
      for (int a = 0; a < R; ++a)
        for (int k = 0; k < C; ++k)
          acc = acc + Fp{table[a][k], p} * fp_pow(dv, (uint64_t)a) * fp_pow(tv, (uint64_t)k);
      if (!(acc == *direct)) return std::nullopt;
      ++confirmed;
    }
    if (confirmed < 2) continue;
    return table;
  }
  return std::nullopt;
}

}  // namespace

VerifyReport verify_factorization(const GramMatrix<RatFunc>& m, const FactorClaim& claim,
                                  int trials, uint64_t seed) {
  VerifyReport rep;
  rep.seed = seed;
  PointSampler s(seed);

  long degs = 0;
  for (int i = 0; i < m.size(); ++i) {
    long rowmax = 0;
    for (int j = 0; j < m.size(); ++j)
      rowmax = std::max<long>(rowmax, m.entries[i][j].num.total_degree() +
                                          m.entries[i][j].den.total_degree());
    degs += rowmax;
  }
  for (const ClaimedFactor& f : claim.known)
    degs += (long)std::abs(f.exponent) * f.poly.total_degree();
  if (claim.unknown)
    degs += (long)std::abs(claim.unknown->exponent) *
            (claim.unknown->deg_d + claim.unknown->deg_t);
  rep.log10_per_trial = std::log10((double)std::max<long>(degs, 2)) - 61.0 * std::log10(2.0);

  FactorClaim full = claim;
  if (claim.unknown) {
    const UnknownFactor& u = *claim.unknown;
    if (u.exponent <= 0 || u.exponent % 2 == 0)
      throw SkeinError("unknown cofactor exponent must be a positive odd integer");
    const int R = u.deg_d + 1, C = u.deg_t + 1;

    // Coefficient tables modulo two primes, CRT-combined and rationally
    // reconstructed, then confirmed against an independent third prime.
    std::vector<std::vector<std::vector<uint64_t>>> tables;
    std::vector<uint64_t> ps;
    while (tables.size() < 3) {
      uint64_t p = s.prime_coprime_order((uint64_t)u.exponent);
      if (std::find(ps.begin(), ps.end(), p) != ps.end()) continue;
      ModGram g = compile_mod(m, p);
      std::optional<std::vector<std::vector<uint64_t>>> t =
          recover_table_mod_p(g, compile_claim(claim, p), u, s);
      if (!t) {
        rep.notes = "the unknown cofactor does not fit its declared shape mod " +
                    std::to_string(p);
        rep.primes_used = ps;
        rep.primes_used.push_back(p);
        return rep;
      }
      ps.push_back(p);
      tables.push_back(*std::move(t));
    }
    rep.primes_used = ps;

    BivarPoly cand;
    for (int a = 0; a < R; ++a)
      for (int k = 0; k < C; ++k) {
        Int r = crt_pair(Int((unsigned long)tables[0][a][k]), Int((unsigned long)ps[0]),
                         Int((unsigned long)tables[1][a][k]), Int((unsigned long)ps[1]));
        Int mod = Int((unsigned long)ps[0]) * Int((unsigned long)ps[1]);
        std::optional<Rat> q = rational_reconstruct(r, mod);
        if (!q) {
          rep.notes = "cofactor coefficient (" + std::to_string(a) + "," + std::to_string(k) +
                      ") has no small rational reconstruction";
          return rep;
        }
        cand = cand + BivarPoly::monomial(*q, a, k);
      }
    for (int a = 0; a < R; ++a)
      for (int k = 0; k < C; ++k) {
        auto itc = cand.terms.find(BivarPoly::Exp{a, k});
        Fp expect = itc == cand.terms.end() ? Fp{0, ps[2]} : rat_mod_p(itc->second, ps[2]);
        if (expect.v != tables[2][a][k]) {
          rep.notes = "reconstructed cofactor disagrees with an independent third prime";
          return rep;
        }
      }
    rep.recovered = cand;
    full.known.push_back({cand, u.exponent});
    full.unknown.reset();
  }

  // Pointwise trials spread across at least three fresh primes.
  std::vector<uint64_t> trial_primes;
  while ((int)trial_primes.size() < 3) {
    uint64_t p = s.prime();
    if (std::find(trial_primes.begin(), trial_primes.end(), p) == trial_primes.end())
      trial_primes.push_back(p);
  }
  std::vector<ModGram> grams;
  std::vector<CompiledClaim> claims;
  for (uint64_t p : trial_primes) {
    grams.push_back(compile_mod(m, p));
    claims.push_back(compile_claim(full, p));
    rep.primes_used.push_back(p);
  }

  int done = 0;
  for (int attempts = 0; done < trials; ++attempts) {
    if (attempts > 8 * trials + 64)
      throw SkeinError("verification could not find enough usable sample points");
    size_t which = (size_t)done % trial_primes.size();
    uint64_t p = trial_primes[which];
    uint64_t d0 = s.coordinate() % p, t0 = s.coordinate() % p;
    if (d0 < 2 || t0 < 2) continue;
    Fp det{0, p};
    try {
      det = grams[which].det_at(d0, t0);
    } catch (const SkeinError&) {
      continue;
    }
    std::optional<Fp> rhs = claim_value(claims[which], d0, t0);
    if (!rhs) continue;
    if (!(det == *rhs)) {
      rep.trials = done;
      std::ostringstream w;
      w << "p=" << p << " d=" << d0 << " t=" << t0;
      rep.witness = w.str();
      return rep;
    }
    ++done;
  }
  rep.trials = done;
  rep.verified = true;
  return rep;
}

// --- guessing from specializations -----------------------------------------------

std::optional<UPoly<Rat>> digit_reconstruct(const std::vector<uint64_t>& primes,
                                            const std::vector<Int>& values, int max_deg) {
  if (primes.empty() || primes.size() != values.size())
    throw SkeinError("digit reconstruction needs one value per prime");
  const size_t np = primes.size();
  std::vector<Int> residual = values, ppow(np, Int(1));
  std::vector<Rat> cs;
  for (int s = 0; s <= max_deg; ++s) {
    bool allz = true;
    for (const Int& r : residual)
      if (r != 0) allz = false;
    if (allz) return UPoly<Rat>(Rat(1), std::move(cs));
    Int r(0), M(1);
    for (size_t i = 0; i < np; ++i) {
      if (residual[i] % ppow[i] != 0) return std::nullopt;
      Int q = residual[i] / ppow[i];
      Int pi((unsigned long)primes[i]);
      Int digit = q % pi;
      if (digit < 0) digit += pi;
      if (i == 0) {
        r = digit;
        M = pi;
      } else {
        r = crt_pair(r, M, digit, pi);
        M *= pi;
      }
    }
    Int L = balanced_mod(r, M);
    cs.push_back(Rat(L));
    for (size_t i = 0; i < np; ++i) {
      residual[i] -= L * ppow[i];
      ppow[i] *= Int((unsigned long)primes[i]);
    }
  }
  return std::nullopt;
}

namespace {

// Scale a monic rational polynomial to the primitive integer form with a
// positive leading coefficient; returns the scale s with g_int = g * s.
std::pair<UPoly<Rat>, Rat> to_primitive_integer(const UPoly<Rat>& g) {
  Int den_lcm(1), num_gcd(0);
  for (const Rat& c : g.c) den_lcm = lcm(den_lcm, Int(c.get_den()));
  for (const Rat& c : g.c) num_gcd = gcd(num_gcd, Int(c.get_num()) * (den_lcm / Int(c.get_den())));
  if (num_gcd == 0) num_gcd = 1;
  Rat s = Rat(den_lcm) / Rat(num_gcd);
  if (s < 0) s = -s;  // monic input keeps the leading coefficient positive
  return {g * s, s};
}

}  // namespace

GuessReport guess_determinant(const GramMatrix<RatFunc>& m,
                              const std::vector<uint64_t>& d_primes) {
  GuessReport rep;
  if (d_primes.empty()) throw SkeinError("determinant guessing needs at least one prime");
  rep.low_confidence = d_primes.size() < 2;
  const int N = m.size();
  const Rat one(1);
  std::vector<URat<Rat>> values;  // exact det(P, t), aligned with per_prime

  for (uint64_t P : d_primes) {
    URat<Rat> dv = URat<Rat>::constant(one, Rat(Int((unsigned long)P)));
    URat<Rat> tv = URat<Rat>::var(one);
    Matrix<URat<Rat>> a(N, std::vector<URat<Rat>>(N, URat<Rat>(one)));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        URat<Rat> den = m.entries[i][j].den.eval<URat<Rat>>(dv, tv);
        if (is_zero(den)) {
          rep.notes = "an entry denominator vanishes on the line d=" + std::to_string(P);
          return rep;
        }
        a[i][j] = m.entries[i][j].num.eval<URat<Rat>>(dv, tv) / den;
      }
    URat<Rat> val = N == 0 ? one_like(URat<Rat>(one)) : det_univariate(a).value;
    if (val.is_zero_r()) {
      rep.notes = "determinant vanishes identically at d=" + std::to_string(P);
      return rep;
    }

    GuessPrimeData gd;
    gd.d_prime = P;
    gd.denominator = val.den;
    Rat c = val.num.lead();
    for (const auto& [g, mult] : squarefree_decompose(val.num.monic())) {
      auto [gint, scale] = to_primitive_integer(g);
      c = c / pow_rat(scale, mult);
      gd.parts.push_back({gint, mult});
    }
    for (const auto& [g, mult] : squarefree_decompose(val.den)) {
      auto [gint, scale] = to_primitive_integer(g);
      c = c * pow_rat(scale, mult);
      gd.parts.push_back({gint, -mult});
    }
    gd.constant = c;

    // Exact recombination check of the factored form.
    URat<Rat> prod = URat<Rat>::constant(one, c);
    for (const auto& [g, mult] : gd.parts) {
      URat<Rat> gf = URat<Rat>::of(g);
      for (int i = 0; i < std::abs(mult); ++i) prod = mult > 0 ? prod * gf : prod / gf;
    }
    if (!(prod == val)) throw SkeinError("squarefree recombination failed its exact check");
    values.push_back(std::move(val));
    rep.per_prime.push_back(std::move(gd));
  }

  // The shapes (multiplicity, degree) must agree across primes and be
  // unambiguous within each prime for the families to be matched up.
  auto shape = [](const GuessPrimeData& gd) {
    std::vector<std::pair<int, int>> sh;
    for (const auto& [g, mult] : gd.parts) sh.push_back({mult, g.degree()});
    std::sort(sh.begin(), sh.end());
    return sh;
  };
  std::vector<std::pair<int, int>> sh0 = shape(rep.per_prime[0]);
  for (const GuessPrimeData& gd : rep.per_prime)
    if (shape(gd) != sh0) {
      rep.notes = "factor shapes differ between primes; no candidate";
      return rep;
    }
  for (size_t i = 1; i < sh0.size(); ++i)
    if (sh0[i] == sh0[i - 1]) {
      rep.notes = "two factors share multiplicity and degree; matching is ambiguous";
      return rep;
    }
  if (rep.low_confidence) {
    rep.notes = "single prime only; shapes reported without reconstruction";
    return rep;
  }

  std::vector<Int> cvals;
  for (const GuessPrimeData& gd : rep.per_prime) {
    if (gd.constant.get_den() != 1) {
      rep.notes = "specialized constants are not integers; no candidate";
      return rep;
    }
    cvals.push_back(Int(gd.constant.get_num()));
  }
  std::optional<UPoly<Rat>> content = digit_reconstruct(d_primes, cvals);
  if (!content) {
    rep.notes = "the constant parts do not interpolate an integer polynomial in d";
    return rep;
  }

  // Reconstruct each factor family coefficient-by-coefficient.
  std::vector<std::vector<std::pair<UPoly<Rat>, int>>> sorted;
  for (GuessPrimeData& gd : rep.per_prime) {
    auto parts = gd.parts;
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return std::make_pair(a.second, a.first.degree()) <
             std::make_pair(b.second, b.first.degree());
    });
    sorted.push_back(std::move(parts));
  }
  bool has_negative = false;
  std::vector<std::pair<BivarPoly, int>> families;
  for (size_t f = 0; f < sorted[0].size(); ++f) {
    int mult = sorted[0][f].second;
    if (mult < 0) has_negative = true;
    int deg = sorted[0][f].first.degree();
    std::vector<UPoly<Rat>> tc;
    for (int k = 0; k <= deg; ++k) {
      std::vector<Int> vals;
      for (size_t i = 0; i < sorted.size(); ++i) vals.push_back(Int(sorted[i][f].first.coeff(k).get_num()));
      std::optional<UPoly<Rat>> uk = digit_reconstruct(d_primes, vals);
      if (!uk) {
        rep.notes = "a factor coefficient does not interpolate an integer polynomial in d";
        return rep;
      }
      tc.push_back(*std::move(uk));
    }
    families.push_back({from_t_coeffs(tc), mult});
  }

  if (has_negative) {
    rep.notes =
        "denominator factors present; families reconstructed but no expanded candidate";
    return rep;
  }

  BivarPoly cand;
  for (int k = 0; k <= content->degree(); ++k)
    cand = cand + BivarPoly::monomial(content->coeff(k), k, 0);
  for (const auto& [poly, mult] : families)
    for (int i = 0; i < mult; ++i) cand = cand * poly;

  // The candidate must reproduce every specialization exactly.
  for (size_t i = 0; i < d_primes.size(); ++i) {
    URat<Rat> dv = URat<Rat>::constant(one, Rat(Int((unsigned long)d_primes[i])));
    URat<Rat> at_p = cand.eval<URat<Rat>>(dv, URat<Rat>::var(one));
    if (!(at_p == values[i])) {
      rep.notes = "candidate fails the exact re-check at d=" + std::to_string(d_primes[i]);
      rep.candidate.reset();
      return rep;
    }
  }
  rep.candidate = std::move(cand);
  return rep;
}

// --- kernels and ranks ------------------------------------------------------------

Fp nf_residue(const NFElem& x, uint64_t p, uint64_t r) {
  if (!x.F) throw SkeinError("residue of a field element without a field");
  const UPoly<Rat>& f = x.F->minpoly;
  for (const Rat& c : f.c)
    if (c.get_den() != 1)
      throw SkeinError("residue computation expects an integer minimal polynomial");

  Int C(1);
  for (const Rat& q : x.c) C = lcm(C, Int(q.get_den()));
  int e = 0;
  Int Cr = C, pI((unsigned long)p);
  while (Cr % pI == 0) {
    Cr /= pI;
    ++e;
  }

  auto feval = [&](const Int& at, const Int& mod) {
    Int acc(0);
    for (int i = f.degree(); i >= 0; --i) acc = (acc * at + Int(f.c[i].get_num())) % mod;
    return acc;
  };
  Int df0(0);
  {
    Int at((unsigned long)r);
    for (int i = f.degree(); i >= 1; --i) df0 = (df0 * at + i * Int(f.c[i].get_num())) % pI;
  }
  if (feval(Int((unsigned long)r), pI) != 0)
    throw SkeinError("the given residue is not a root of the minimal polynomial");
  if (df0 == 0) throw SkeinError("the given root is not simple modulo p");

  Int M(1);
  for (int i = 0; i <= e; ++i) M *= pI;
  Int root((unsigned long)r);
  Int u((unsigned long)inv_mod_u64(mpz_class(df0).get_ui(), p));
  for (int step = 0; step < e; ++step) {
    root = (root - feval(root, M) * u) % M;
    if (root < 0) root += M;
  }

  Int z(0), rp(1);
  for (size_t i = 0; i < x.c.size(); ++i) {
    Int ni = Int(x.c[i].get_num()) * (C / Int(x.c[i].get_den()));
    z = (z + ni * rp) % M;
    rp = rp * root % M;
  }
  Int pe(1);
  for (int i = 0; i < e; ++i) pe *= pI;
  if (z % pe != 0) throw SkeinError("element is not integral at the chosen prime");
  Int z2 = (z / pe) % pI;
  if (z2 < 0) z2 += pI;
  uint64_t cinv = inv_mod_u64(mpz_class(Cr % pI).get_ui(), p);
  return Fp{z2.get_ui(), p} * Fp{cinv, p};
}

Matrix<Fp> reduce_mod_prime(const GramMatrix<NFElem>& m, uint64_t p, uint64_t r) {
  const int N = m.size();
  Matrix<Fp> a(N, std::vector<Fp>(N, Fp{0, p}));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a[i][j] = nf_residue(m.entries[i][j], p, r);
  return a;
}

int rank_mod_prime(const GramMatrix<NFElem>& m, uint64_t p, uint64_t r) {
  return rank_gauss(reduce_mod_prime(m, p, r));
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m) {
  if (m <= 0) throw SkeinError("rational reconstruction needs a positive modulus");
  Int av = a % m;
  if (av < 0) av += m;
  Int bound = sqrt(m / 2);
  Int r0 = m, r1 = av, s0(0), s1(1);
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  Int n = r1, d = s1;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d == 0 || d > bound || gcd(d, m) != 1 || gcd(n, d) != 1) return std::nullopt;
  if ((n - av * d) % m != 0) return std::nullopt;
  return Rat(n) / Rat(d);
}

// --- cached symbolic matrices -------------------------------------------------------

const GramMatrix<RatFunc>& cached_generic_gram(int n, int k, BasisVariant v) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, GramMatrix<RatFunc>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, k, (int)v);
  auto it = cache.find(key);
  if (it == cache.end()) {
    BasisSet b = enumerate_basis(n, k, v);
    it = cache.emplace(key, gram_matrix(b, generic_cubic_set(RatFunc::var_d(), RatFunc::var_t())))
             .first;
  }
  return it->second;
}

const GramMatrix<URat<NFElem>>& cached_twisted_gram(int n, int k, BasisVariant v) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, GramMatrix<URat<NFElem>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, k, (int)v);
  auto it = cache.find(key);
  if (it == cache.end()) {
    BasisSet b = enumerate_basis(n, k, v);
    auto F = NumberField::omega();
    NFElem one = NFElem::from_rat(F, Rat(1));
    URat<NFElem> d = URat<NFElem>::var(one);
    URat<NFElem> w = URat<NFElem>::constant(one, NFElem::generator(F));
    it = cache.emplace(key, gram_matrix(b, twisted_cubic_set(d, w))).first;
  }
  return it->second;
}

}  // namespace skein
