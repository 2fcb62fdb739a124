#pragma once
// Sparse bivariate polynomials over Q in the loop variable d and the triangle
// variable t. The term map is ordered by (deg_d, deg_t), which makes every
// printed form and every arithmetic result canonical.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

class BivarPoly {
 public:
  using Exp = std::array<int, 2>;  // {deg_d, deg_t}
  std::map<Exp, Rat> terms;        // no zero coefficients stored

  BivarPoly() = default;
  explicit BivarPoly(const Rat& c) {
    if (!skein::is_zero(c)) terms[{0, 0}] = c;
  }
  explicit BivarPoly(long c) : BivarPoly(Rat(c)) {}

  static BivarPoly var_d() { return monomial(Rat(1), 1, 0); }
  static BivarPoly var_t() { return monomial(Rat(1), 0, 1); }
  static BivarPoly monomial(const Rat& c, int ed, int et) {
    BivarPoly p;
    if (!skein::is_zero(c)) p.terms[{ed, et}] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exp{0, 0});
  }
  Rat constant_value() const {
    if (terms.empty()) return Rat(0);
    auto it = terms.find({0, 0});
    return it == terms.end() ? Rat(0) : it->second;
  }
  int deg_d() const {
    int m = -1;
    for (auto& [e, c] : terms) m = std::max(m, e[0]);
    return m;  // -1 for the zero polynomial
  }
  int deg_t() const {
    int m = -1;
    for (auto& [e, c] : terms) m = std::max(m, e[1]);
    return m;
  }
  int total_degree() const {
    int m = -1;
    for (auto& [e, c] : terms) m = std::max(m, e[0] + e[1]);
    return m;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(const BivarPoly& a) {
    BivarPoly r;
    for (auto& [e, c] : a.terms) r.terms[e] = -c;
    return r;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (auto& [ea, ca] : a.terms)
      for (auto& [eb, cb] : b.terms)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
  }
  BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }
  BivarPoly& operator*=(const Rat& c) {
    if (skein::is_zero(c)) {
      terms.clear();
      return *this;
    }
    for (auto& [e, v] : terms) v *= c;
    return *this;
  }
  friend BivarPoly operator*(BivarPoly a, const Rat& c) { return a *= c; }
  friend BivarPoly operator*(const Rat& c, BivarPoly a) { return a *= c; }

  bool operator==(const BivarPoly& o) const { return terms == o.terms; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }
  // std::map's lexicographic comparison; any strict total order will do.
  bool operator<(const BivarPoly& o) const { return terms < o.terms; }

  BivarPoly pow(unsigned e) const {
    BivarPoly r(Rat(1)), b = *this;
    while (e) {
      if (e & 1) r *= b;
      if (e >>= 1) b *= b;
    }
    return r;
  }

  // Evaluate in any commutative ring given images of d and t.
  template <class R>
  R eval(const R& dv, const R& tv) const {
    R acc = zero_like(dv);
    // Power caches keep number-field / mod-p evaluation cheap.
    std::vector<R> dp{one_like(dv)}, tp{one_like(dv)};
    for (auto& [e, c] : terms) {
      while ((int)dp.size() <= e[0]) dp.push_back(dp.back() * dv);
      while ((int)tp.size() <= e[1]) tp.push_back(tp.back() * tv);
      acc = acc + from_rat(dv, c) * dp[e[0]] * tp[e[1]];
    }
    return acc;
  }

  Rat content() const {  // gcd of all coefficients, sign of the leading term
    if (terms.empty()) return Rat(0);
    Int num(0), den(1);
    for (auto& [e, c] : terms) {
      num = gcd(num, Int(c.get_num()));
      den = lcm(den, Int(c.get_den()));
    }
    Rat g = Rat(num) / Rat(den);
    if (sgn(terms.rbegin()->second) < 0) g = -g;
    return g;
  }
  BivarPoly primitive_part() const {
    if (terms.empty()) return *this;
    Rat c = content();
    BivarPoly r = *this;
    for (auto& [e, v] : r.terms) v /= c;
    return r;
  }

  // Exact division; nullopt when the quotient does not exist in Q[d,t].
  std::optional<BivarPoly> exact_divide(const BivarPoly& div) const;

  std::string str() const;
  static BivarPoly parse(const std::string& text);

 private:
  void add_term(const Exp& e, const Rat& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (!skein::is_zero(c)) terms.emplace(e, c);
    } else {
      it->second += c;
      if (skein::is_zero(it->second)) terms.erase(it);
    }
  }
  template <class R>
  static R from_rat(const R& sample, const Rat& c) {
    R num = from_long(sample, 0);
    // Build c.num and c.den digit-by-digit so huge coefficients survive the
    // trip into machine-word rings.
    auto build = [&sample](const Int& n) {
      R acc = from_long(sample, 0);
      R ten = from_long(sample, 10);
      std::string s = n.get_str();
      size_t i = s[0] == '-' ? 1 : 0;
      for (; i < s.size(); ++i) acc = acc * ten + from_long(sample, s[i] - '0');
      if (s[0] == '-') acc = from_long(sample, 0) - acc;
      return acc;
    };
    num = build(Int(c.get_num()));
    if (c.get_den() == 1) return num;
    return num * inverse(build(Int(c.get_den())));
  }
};

inline bool is_zero(const BivarPoly& p) { return p.is_zero(); }
inline BivarPoly zero_like(const BivarPoly&) { return BivarPoly(); }
inline BivarPoly one_like(const BivarPoly&) { return BivarPoly(Rat(1)); }
inline BivarPoly from_long(const BivarPoly&, long v) { return BivarPoly(Rat(v)); }
// Throwing form for contexts whose divisions are exact by construction
// (fraction-free elimination).
inline BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b) {
  std::optional<BivarPoly> q = a.exact_divide(b);
  if (!q) throw SkeinError("inexact bivariate division");
  return *std::move(q);
}

inline std::optional<BivarPoly> BivarPoly::exact_divide(const BivarPoly& div) const {
  if (div.is_zero()) return std::nullopt;
  BivarPoly rem = *this, quo;
  // Leading term of the divisor under the map order.
  const auto lead = *div.terms.rbegin();
  while (!rem.is_zero()) {
    const auto lt = *rem.terms.rbegin();
    int ed = lt.first[0] - lead.first[0], et = lt.first[1] - lead.first[1];
    if (ed < 0 || et < 0) return std::nullopt;
    BivarPoly m = monomial(lt.second / lead.second, ed, et);
    quo += m;
    rem -= m * div;
    // Progress: the leading term of rem strictly decreases in map order, so
    // this loop terminates.
    if (!rem.is_zero() && !(rem.terms.rbegin()->first < lt.first)) return std::nullopt;
  }
  return quo;
}

inline std::string BivarPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first reads like the write-ups.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (sgn(a) < 0 ? "-" : "+");
      if (sgn(a) < 0) a = -a;
    }
    bool has_var = e[0] > 0 || e[1] > 0;
    if (a != 1 || !has_var) {
      os << a.get_str();
      if (has_var) os << "*";
    }
    if (e[0] > 0) {
      os << "d";
      if (e[0] > 1) os << "^" << e[0];
      if (e[1] > 0) os << "*";
    }
    if (e[1] > 0) {
      os << "t";
      if (e[1] > 1) os << "^" << e[1];
    }
  }
  return os.str();
}

// Accepts sums of integer/rational-coefficient monomials in d and t, with '^'
// for powers and optional '*' between factors, e.g. "d^2*t^5+2d*t^5-4*d*t^4".
inline BivarPoly BivarPoly::parse(const std::string& text) {
  BivarPoly out;
  size_t i = 0, n = text.size();
  auto skip_ws = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  };
  skip_ws();
  if (i == n) throw SkeinError("empty polynomial text");
  while (i < n) {
    skip_ws();
    int sign = 1;
    while (i < n && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    if (i >= n) throw SkeinError("dangling sign in polynomial text");
    Rat coeff(sign);
    int ed = 0, et = 0;
    bool saw_factor = false;
    while (i < n) {
      skip_ws();
      if (i < n && text[i] == '*') {
        if (!saw_factor) throw SkeinError("misplaced '*' in polynomial text");
        ++i;
        continue;
      }
      if (i < n && (isdigit((unsigned char)text[i]))) {
        size_t j = i;
        while (j < n && isdigit((unsigned char)text[j])) ++j;
        std::string digits = text.substr(i, j - i);
        i = j;
        skip_ws();
        if (i < n && text[i] == '/') {  // rational coefficient p/q
          ++i;
          skip_ws();
          size_t k = i;
          while (k < n && isdigit((unsigned char)text[k])) ++k;
          if (k == i) throw SkeinError("bad rational in polynomial text");
          digits += "/" + text.substr(i, k - i);
          i = k;
        }
        coeff *= rat_parse(digits);
        saw_factor = true;
        continue;
      }
      if (i < n && (text[i] == 'd' || text[i] == 't')) {
        char v = text[i++];
        int e = 1;
        skip_ws();
        if (i < n && text[i] == '^') {
          ++i;
          skip_ws();
          size_t j = i;
          while (j < n && isdigit((unsigned char)text[j])) ++j;
          if (j == i) throw SkeinError("bad exponent in polynomial text");
          e = std::stoi(text.substr(i, j - i));
          i = j;
        }
        (v == 'd' ? ed : et) += e;
        saw_factor = true;
        continue;
      }
      break;
    }
    if (!saw_factor) throw SkeinError("bad term in polynomial text near index " + std::to_string(i));
    out += monomial(coeff, ed, et);
    skip_ws();
    if (i < n && text[i] != '+' && text[i] != '-')
      throw SkeinError("unexpected character in polynomial text: " + text.substr(i, 8));
  }
  return out;
}

}  // namespace skein
