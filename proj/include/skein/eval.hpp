#pragma once
// Reduction engine: rewrite closed diagrams to scalars and open diagrams to
// combinations over a reduced basis, by repeatedly eliminating an internal
// face with the rules of a relation set. The face picked is always one of
// minimal size; among those, the one containing the smallest dart (a fixed
// diagram gives a fixed reduction transcript), or a seeded random choice when
// exercising order independence. Rules that do not apply leave the engine
// stuck: the offending diagram is reported as a remnant instead of a panic.
//
// Termination: every bigon, triangle, square or pentagon expansion strictly
// drops the vertex count. An edge rewrite keeps the vertex count only in its
// I-shaped term, which shrinks the chosen face, and the other terms drop two
// vertices, so (vertex count, chosen face size) decreases lexicographically.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/enumerate.hpp"
#include "skein/rational.hpp"
#include "skein/relations.hpp"

namespace skein {

// Replace the vertices around an internal face (given as its phi-orbit) by a
// pattern with matching boundary size glued into the hole. Pattern slot j
// lands on the free leg of the face vertex at orbit position (s-j) mod s: the
// hole's rim runs opposite to the face's own traversal, so gluing the face's
// link back in reproduces the original diagram. Strands are chased through
// pattern arcs and through edges joining two of the face's vertices; circles
// closing up entirely inside the surgery are credited to free_loops.
PlanarDiagram substitute_face(const PlanarDiagram& d, const Face& face,
                              const PlanarDiagram& pattern);

// Replace the H-shaped neighbourhood of an internal edge, given by one of its
// darts, with a four-point pattern. With `bar` at vertex u and its partner at
// vertex w (u != w), the pattern is glued in as slot 0 = the leg after bar's
// successor at u, slot 1 = the partner's successor at w, slot 2 = the leg
// after that, slot 3 = bar's successor at u; substituting an H pattern is the
// identity. A set's edge_rule lists what replaces that H.
PlanarDiagram substitute_edge(const PlanarDiagram& d, int bar, const PlanarDiagram& pattern);

// A combination of open diagrams with exact coefficients, merged by canonical
// key and kept sorted for deterministic iteration.
template <class R>
struct LinComb {
  // key -> (coefficient, representative diagram)
  std::map<std::string, std::pair<R, PlanarDiagram>> terms;

  void add(const R& c, const PlanarDiagram& d) {
    if (is_zero(c)) return;
    std::string k = d.canonical_key();
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(std::move(k), std::make_pair(c, d));
      return;
    }
    it->second.first = it->second.first + c;
    if (is_zero(it->second.first)) terms.erase(it);
  }
  bool empty() const { return terms.empty(); }
  std::optional<R> coeff(const PlanarDiagram& d) const {
    auto it = terms.find(d.canonical_key());
    if (it == terms.end()) return std::nullopt;
    return it->second.first;
  }
};

template <class R>
struct EvalResult {
  std::optional<R> value;
  std::optional<PlanarDiagram> stuck;  // remnant no rule applies to
  bool ok() const { return value.has_value(); }
};

enum class ReduceOrder { first_minimal, shuffled };

template <class R>
class Evaluator {
 public:
  explicit Evaluator(RelationSet<R> rels, ReduceOrder order = ReduceOrder::first_minimal,
                     unsigned long seed = 0)
      : rs_(std::move(rels)), order_(order), rng_(seed) {}

  const RelationSet<R>& rels() const { return rs_; }

  // Value of a closed diagram; stuck carries the first irreducible remnant.
  EvalResult<R> value(const PlanarDiagram& d) {
    if (!d.closed()) throw SkeinError("evaluate: diagram has boundary points");
    return value_any(d);
  }

  struct Reduction {
    LinComb<R> combo;
    std::optional<PlanarDiagram> stuck;
    bool ok() const { return !stuck.has_value(); }
  };

  // Rewrite an open diagram as a combination over the target basis: faces
  // below the variant's minimum size are always eliminated, and larger faces
  // are eliminated while the diagram still has more than target.k of them.
  // Every fully reduced diagram must land in the target basis; a reduced
  // shape missing from it indicates an enumeration gap and throws.
  Reduction reduce(const PlanarDiagram& d, const BasisSet& target) {
    if (d.n != target.n) throw SkeinError("reduce: boundary size does not match target basis");
    std::vector<std::string> keys = target.keys();
    std::sort(keys.begin(), keys.end());
    int min_face = target.variant == BasisVariant::square_free ? 5 : 4;
    Reduction out;
    std::vector<std::pair<R, PlanarDiagram>> work;
    work.emplace_back(one_like(rs_.loop), d);
    while (!work.empty()) {
      auto [c, cur] = std::move(work.back());
      work.pop_back();
      guard();
      // Strip scalar parts: circles and closed components.
      Components parts = split_components(cur);
      for (long i = 0; i < parts.free_loops; ++i) c = c * rs_.loop;
      bool dead = false;
      for (const PlanarDiagram& comp : parts.closed) {
        EvalResult<R> cv = value_any(comp);
        if (!cv.ok()) {
          out.stuck = cv.stuck;
          return out;
        }
        c = c * *cv.value;
        if (is_zero(c)) dead = true;
      }
      if (dead) continue;
      PlanarDiagram o = std::move(parts.open);
      std::vector<Face> fs = o.faces();
      int internal_count = 0, smallest = 0;
      for (const Face& f : fs)
        if (f.internal()) {
          if (internal_count == 0 || f.size() < smallest) smallest = f.size();
          internal_count++;
        }
      bool reduce_now = internal_count > 0 && (smallest < min_face || internal_count > target.k);
      if (!reduce_now) {
        if (!is_basis_member(o, target.k, target.variant) ||
            !std::binary_search(keys.begin(), keys.end(), o.canonical_key()))
          throw SkeinError("reduce: fully reduced diagram is missing from the target basis");
        out.combo.add(c, o);
        continue;
      }
      std::vector<std::pair<R, PlanarDiagram>> branches;
      bool fired = false;
      for (const Face& f : fs) {
        if (!f.internal() || f.size() != smallest) continue;
        branches.clear();
        if (expand_face(o, fs, f, branches)) {
          fired = true;
          break;
        }
      }
      if (!fired) {
        out.stuck = o;
        return out;
      }
      for (auto& [bc, bd] : branches) work.emplace_back(c * bc, std::move(bd));
    }
    return out;
  }

 private:
  RelationSet<R> rs_;
  ReduceOrder order_;
  std::mt19937_64 rng_;
  std::map<std::string, EvalResult<R>> memo_;
  long steps_ = 0;

  void guard() {
    if (++steps_ > 20'000'000) throw SkeinError("evaluate: reduction step budget exhausted");
  }

  // Closed diagram, possibly disconnected, possibly with circles.
  EvalResult<R> value_any(const PlanarDiagram& d) {
    R acc = one_like(rs_.loop);
    Components parts = split_components(d);
    if (parts.open.n != 0 || parts.open.V != 0)
      throw SkeinError("evaluate: diagram has boundary points");
    for (long i = 0; i < parts.free_loops; ++i) acc = acc * rs_.loop;
    for (const PlanarDiagram& comp : parts.closed) {
      EvalResult<R> cv = component_value(comp);
      if (!cv.ok()) return cv;
      acc = acc * *cv.value;
    }
    return {acc, std::nullopt};
  }

  // Connected closed diagram with at least one vertex. Candidate faces: in
  // deterministic mode the minimal-size faces in discovery order (so the one
  // holding the smallest dart is first); in shuffled mode any face with an
  // applicable rule, except that edge rewrites stay restricted to minimal
  // faces — the termination measure needs the rewritten face to be minimal.
  EvalResult<R> component_value(const PlanarDiagram& d) {
    std::string key = d.canonical_key();
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    guard();
    std::vector<Face> fs = d.faces();
    int min_size = fs.front().size();
    for (const Face& f : fs) min_size = std::min(min_size, f.size());
    std::vector<const Face*> cand;
    for (const Face& f : fs)
      if (order_ == ReduceOrder::first_minimal ? f.size() == min_size
                                               : face_has_rule(f.size(), min_size))
        cand.push_back(&f);
    if (order_ == ReduceOrder::shuffled) std::shuffle(cand.begin(), cand.end(), rng_);
    EvalResult<R> res;
    std::vector<std::pair<R, PlanarDiagram>> branches;
    bool fired = false;
    for (const Face* f : cand) {
      branches.clear();
      if (expand_face(d, fs, *f, branches)) {
        fired = true;
        break;
      }
    }
    if (!fired) {
      res = {std::nullopt, d};
    } else {
      R acc = zero_like(rs_.loop);
      for (auto& [c, b] : branches) {
        EvalResult<R> bv = value_any(b);
        if (!bv.ok()) {
          memo_.emplace(std::move(key), bv);
          return bv;
        }
        acc = acc + c * *bv.value;
      }
      res = {acc, std::nullopt};
    }
    memo_.emplace(std::move(key), res);
    return res;
  }

  bool face_has_rule(int size, int min_size) const {
    switch (size) {
      case 1:
        return rs_.lollipop_zero;
      case 2:
      case 3:
        return true;
      case 4:
        return rs_.square_rule.has_value() || (rs_.edge_rule.has_value() && size == min_size);
      case 5:
        return rs_.pentagon_rule.has_value() || (rs_.edge_rule.has_value() && size == min_size);
      default:
        return rs_.edge_rule.has_value() && size == min_size;
    }
  }

  // Multiplier for rotating every dot of the face's vertices into the face.
  R twist_into(const PlanarDiagram& d, const Face& f) {
    long k = 0;
    for (int h : f.darts) {
      int corner_in_face = (d.leg_of(h) + 2) % 3;  // corner between legs a-1 and a
      int cur = d.dots[d.vertex_of(h)];
      if (cur < 0) throw SkeinError("twisted evaluation needs every vertex dotted");
      k += ((cur - corner_in_face) % 3 + 3) % 3;
    }
    if (!rs_.omega.has_value()) throw SkeinError("twisted evaluation needs the set's omega");
    R w = one_like(rs_.loop);
    for (long i = 0; i < k % 3; ++i) w = w * *rs_.omega;
    return w;
  }

  // Expand one face of `d` into branches (coefficient, diagram). Returns
  // false when no rule covers it.
  bool expand_face(const PlanarDiagram& d, const std::vector<Face>& fs, const Face& f,
                   std::vector<std::pair<R, PlanarDiagram>>& branches) {
    // Local rules replace an embedded disk: a face that passes a vertex twice
    // (which forces a cut vertex) is not such a disk, so no rule covers it.
    if (f.size() >= 2) {
      std::vector<char> met(d.V, 0);
      for (int h : f.darts) {
        int v = d.vertex_of(h);
        if (met[v]) return false;
        met[v] = 1;
      }
    }
    switch (f.size()) {
      case 1:
        if (!rs_.lollipop_zero) return false;
        return true;  // no branches: the diagram is worth zero
      case 2: {
        R c = rs_.bigon;
        if (rs_.twisted) c = c * twist_into(d, f);
        branches.emplace_back(c, substitute_face(d, f, matching_diagram(2, {{0, 1}})));
        return true;
      }
      case 3: {
        if (rs_.twisted) return true;  // every dotted triangle vanishes
        branches.emplace_back(rs_.triangle, substitute_face(d, f, vertex3()));
        return true;
      }
      case 4:
        if (rs_.square_rule) {
          R base = rs_.twisted ? twist_into(d, f) : one_like(rs_.loop);
          for (const RelTerm<R>& term : *rs_.square_rule)
            branches.emplace_back(base * term.coeff, substitute_face(d, f, term.pattern));
          return true;
        }
        return expand_via_edge(d, fs, f, branches);
      case 5:
        if (rs_.pentagon_rule) {
          R base = rs_.twisted ? twist_into(d, f) : one_like(rs_.loop);
          for (const RelTerm<R>& term : *rs_.pentagon_rule)
            branches.emplace_back(base * term.coeff, substitute_face(d, f, term.pattern));
          return true;
        }
        return expand_via_edge(d, fs, f, branches);
      default:
        return expand_via_edge(d, fs, f, branches);
    }
  }

  // Rewrite an edge of face f so that the I-shaped term shrinks f: the bar is
  // chosen with its successor dart on f and the opposite side of the bar on a
  // different face.
  bool expand_via_edge(const PlanarDiagram& d, const std::vector<Face>& fs, const Face& f,
                       std::vector<std::pair<R, PlanarDiagram>>& branches) {
    if (!rs_.edge_rule) return false;
    if (rs_.twisted) throw SkeinError("edge rewriting for twisted sets is not defined");
    std::vector<int> face_of(d.dart_count(), -1);
    for (size_t i = 0; i < fs.size(); ++i)
      for (int h : fs[i].darts) face_of[h] = (int)i;
    int self = face_of[f.darts[0]];
    std::vector<int> bars;
    for (int x : f.darts) {
      if (d.is_boundary(x)) continue;
      int bar = d.dart(d.vertex_of(x), (d.leg_of(x) + 2) % 3);  // rho(bar) = x
      int m = d.pair[bar];
      if (m < d.n || d.is_boundary(m)) continue;
      if (d.vertex_of(m) == d.vertex_of(x)) continue;
      if (face_of[bar] == self) continue;  // f on both sides of the bar
      bars.push_back(bar);
      if (order_ == ReduceOrder::first_minimal) break;
    }
    if (bars.empty()) return false;
    int bar = bars.size() == 1
                  ? bars[0]
                  : bars[std::uniform_int_distribution<size_t>(0, bars.size() - 1)(rng_)];
    for (const RelTerm<R>& term : *rs_.edge_rule)
      branches.emplace_back(term.coeff, substitute_edge(d, bar, term.pattern));
    return true;
  }
};

// One-call evaluation with a fresh engine.
template <class R>
EvalResult<R> evaluate_closed(const PlanarDiagram& d, const RelationSet<R>& rels) {
  Evaluator<R> ev(rels);
  return ev.value(d);
}

// Proper colourings of the faces of a closed diagram with the given number of
// colours, divided by that number (equivalently: colourings with one face's
// colour pinned). Disconnected pieces multiply; each free circle contributes
// colours-1. A face sharing an edge with itself admits no proper colouring.
Int chromatic_count(const PlanarDiagram& d, long colors);

}  // namespace skein
