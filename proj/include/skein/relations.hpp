#pragma once
// Local rewrite data for evaluating trivalent diagrams. A relation set fixes
// the scalar shed by each small face (free circle, one-sided face, bigon,
// triangle) and, optionally, pattern expansions: a square or pentagon face can
// be replaced by a combination of open diagrams with the same boundary, and an
// edge's H-neighbourhood can be rewritten into the other three four-point
// diagrams. Twisted sets work with dotted vertices; moving a dot one corner
// counterclockwise multiplies a diagram's value by the eigenvalue omega.
//
// Coefficients live in a caller-chosen exact ring R (rationals, bivariate
// rational functions, univariate functions of q, number fields, prime
// fields); presets take the ring's generators as arguments and build every
// coefficient with ring operations, so a set can be specialised by passing
// point values instead of symbols.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/enumerate.hpp"

namespace skein {

template <class R>
struct RelTerm {
  R coeff;
  PlanarDiagram pattern;
};

template <class R>
using PatternRule = std::vector<RelTerm<R>>;

template <class R>
struct RelationSet {
  std::string name;
  R loop;        // value of a vertex-free circle
  R bigon;       // two-sided face -> bigon * strand
  R triangle;    // three-sided face -> triangle * vertex
  bool lollipop_zero = true;  // one-sided faces kill the diagram

  // Patterns replacing a four-sided face (four-point diagrams).
  std::optional<PatternRule<R>> square_rule;
  // Patterns replacing a five-sided face (five-point diagrams).
  std::optional<PatternRule<R>> pentagon_rule;
  // Patterns replacing the H-shaped neighbourhood of an internal edge. The
  // H is read with its bar horizontal: slot 0 below the left end, then
  // counterclockwise. Used by sets that reduce faces of any size.
  std::optional<PatternRule<R>> edge_rule;
  // Reserved for externally supplied data reducing a pair of adjacent
  // pentagons, or a pentagon glued to a hexagon.
  std::optional<PatternRule<R>> pentapent_rule;
  std::optional<PatternRule<R>> hexapent_rule;

  bool twisted = false;         // patterns and inputs carry vertex dots
  std::optional<R> omega;       // rotation eigenvalue, set by twisted sets
};

// The four-point diagrams, in the naming used throughout: two strands side by
// side, a cup over a cap, and the two trees i_diagram / h_diagram.
inline PlanarDiagram two_strands() { return matching_diagram(4, {{0, 3}, {1, 2}}); }
inline PlanarDiagram cup_cap() { return matching_diagram(4, {{0, 1}, {2, 3}}); }

// --- presets ----------------------------------------------------------------

// Bigon and triangle normalised to (1, t), loop value d, and the square
// expansion valid whenever the four-point space is four-dimensional:
//   square = (dt^2+t^2-1)/(dt+d+t) (I + H) + (-t^2+t+1)/(dt+d+t) (|| + cupcap).
// Requires dt+d+t invertible. Closed diagrams with fewer than twelve faces
// always expose a face with at most four sides, so these rules terminate.
template <class R>
RelationSet<R> generic_cubic_set(const R& d, const R& t) {
  R one = one_like(d);
  R den = d * t + d + t;
  if (is_zero(den)) throw SkeinError("relation set: dt+d+t vanishes at this point");
  R tree_c = exact_div(d * t * t + t * t - one, den);
  R arc_c = exact_div(one + t - t * t, den);
  RelationSet<R> rs{.name = "generic_cubic", .loop = d, .bigon = one, .triangle = t};
  rs.square_rule = PatternRule<R>{{tree_c, i_diagram()},
                                  {tree_c, h_diagram()},
                                  {arc_c, two_strands()},
                                  {arc_c, cup_cap()}};
  return rs;
}

// The two-parameter family restricted to its symmetric curve, where the extra
// relation H = I - 1/(d-1) || + 1/(d-1) cupcap rewrites any internal edge and
// the triangle value becomes t = (d-2)/(d-1). With the edge rule every face
// size can be reduced, so evaluation terminates on all closed diagrams.
template <class R>
RelationSet<R> so3_set(const R& d) {
  R one = one_like(d);
  R dm1 = d - one;
  if (is_zero(dm1)) throw SkeinError("relation set: d-1 vanishes at this point");
  R inv = inverse(dm1);
  RelationSet<R> rs{
      .name = "so3", .loop = d, .bigon = one, .triangle = exact_div(d - one - one, dm1)};
  rs.edge_rule = PatternRule<R>{{one, i_diagram()},
                                {zero_like(d) - inv, two_strands()},
                                {inv, cup_cap()}};
  return rs;
}

// Face colourings with n colours, kept in the unnormalised grading where the
// bigon is worth n-2: loop n-1, bigon n-2, triangle n-3, and the edge rule
// H = I + cupcap - ||. Dividing each vertex by sqrt(n-2) converts values to
// the (bigon = 1) normalisation: a closed diagram with V vertices satisfies
//   value_here = (n-2)^(V/2) * value_normalised(d = n-1, t = (n-3)/(n-2)).
template <class R>
RelationSet<R> chromatic_set(const R& n) {
  R one = one_like(n);
  RelationSet<R> rs{.name = "chromatic",
                    .loop = n - one,
                    .bigon = n - one - one,
                    .triangle = n - one - one - one};
  rs.edge_rule = PatternRule<R>{{one, i_diagram()},
                                {one, cup_cap()},
                                {zero_like(n) - one, two_strands()}};
  return rs;
}

// Golden sets: when the loop value satisfies d^2 = d + 1 the triangle value
// is the conjugate root t = 1 - d, and there is an extra relation
// I = || - (1/d) cupcap; rotated once it rewrites any internal edge as
// H = cupcap - (1/d) ||. Every face size reduces, and the point-space
// dimensions follow the Fibonacci recursion.
template <class R>
RelationSet<R> golden_set(const R& d) {
  R one = one_like(d);
  if (!is_zero(d * d - d - one)) throw SkeinError("golden set: d^2 = d+1 required");
  RelationSet<R> rs{.name = "golden", .loop = d, .bigon = one, .triangle = one - d};
  rs.edge_rule = PatternRule<R>{{one, cup_cap()},
                                {zero_like(d) - inverse(d), two_strands()}};
  return rs;
}

// Symmetrised cyclotomic values q^k + q^-k built from an invertible q.
template <class R>
R laurent_sym(const R& q, std::initializer_list<long> exponents) {
  R qi = inverse(q);
  R acc = zero_like(q);
  for (long e : exponents) {
    R term = one_like(q);
    R base = e >= 0 ? q : qi;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) term = term * base;
    acc = acc + term;
  }
  return acc;
}

// The exceptional one-parameter series: loop, triangle, square and pentagon
// rules with coefficients assembled from the symmetrised cyclotomics
//   p3 = q+1+1/q, p6 = q-1+1/q, p8 = q^2+q^-2, p12 = q^2-1+q^-2,
//   p16 = q^4+q^-4, and loop = q^10+q^8+q^2+1+q^-2+q^-8+q^-10.
//   triangle = -p12/p16,
//   square   = p8/(p3 p6 p16) (I + H) + 1/(p3 p6 p16^2) (|| + cupcap),
//   pentagon = -1/(p3 p6 p16) (five trees) - 1/(p3 p6 p16)^2 (five forests).
// Undefined when q is a primitive 3rd, 6th or 16th root of unity.
template <class R>
RelationSet<R> exceptional_set(const R& q) {
  R one = one_like(q);
  R p3 = laurent_sym(q, {1, 0, -1});
  R p6 = laurent_sym(q, {1, -1}) - one;
  R p8 = laurent_sym(q, {2, -2});
  R p12 = laurent_sym(q, {2, -2}) - one;
  R p16 = laurent_sym(q, {4, -4});
  if (is_zero(p3) || is_zero(p6) || is_zero(p16))
    throw SkeinError("exceptional set: q is a primitive 3rd, 6th or 16th root of unity");
  R p368 = p3 * p6 * p16;
  RelationSet<R> rs{.name = "exceptional",
                    .loop = laurent_sym(q, {10, 8, 2, 0, -2, -8, -10}),
                    .bigon = one,
                    .triangle = zero_like(q) - exact_div(p12, p16)};
  R sq_tree = exact_div(p8, p368);
  R sq_arc = exact_div(one, p368 * p16);
  rs.square_rule = PatternRule<R>{{sq_tree, i_diagram()},
                                  {sq_tree, h_diagram()},
                                  {sq_arc, two_strands()},
                                  {sq_arc, cup_cap()}};
  R pent_tree = zero_like(q) - exact_div(one, p368);
  R pent_forest = zero_like(q) - exact_div(one, p368 * p368);
  PatternRule<R> pent;
  for (const PlanarDiagram& m : enumerate_basis(5, 0, BasisVariant::plain).members)
    pent.push_back({m.V == 3 ? pent_tree : pent_forest, m});
  rs.pentagon_rule = std::move(pent);
  return rs;
}

// Twisted cubic sets: every vertex carries a dot, the loop is d, the bigon
// with both dots inside the face is 1, every triangle vanishes, and a square
// whose four dots point into the face expands as
//   square = -1/d (I' + H') + 1/d (|| + cupcap),
// where I' is the I tree with each vertex dotted in the corner between the
// internal bar and the next leg counterclockwise (corner 0 of each vertex of
// i_diagram) and H' = rho(I'). Solving the four-point pairing system, which
// needs only the loop/bigon/triangle values, yields exactly these
// coefficients for this dotting; other dottings scale the tree terms by a
// power of omega. The re-derivation is pinned in the tests.
template <class R>
RelationSet<R> twisted_cubic_set(const R& d, const R& omega) {
  R one = one_like(d);
  if (is_zero(d)) throw SkeinError("twisted set: loop value must be invertible");
  if (!is_zero(one + omega + omega * omega))
    throw SkeinError("twisted set: omega must be a primitive cube root of unity");
  R invd = inverse(d);
  PlanarDiagram ib = i_diagram();
  ib.dots = {0, 0};
  PlanarDiagram hb = rotate(ib, 1);
  RelationSet<R> rs{.name = "twisted_cubic", .loop = d, .bigon = one, .triangle = zero_like(d)};
  rs.square_rule = PatternRule<R>{{zero_like(d) - invd, ib},
                                  {zero_like(d) - invd, hb},
                                  {invd, two_strands()},
                                  {invd, cup_cap()}};
  rs.twisted = true;
  rs.omega = omega;
  return rs;
}

// The two pentagonal tree relations that hold on the t^2 = t + 1 curve: with
// zeta a primitive fifth root of unity chosen so that t + zeta^2 + zeta^3 = 0,
// the alternating sums  sum_i zeta^(+-i) tree_i  vanish, where tree_i is the
// five-point tree whose rotation class steps once per index. Returned as two
// explicit pattern combinations for kernel checks; they are not rewrite rules.
template <class R>
std::pair<PatternRule<R>, PatternRule<R>> golden_pentagon_relations(const R& zeta) {
  std::vector<PlanarDiagram> trees;
  for (const PlanarDiagram& m : enumerate_basis(5, 0, BasisVariant::plain).members)
    if (m.V == 3) trees.push_back(m);
  if (trees.size() != 5) throw SkeinError("five-point tree listing is off");
  // Order the trees as successive rotations of the first.
  std::vector<PlanarDiagram> chain{trees[0]};
  for (int i = 1; i < 5; ++i) chain.push_back(rotate(chain.back(), 1));
  PatternRule<R> plus, minus;
  R zp = one_like(zeta), zm = one_like(zeta);
  R zinv = inverse(zeta);
  for (int i = 0; i < 5; ++i) {
    plus.push_back({zp, chain[i]});
    minus.push_back({zm, chain[i]});
    zp = zp * zeta;
    zm = zm * zinv;
  }
  return {plus, minus};
}

}  // namespace skein
