#pragma once
// Planar trivalent graphs in a marked disk, as combinatorial maps. Darts
// 0..n-1 are the boundary slots in counterclockwise order (the marked gap sits
// between slot n-1 and slot 0); dart n+3v+k is leg k of vertex v, with
// (k, k+1, k+2) counterclockwise around the vertex. `pair` is the fixed-point
// free involution matching the two ends of every strand. Circles with no
// vertices are counted in `free_loops`.
//
// Faces are traced with phi(h) = succ(pair(h)), where succ steps
// counterclockwise at a vertex and *clockwise* along the boundary circle (the
// disk boundary behaves like a vertex seen from outside). An orbit's charge is
// 6 - size - 2*(boundary jumps); per component these add up to 6 (open, via
// the boundary) or 12 (closed), which doubles as a planarity check.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

struct Face {
  std::vector<int> darts;
  int boundary_jumps = 0;
  bool internal() const { return boundary_jumps == 0; }
  int size() const { return (int)darts.size(); }
  int charge() const { return 6 - size() - 2 * boundary_jumps; }
};

struct PlanarDiagram {
  int n = 0;               // boundary slots
  int V = 0;               // trivalent vertices
  std::vector<int> pair;   // involution on the n+3V darts
  std::vector<int> dots;   // size V; -1 plain, else marked corner 0..2
  long free_loops = 0;

  PlanarDiagram() = default;

  int dart_count() const { return n + 3 * V; }
  bool is_boundary(int h) const { return h < n; }
  int vertex_of(int h) const { return (h - n) / 3; }
  int leg_of(int h) const { return (h - n) % 3; }
  int dart(int v, int k) const { return n + 3 * v + k; }

  // Counterclockwise next leg at the same vertex.
  int rho(int h) const {
    if (is_boundary(h)) throw SkeinError("rho on a boundary slot");
    return n + 3 * vertex_of(h) + (leg_of(h) + 1) % 3;
  }
  // Next dart at the same attachment point, in face-tracing order.
  int succ(int h) const {
    if (is_boundary(h)) return (h + n - 1) % n;
    return rho(h);
  }
  int phi(int h) const { return succ(pair[h]); }

  bool closed() const { return n == 0; }
  bool empty() const { return n == 0 && V == 0 && free_loops == 0; }

  // Structural and planarity validation; throws SkeinError with a reason.
  void validate() const;

  std::vector<Face> faces() const;
  // Internal faces only, sizes sorted ascending.
  std::vector<int> internal_face_sizes() const;

  // Invariant under relabeling of vertices and rotation data; two diagrams are
  // isotopic in the marked disk iff their keys agree. Closed pieces are
  // canonicalized up to orientation-preserving symmetry.
  std::string canonical_key() const;

  std::string str() const;
  static PlanarDiagram parse(const std::string& text);
};

struct Components {
  PlanarDiagram open;                  // everything reachable from the boundary
  std::vector<PlanarDiagram> closed;   // vertex components with no boundary contact
  long free_loops = 0;
};
Components split_components(const PlanarDiagram& d);

// --- elementary moves ------------------------------------------------------

// new_slot i = old slot (i+k) mod n.
PlanarDiagram rotate(const PlanarDiagram& d, int k);
// Mirror image; slot i goes to slot n-1-i (axis through the marked gap).
PlanarDiagram reflect(const PlanarDiagram& d);
// Disjoint union in one disk: a's slots then b's slots.
PlanarDiagram tensor(const PlanarDiagram& a, const PlanarDiagram& b);
// Join the listed slot pairs by strands; remaining slots keep their relative
// order. Slot indices refer to the input diagram.
PlanarDiagram join_slots(const PlanarDiagram& d, const std::vector<std::pair<int, int>>& joins);
// Bilinear pairing diagram <a, b>: glue b's mirror onto a, slot i to slot i.
PlanarDiagram glue(const PlanarDiagram& a, const PlanarDiagram& b);
// 4-point diagrams as 2->2 maps: feed a's top (slots 2,3) into b's bottom
// (slots 1,0); result boundary (a0, a1, b2, b3).
PlanarDiagram compose22(const PlanarDiagram& a, const PlanarDiagram& b);
// Close a 4-point diagram: join 0-3 and 1-2.
PlanarDiagram trace22(const PlanarDiagram& a);

// --- surgery primitives (used by the relation engine) ----------------------

// Appends an unwired vertex (its three darts pair to -1) and returns its index.
int add_vertex(PlanarDiagram& d, int dot = -1);
// Wires two darts together.
inline void connect(PlanarDiagram& d, int a, int b) {
  d.pair[a] = b;
  d.pair[b] = a;
}
// Deletes the flagged vertices and compacts dart indices; every surviving dart
// must already be rewired away from the deleted ones.
void remove_vertices(PlanarDiagram& d, const std::vector<bool>& victim);

// --- basic builders --------------------------------------------------------

// Vertex-free diagram from a perfect matching of the n slots.
PlanarDiagram matching_diagram(int n, const std::vector<std::pair<int, int>>& arcs,
                               long loops = 0);
// Single vertex, legs to slots 0,1,2.
PlanarDiagram vertex3();
// The two trees on 4 points: i_diagram joins slots {0,1} and {2,3},
// h_diagram joins {0,3} and {1,2}.
PlanarDiagram i_diagram();
PlanarDiagram h_diagram();
// m-gon with a leg from polygon vertex i to slot i.
PlanarDiagram polygon_with_legs(int m);
// Two vertices joined by three parallel strands (closed).
PlanarDiagram theta();

}  // namespace skein
