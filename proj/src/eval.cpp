#include "skein/eval.hpp"

#include <functional>
#include <vector>

namespace skein {

namespace {

// Carve out the victim vertices and glue `pat` into the hole, with pattern
// slot p taking over the ambient strand that entered the region at exits[p].
// Exits are victim darts whose partners are survivors, boundary slots or
// other exits; every other victim dart must pair inside the victim set.
PlanarDiagram splice(const PlanarDiagram& d, const std::vector<char>& victim,
                     const std::vector<int>& exits, const PlanarDiagram& pat) {
  int s = (int)exits.size();
  if (pat.n != s) throw SkeinError("substitute: pattern boundary size mismatch");
  std::vector<int> slot_of(d.dart_count(), -1);
  for (int p = 0; p < s; ++p) slot_of[exits[p]] = p;

  std::vector<int> vmap(d.V, -1);
  int nv = 0;
  for (int v = 0; v < d.V; ++v)
    if (!victim[v]) vmap[v] = nv++;
  int pat_off = nv;

  PlanarDiagram out;
  out.n = d.n;
  out.V = nv + pat.V;
  out.pair.assign(out.dart_count(), -1);
  out.dots.assign(out.V, -1);
  for (int v = 0; v < d.V; ++v)
    if (!victim[v]) out.dots[vmap[v]] = d.dots[v];
  for (int v = 0; v < pat.V; ++v) out.dots[pat_off + v] = pat.dots[v];
  out.free_loops = d.free_loops + pat.free_loops;

  auto surviving = [&](int h) { return d.is_boundary(h) || !victim[d.vertex_of(h)]; };
  auto old_name = [&](int h) {
    return d.is_boundary(h) ? h : out.dart(vmap[d.vertex_of(h)], d.leg_of(h));
  };
  auto pat_name = [&](int h) { return out.dart(pat_off + pat.vertex_of(h), pat.leg_of(h)); };

  // Edges untouched by the surgery.
  for (int h = 0; h < d.dart_count(); ++h) {
    int m = d.pair[h];
    if (h < m && surviving(h) && surviving(m)) connect(out, old_name(h), old_name(m));
  }
  for (int h = pat.n; h < pat.dart_count(); ++h) {
    int m = pat.pair[h];
    if (h < m && m >= pat.n) connect(out, pat_name(h), pat_name(m));
  }

  // Strand chasing across the interface: from a port the strand continues
  // inside the pattern; pattern arcs send it back out, and ambient edges
  // joining two exits (chords) send it back in.
  std::vector<char> seen(std::max(1, s), 0);

  // Enter the pattern at port p, emerge at the far end of the strand.
  auto chase_in = [&](int p, int& terminal, bool& ends_in_pattern) {
    int cur = p;
    while (true) {
      seen[cur] = 1;
      int x = pat.pair[cur];
      if (x >= pat.n) {
        terminal = x;
        ends_in_pattern = true;
        return;
      }
      seen[x] = 1;
      int y = d.pair[exits[x]];
      if (slot_of[y] < 0) {
        terminal = y;
        ends_in_pattern = false;
        return;
      }
      cur = slot_of[y];
    }
  };

  // Strands with an ambient endpoint.
  for (int p = 0; p < s; ++p) {
    int y = d.pair[exits[p]];
    if (slot_of[y] >= 0) continue;  // chord; reached from an endpoint or a circle
    if (!surviving(y)) throw SkeinError("substitute: exit pairs into the carved region");
    int terminal;
    bool in_pat;
    chase_in(p, terminal, in_pat);
    connect(out, old_name(y), in_pat ? pat_name(terminal) : old_name(terminal));
  }
  // Strands with both endpoints inside the pattern, crossing only chords.
  for (int h = pat.n; h < pat.dart_count(); ++h) {
    int p0 = pat.pair[h];
    if (p0 >= pat.n || seen[p0]) continue;
    int cur = p0;
    while (true) {
      seen[cur] = 1;
      int q = slot_of[d.pair[exits[cur]]];
      if (q < 0) throw SkeinError("substitute: strand chase lost its way");
      seen[q] = 1;
      int x = pat.pair[q];
      if (x >= pat.n) {
        connect(out, pat_name(h), pat_name(x));
        break;
      }
      cur = x;
    }
  }
  // Leftover ports sit on circles alternating pattern arcs and chords.
  for (int p = 0; p < s; ++p) {
    if (seen[p]) continue;
    out.free_loops++;
    int cur = p;
    while (!seen[cur]) {
      seen[cur] = 1;
      int x = pat.pair[cur];  // arc inside the pattern
      seen[x] = 1;
      cur = slot_of[d.pair[exits[x]]];  // chord outside
    }
  }
  out.validate();
  return out;
}

}  // namespace

PlanarDiagram substitute_face(const PlanarDiagram& d, const Face& face,
                              const PlanarDiagram& pattern) {
  if (!face.internal()) throw SkeinError("substitute: face touches the boundary");
  int s = face.size();
  std::vector<char> victim(d.V, 0);
  for (int h : face.darts) {
    int v = d.vertex_of(h);
    if (victim[v]) throw SkeinError("substitute: face revisits a vertex");
    victim[v] = 1;
  }
  std::vector<int> exits(s);
  for (int p = 0; p < s; ++p) exits[p] = d.rho(face.darts[(s - p) % s]);
  return splice(d, victim, exits, pattern);
}

PlanarDiagram substitute_edge(const PlanarDiagram& d, int bar, const PlanarDiagram& pattern) {
  if (d.is_boundary(bar) || d.is_boundary(d.pair[bar]))
    throw SkeinError("substitute: bar must join two vertices");
  int m = d.pair[bar];
  int u = d.vertex_of(bar), w = d.vertex_of(m);
  if (u == w) throw SkeinError("substitute: bar endpoints coincide");
  std::vector<char> victim(d.V, 0);
  victim[u] = victim[w] = 1;
  std::vector<int> exits = {d.rho(d.rho(bar)), d.rho(m), d.rho(d.rho(m)), d.rho(bar)};
  return splice(d, victim, exits, pattern);
}

Int chromatic_count(const PlanarDiagram& d, long colors) {
  if (!d.closed()) throw SkeinError("colour counting needs a closed diagram");
  if (colors < 1) throw SkeinError("colour counting needs at least one colour");
  Components parts = split_components(d);
  Int total = 1;
  for (long i = 0; i < parts.free_loops; ++i) total *= colors - 1;
  for (const PlanarDiagram& comp : parts.closed) {
    std::vector<Face> fs = comp.faces();
    int nf = (int)fs.size();
    std::vector<int> face_of(comp.dart_count(), -1);
    for (int i = 0; i < nf; ++i)
      for (int h : fs[i].darts) face_of[h] = i;
    std::vector<std::vector<char>> adj(nf, std::vector<char>(nf, 0));
    for (int h = 0; h < comp.dart_count(); ++h) {
      int a = face_of[h], b = face_of[comp.pair[h]];
      if (a == b) return Int(0);  // a face abutting itself is never properly colourable
      adj[a][b] = adj[b][a] = 1;
    }
    // Count colourings with the first face's colour pinned; by colour
    // symmetry this equals the full count divided by the palette size.
    std::vector<int> col(nf, -1);
    col[0] = 0;
    Int count = 0;
    std::function<void(int)> go = [&](int i) {
      if (i == nf) {
        count += 1;
        return;
      }
      for (int c = 0; c < colors; ++c) {
        bool ok = true;
        for (int j = 0; j < i; ++j)
          if (adj[i][j] && col[j] == c) {
            ok = false;
            break;
          }
        if (!ok) continue;
        col[i] = c;
        go(i + 1);
        col[i] = -1;
      }
    };
    go(1);
    total *= count;
  }
  return total;
}

}  // namespace skein
