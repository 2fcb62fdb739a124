#include "skein/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace skein {

std::string to_string(FeatureTag tag) {
  switch (tag) {
    case FeatureTag::small_face: return "small_face";
    case FeatureTag::very_small_face: return "very_small_face";
    case FeatureTag::pentapent: return "pentapent";
    case FeatureTag::hexapent: return "hexapent";
    case FeatureTag::growth_region: return "growth_region";
    case FeatureTag::corner_pentagon: return "corner_pentagon";
    case FeatureTag::bridge_pentagon: return "bridge_pentagon";
    case FeatureTag::none: return "none";
  }
  throw SkeinError("feature tag out of range");
}

namespace {

// Maps gap g (the boundary interval between slot g and slot g+1) to the face
// containing slot dart g. Returns false when some face meets the boundary in
// more than one interval, which happens exactly when the diagram is not
// connected; region bookkeeping is only meaningful on connected diagrams.
bool gap_face_table(const PlanarDiagram& d, const std::vector<Face>& fs, std::vector<int>& gf) {
  gf.assign(d.n, -1);
  for (int i = 0; i < (int)fs.size(); ++i) {
    int slots = 0;
    for (int h : fs[i].darts)
      if (d.is_boundary(h)) {
        gf[h] = i;
        slots++;
      }
    if (slots > 1) return false;
  }
  return true;
}

void check_region_args(const PlanarDiagram& d, int start, int len, const char* who) {
  if (d.n == 0) throw SkeinError(std::string(who) + ": closed diagram has no boundary faces");
  if (start < 0 || start >= d.n) throw SkeinError(std::string(who) + ": start out of range");
  if (len < 1 || len >= d.n)
    throw SkeinError(std::string(who) + ": region must be a proper nonempty run of boundary faces");
}

}  // namespace

int face_of_gap(const PlanarDiagram& d, const std::vector<Face>& fs, int gap) {
  if (gap < 0 || gap >= d.n) throw SkeinError("face_of_gap: gap out of range");
  for (int i = 0; i < (int)fs.size(); ++i)
    for (int h : fs[i].darts)
      if (h == gap) return i;
  throw SkeinError("face_of_gap: slot dart missing from face list");
}

int boundary_region_charge(const PlanarDiagram& d, int start, int len) {
  check_region_args(d, start, len, "boundary_region_charge");
  std::vector<Face> fs = d.faces();
  std::vector<int> gf;
  if (!gap_face_table(d, fs, gf))
    throw SkeinError("boundary_region_charge: diagram is not connected");
  int total = 0;
  for (int j = 0; j < len; ++j) total += fs[gf[(start + j) % d.n]].charge();
  return total;
}

std::vector<std::pair<int, int>> growth_regions(const PlanarDiagram& d, bool maximal_only) {
  std::vector<std::pair<int, int>> out;
  if (d.n < 2) return out;
  std::vector<Face> fs = d.faces();
  std::vector<int> gf;
  if (!gap_face_table(d, fs, gf)) return out;  // growth analysis needs a connected diagram
  std::vector<int> c(d.n);
  for (int g = 0; g < d.n; ++g) c[g] = fs[gf[g]].charge();
  for (int s = 0; s < d.n; ++s) {
    int charge = 0;
    for (int l = 1; l < d.n; ++l) {
      charge += c[(s + l - 1) % d.n];
      if (charge >= 2) out.push_back({s, l});
    }
  }
  if (maximal_only) {
    // keep regions not strictly contained in another growth region (cyclically)
    std::vector<std::pair<int, int>> keep;
    for (auto [s, l] : out) {
      bool covered = false;
      for (auto [s2, l2] : out) {
        if (s2 == s && l2 == l) continue;
        if (l <= l2 && ((s - s2) % d.n + d.n) % d.n + l <= l2) covered = true;
      }
      if (!covered) keep.push_back({s, l});
    }
    out.swap(keep);
  }
  return out;
}

PlanarDiagram remove_boundary_region(const PlanarDiagram& d, int start, int len) {
  check_region_args(d, start, len, "remove_boundary_region");
  Components comps = split_components(d);
  if (!comps.closed.empty() || d.free_loops != 0)
    throw SkeinError("remove_boundary_region: diagram is not connected");
  if (d.V == 0) {
    // the only connected vertex-free diagram is a single arc, and any proper
    // region swallows both of its endpoints
    if (d.n != 2) throw SkeinError("remove_boundary_region: diagram is not connected");
    return PlanarDiagram{};
  }

  // rotate the region away from the marked gap: gaps [0..len-1], slots [0..len]
  PlanarDiagram w = rotate(d, start);
  std::vector<Face> fs = w.faces();
  std::vector<int> gf;
  if (!gap_face_table(w, fs, gf))
    throw SkeinError("remove_boundary_region: diagram is not connected");

  // Walk each region face from its slot dart; the phi orbit visits the darts
  // of the frontier vertices in order from the foot of the left leg to the
  // foot of the right leg, so concatenating the walks orders the frontier.
  std::vector<int> chain;
  std::vector<char> removed_vertex(w.V, 0);
  for (int g = 0; g < len; ++g) {
    const Face& f = fs[gf[g]];
    int pos = 0;
    while (f.darts[pos] != g) pos++;
    for (int t = 1; t < f.size(); ++t) {
      int h = f.darts[(pos + t) % f.size()];
      if (w.is_boundary(h)) throw SkeinError("remove_boundary_region: diagram is not connected");
      chain.push_back(h);
      removed_vertex[w.vertex_of(h)] = 1;
    }
  }

  auto dies = [&](int h) {
    if (w.is_boundary(h)) return h <= len;
    return removed_vertex[w.vertex_of(h)] != 0;
  };

  // Each chain visit accounts for two darts of its vertex (the face walk in
  // and out); the third is the vertex's one free edge, cut if it survives.
  // Walking the chain in order crosses the cut strands in the order they
  // appear along the new boundary.
  std::vector<int> cut_partner;
  for (int y : chain) {
    int c = w.rho(y);
    int p = w.pair[c];
    if (!dies(p)) cut_partner.push_back(p);
  }

  int keep_slots = w.n - (len + 1);
  PlanarDiagram r;
  r.n = keep_slots + (int)cut_partner.size();
  std::vector<int> vmap(w.V, -1);
  for (int v = 0; v < w.V; ++v)
    if (!removed_vertex[v]) {
      vmap[v] = r.V++;
      r.dots.push_back(w.dots[v]);
    }
  r.pair.assign(r.dart_count(), -1);

  auto newname = [&](int h) -> int {
    if (w.is_boundary(h)) return h <= len ? -1 : h - (len + 1);
    int v = vmap[w.vertex_of(h)];
    return v < 0 ? -1 : r.dart(v, w.leg_of(h));
  };
  for (int h = 0; h < w.dart_count(); ++h) {
    int a = newname(h);
    if (a < 0) continue;
    int b = newname(w.pair[h]);
    if (b >= 0) r.pair[a] = b;  // strand fully outside the region
  }
  for (int j = 0; j < (int)cut_partner.size(); ++j) {
    int a = keep_slots + j;
    int b = newname(cut_partner[j]);
    if (b < 0) throw SkeinError("remove_boundary_region: lost a cut strand");
    r.pair[a] = b;
    r.pair[b] = a;
  }
  r.validate();
  return r;
}

// --- feature search ----------------------------------------------------------

Feature find_feature(const PlanarDiagram& d) {
  static const std::vector<FeatureTag> kLemmaPolicy = {
      FeatureTag::very_small_face, FeatureTag::pentapent, FeatureTag::hexapent,
      FeatureTag::corner_pentagon, FeatureTag::growth_region};
  return find_feature(d, kLemmaPolicy);
}

Feature find_feature(const PlanarDiagram& d, const std::vector<FeatureTag>& policy) {
  std::vector<Face> fs = d.faces();
  std::vector<int> face_of(std::max(1, d.dart_count()), -1);
  for (int i = 0; i < (int)fs.size(); ++i)
    for (int h : fs[i].darts) face_of[h] = i;

  // distinct internal faces sharing an edge with face i (faces meeting only at
  // a vertex also share an edge there, the graph being trivalent)
  auto internal_neighbors = [&](int i) {
    std::set<int> nb;
    for (int h : fs[i].darts) {
      if (d.is_boundary(h)) continue;
      int j = face_of[d.pair[h]];
      if (j != i && fs[j].internal()) nb.insert(j);
    }
    return nb;
  };
  auto adjacent = [&](int i, int j) { return internal_neighbors(i).count(j) > 0; };
  auto internal_of_size = [&](int i, int size) {
    return fs[i].internal() && fs[i].size() == size;
  };

  for (FeatureTag tag : policy) {
    switch (tag) {
      case FeatureTag::small_face:
      case FeatureTag::very_small_face: {
        int limit = tag == FeatureTag::small_face ? 5 : 4;
        int best = -1;
        for (int i = 0; i < (int)fs.size(); ++i)
          if (fs[i].internal() && fs[i].size() <= limit &&
              (best < 0 || fs[i].size() < fs[best].size()))
            best = i;
        if (best >= 0) return {tag, {best}, -1, 0};
        break;
      }
      case FeatureTag::pentapent: {
        for (int i = 0; i < (int)fs.size(); ++i) {
          if (!internal_of_size(i, 5)) continue;
          for (int j : internal_neighbors(i))
            if (j > i && fs[j].size() == 5) return {tag, {i, j}, -1, 0};
        }
        break;
      }
      case FeatureTag::hexapent: {
        for (int i = 0; i < (int)fs.size(); ++i) {
          if (!internal_of_size(i, 5)) continue;
          for (int j : internal_neighbors(i))
            if (fs[j].size() == 6) return {tag, {i, j}, -1, 0};
        }
        break;
      }
      case FeatureTag::corner_pentagon:
      case FeatureTag::bridge_pentagon: {
        for (int i = 0; i < (int)fs.size(); ++i) {
          if (!internal_of_size(i, 5)) continue;
          std::set<int> nb = internal_neighbors(i);
          bool corner = nb.size() <= 1 ||
                        (nb.size() == 2 && adjacent(*nb.begin(), *std::next(nb.begin())));
          bool want_corner = tag == FeatureTag::corner_pentagon;
          if (nb.size() <= 2 && corner == want_corner && (corner || nb.size() == 2)) {
            Feature f{tag, {i}, -1, 0};
            f.faces.insert(f.faces.end(), nb.begin(), nb.end());
            return f;
          }
        }
        break;
      }
      case FeatureTag::growth_region: {
        auto regions = growth_regions(d, /*maximal_only=*/true);
        if (!regions.empty()) {
          auto [s, l] = regions.front();
          std::vector<int> gf;
          gap_face_table(d, fs, gf);
          Feature f{tag, {}, s, l};
          for (int j = 0; j < l; ++j) f.faces.push_back(gf[(s + j) % d.n]);
          return f;
        }
        break;
      }
      case FeatureTag::none:
        break;
    }
  }
  return {};
}

// --- membership ----------------------------------------------------------------

bool is_basis_member(const PlanarDiagram& d, int k, BasisVariant variant) {
  if (k < 0) return false;
  if (d.free_loops != 0) return false;
  if (d.n == 0) return d.V == 0;  // only the empty diagram
  if (!split_components(d).closed.empty()) return false;
  int min_face = variant == BasisVariant::square_free ? 5 : 4;
  std::vector<int> sizes = d.internal_face_sizes();
  if ((int)sizes.size() > k) return false;
  return sizes.empty() || sizes.front() >= min_face;
}

// --- exhaustive generation -------------------------------------------------------

std::vector<PlanarDiagram> brute_enumerate(
    int n, int max_vertices, const std::function<bool(const PlanarDiagram&)>& pred) {
  if (n < 0) throw SkeinError("brute_enumerate: negative boundary count");
  if (max_vertices < 0 || max_vertices > 12)
    throw SkeinError("brute_enumerate: vertex budget must be 0..12");

  std::vector<PlanarDiagram> out;
  PlanarDiagram d;
  d.n = n;
  d.pair.assign(n, -1);
  std::vector<std::vector<int>> regions;
  if (n > 0) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    regions.push_back(std::move(all));
  }

  // Depth-first closure of the top region's first dart: pair it with another
  // dart of the same region (splitting it), or feed it into a fresh vertex.
  // Every complete diagram is reached by exactly one choice sequence.
  auto rec = [&](auto&& rec) -> void {
    int odd = 0;
    for (const auto& reg : regions) odd += (int)(reg.size() % 2);
    if (odd > max_vertices - d.V) return;  // only new vertices fix parity
    if (regions.empty()) {
      d.validate();
      if (pred(d)) out.push_back(d);
      return;
    }
    std::vector<int> reg = std::move(regions.back());
    regions.pop_back();
    int h = reg[0];

    for (size_t j = 1; j < reg.size(); ++j) {
      connect(d, h, reg[j]);
      size_t pushed = 0;
      if (j + 1 < reg.size()) {
        regions.emplace_back(reg.begin() + j + 1, reg.end());
        pushed++;
      }
      if (j > 1) {
        regions.emplace_back(reg.begin() + 1, reg.begin() + j);
        pushed++;
      }
      rec(rec);
      regions.resize(regions.size() - pushed);
      d.pair[h] = -1;
      d.pair[reg[j]] = -1;
    }

    if (d.V < max_vertices) {
      int v = add_vertex(d);
      connect(d, h, d.dart(v, 0));
      std::vector<int> grown;
      grown.reserve(reg.size() + 1);
      grown.push_back(d.dart(v, 2));
      grown.push_back(d.dart(v, 1));
      grown.insert(grown.end(), reg.begin() + 1, reg.end());
      regions.push_back(std::move(grown));
      rec(rec);
      regions.pop_back();
      d.pair[h] = -1;
      d.pair.resize(d.pair.size() - 3);
      d.dots.pop_back();
      d.V--;
    }

    regions.push_back(std::move(reg));
  };
  rec(rec);
  return out;
}

// --- basis generation ------------------------------------------------------------

namespace {

// An attachment gadget is a caterpillar: path w_0..w_{m-1}, each vertex
// carrying one free edge besides its path edges, pointing up (a new boundary
// leg between the two end legs) or down (a stub glued onto the host
// boundary). Depending on the up/down mix an attachment grows, preserves, or
// shrinks the boundary; all three kinds are needed, e.g. squares arranged
// around a central vertex are only reached by a shrinking move.
// As a diagram: slots 0..O-1 are the top legs left to right, slots O..O+I-1
// the stubs in right-to-left vertex order, so that gluing stub slot O+I-1-j
// onto the j-th consumed host slot nests the connecting strands.
struct Gadget {
  PlanarDiagram diagram;
  int out = 0;  // top legs
  int in = 0;   // stubs
  int m = 0;    // vertices
};

Gadget make_caterpillar(const std::vector<char>& up) {
  int m = (int)up.size();
  int ups = (int)std::count(up.begin(), up.end(), (char)1);
  Gadget g;
  g.m = m;
  g.out = 2 + ups;
  g.in = m - ups;
  PlanarDiagram& d = g.diagram;
  d.n = g.out + g.in;
  d.pair.assign(d.n, -1);
  for (int i = 0; i < m; ++i) add_vertex(d);

  std::vector<int> upslot(m, -1), downslot(m, -1);
  int next_sep = 1;
  for (int i = 0; i < m; ++i)
    if (up[i]) upslot[i] = next_sep++;
  int next_stub = g.out;
  for (int i = m - 1; i >= 0; --i)
    if (!up[i]) downslot[i] = next_stub++;

  // counterclockwise legs at w_i: up edges left to right, forward path edge,
  // down stub, back path edge — restricted to the edges present
  std::vector<std::vector<std::pair<char, int>>> legs(m);
  for (int i = 0; i < m; ++i) {
    auto& l = legs[i];
    if (i == 0) l.push_back({'s', 0});
    if (up[i]) l.push_back({'s', upslot[i]});
    if (i == m - 1) l.push_back({'s', g.out - 1});
    if (i + 1 < m) l.push_back({'f', i + 1});
    if (!up[i]) l.push_back({'s', downslot[i]});
    if (i > 0) l.push_back({'b', i - 1});
  }
  auto leg_index = [&](int i, char kind) {
    for (int k = 0; k < 3; ++k)
      if (legs[i][k].first == kind) return k;
    throw SkeinError("caterpillar: malformed leg table");
  };
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < 3; ++k) {
      auto [kind, arg] = legs[i][k];
      if (kind == 's') connect(d, d.dart(i, k), arg);
      if (kind == 'f') connect(d, d.dart(i, k), d.dart(arg, leg_index(arg, 'b')));
    }
  d.validate();
  return g;
}

// Glue the gadget's stubs over the host slots s..s+in-1 (counterclockwise);
// the rotation parks the consumed run at the end so the joins nest.
PlanarDiagram attach_gadget(const PlanarDiagram& base, int s, const Gadget& g) {
  int np = base.n;
  PlanarDiagram rot = rotate(base, ((s - (np - g.in)) % np + np) % np);
  PlanarDiagram big = tensor(rot, g.diagram);
  std::vector<std::pair<int, int>> joins;
  for (int j = 0; j < g.in; ++j) joins.push_back({np - g.in + j, np + g.out + g.in - 1 - j});
  return join_slots(big, joins);
}

PlanarDiagram assemble_union(int n, const std::vector<std::vector<int>>& blocks,
                             const std::vector<const PlanarDiagram*>& pieces) {
  PlanarDiagram r;
  r.n = n;
  for (const PlanarDiagram* p : pieces) r.V += p->V;
  r.pair.assign(r.dart_count(), -1);
  r.dots.assign(r.V, -1);
  int voff = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    const PlanarDiagram& p = *pieces[b];
    auto rename = [&](int h) {
      return p.is_boundary(h) ? blocks[b][h] : r.dart(voff + p.vertex_of(h), p.leg_of(h));
    };
    for (int h = 0; h < p.dart_count(); ++h) r.pair[rename(h)] = rename(p.pair[h]);
    for (int v = 0; v < p.V; ++v) r.dots[voff + v] = p.dots[v];
    voff += p.V;
  }
  r.validate();
  return r;
}

}  // namespace

std::vector<std::string> BasisSet::keys() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const PlanarDiagram& d : members) out.push_back(d.canonical_key());
  return out;
}

BasisSet enumerate_basis(int n, int k, BasisVariant variant) {
  if (n < 0 || k < 0) throw SkeinError("enumerate_basis: negative parameters");
  if (n > 8 || k > 3) throw SkeinError("enumerate_basis: supported envelope is n <= 8, k <= 3");
  BasisSet out;
  out.n = n;
  out.k = k;
  out.variant = variant;
  if (n == 0) {
    out.members.push_back(PlanarDiagram{});
    return out;
  }
  const int min_face = variant == BasisVariant::square_free ? 5 : 4;
  const int vmax = n + 2 * k - 2;

  // Pool of connected intermediates at every boundary size up to n, closed
  // under caterpillar attachments. All rotations are kept, which both covers
  // attachments across the marked gap and feeds the union assembly below.
  std::map<std::string, PlanarDiagram> pool;
  std::deque<const PlanarDiagram*> todo;
  auto admit = [&](PlanarDiagram&& d) {
    if (d.n > n || d.V > vmax) return;
    std::vector<int> sizes = d.internal_face_sizes();
    if ((int)sizes.size() > k) return;
    if (!sizes.empty() && sizes.front() < min_face) return;
    for (int r = 0; r < d.n; ++r) {
      PlanarDiagram rd = rotate(d, r);
      std::string key = rd.canonical_key();
      auto [it, fresh] = pool.emplace(std::move(key), std::move(rd));
      if (fresh) todo.push_back(&it->second);
    }
  };
  admit(matching_diagram(2, {{0, 1}}));
  admit(vertex3());

  std::vector<Gadget> gadgets;
  for (int m = 1; m <= vmax; ++m) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<char> up(m);
      int ups = 0;
      for (int i = 0; i < m; ++i) {
        up[i] = (char)((mask >> i) & 1);
        ups += up[i];
      }
      int o = 2 + ups, in = m - ups;
      if (in < 1) continue;          // a gadget without stubs would float free
      if (o - in > n - 2) continue;  // could never fit the target boundary
      gadgets.push_back(make_caterpillar(up));
    }
  }

  while (!todo.empty()) {
    const PlanarDiagram* t = todo.front();
    todo.pop_front();
    // rotations are all pooled, so attaching at slot 0 alone covers every spot
    for (const Gadget& g : gadgets) {
      if (g.in > t->n || t->V + g.m > vmax || t->n + g.out - g.in > n) continue;
      admit(attach_gadget(*t, 0, g));
    }
  }

  std::map<std::string, PlanarDiagram> found;
  for (const auto& [key, d] : pool)
    if (d.n == n && is_basis_member(d, k, variant)) found.emplace(key, d);

  // Disconnected members: pieces over the blocks of a noncrossing partition
  // of the boundary points, each block in ascending order. The pool holds
  // every rotation of every piece, so anchored placement covers all unions.
  std::map<int, std::vector<const PlanarDiagram*>> by_size;
  for (const auto& [key, d] : pool)
    if (d.n >= 2 && d.n <= n - 2) by_size[d.n].push_back(&d);

  std::vector<std::vector<int>> blocks;
  std::vector<const PlanarDiagram*> pieces;
  auto place = [&](auto&& place, size_t b, int budget) -> void {
    if (b == blocks.size()) {
      PlanarDiagram u = assemble_union(n, blocks, pieces);
      if (is_basis_member(u, k, variant)) found.emplace(u.canonical_key(), std::move(u));
      return;
    }
    auto it = by_size.find((int)blocks[b].size());
    if (it == by_size.end()) return;
    for (const PlanarDiagram* p : it->second) {
      int faces = (int)p->internal_face_sizes().size();
      if (faces > budget) continue;
      pieces.push_back(p);
      place(place, b + 1, budget - faces);
      pieces.pop_back();
    }
  };
  // segments of boundary points still to be partitioned (noncrossing, blocks >= 2)
  auto carve = [&](auto&& carve, std::vector<std::vector<int>> segs) -> void {
    while (!segs.empty() && segs.back().empty()) segs.pop_back();
    if (segs.empty()) {
      if (blocks.size() >= 2) place(place, 0, k);
      return;
    }
    std::vector<int> seg = std::move(segs.back());
    segs.pop_back();
    int r = (int)seg.size();
    for (unsigned mask = 1; mask < (1u << (r - 1)); ++mask) {
      std::vector<int> block = {seg[0]};
      std::vector<std::vector<int>> subs = segs;
      std::vector<int> gap;
      bool dead = false;
      for (int i = 1; i < r; ++i) {
        if ((mask >> (i - 1)) & 1) {
          block.push_back(seg[i]);
          dead = dead || gap.size() == 1;  // a lone point can never join a block
          if (!gap.empty()) subs.push_back(std::move(gap));
          gap.clear();
        } else {
          gap.push_back(seg[i]);
        }
      }
      dead = dead || gap.size() == 1;
      if (!gap.empty()) subs.push_back(std::move(gap));
      if (dead) continue;
      blocks.push_back(std::move(block));
      carve(carve, std::move(subs));
      blocks.pop_back();
    }
  };
  if (n >= 4) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    carve(carve, {all});
  }

  std::vector<std::pair<std::pair<int, std::string>, PlanarDiagram>> ordered;
  ordered.reserve(found.size());
  for (auto& [key, d] : found) ordered.push_back({{d.V, key}, std::move(d)});
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.members.reserve(ordered.size());
  for (auto& [tag, d] : ordered) out.members.push_back(std::move(d));
  return out;
}

}  // namespace skein
