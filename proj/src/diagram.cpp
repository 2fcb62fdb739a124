#include "skein/diagram.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace skein {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Rebuild a sub-diagram from a vertex subset (order preserved); slots are kept
// exactly when with_boundary is set.
PlanarDiagram extract(const PlanarDiagram& d, const std::vector<int>& verts, bool with_boundary) {
  PlanarDiagram r;
  r.n = with_boundary ? d.n : 0;
  r.V = (int)verts.size();
  r.pair.assign(r.n + 3 * r.V, -1);
  r.dots.reserve(r.V);
  std::vector<int> vmap(d.V, -1);
  for (int i = 0; i < (int)verts.size(); ++i) {
    vmap[verts[i]] = i;
    r.dots.push_back(d.dots[verts[i]]);
  }
  auto map_dart = [&](int h) {
    if (d.is_boundary(h)) return with_boundary ? h : -1;
    int v = vmap[d.vertex_of(h)];
    return v < 0 ? -1 : r.dart(v, d.leg_of(h));
  };
  for (int h = 0; h < d.dart_count(); ++h) {
    int nh = map_dart(h);
    if (nh < 0) continue;
    int np = map_dart(d.pair[h]);
    if (np < 0) throw SkeinError("component extraction crossed a component boundary");
    r.pair[nh] = np;
  }
  return r;
}

// Canonical relabeling code. Boundary slots read as negative labels -(i+1);
// vertices are numbered in discovery order, entered through their first dart
// and walked counterclockwise, so the code determines the rooted map. The
// trailing segment re-expresses each vertex mark against its entry leg.
std::vector<int> bfs_code(const PlanarDiagram& d, int root) {
  std::vector<int> label(std::max(1, d.dart_count()), INT_MIN);
  std::vector<int> order;
  int next = 0;
  std::vector<int> code;
  for (int i = 0; i < d.n; ++i) label[i] = -(i + 1);
  auto discover = [&](int h) {
    int a = h, b = d.rho(h), c = d.rho(b);
    for (int x : {a, b, c}) {
      label[x] = next++;
      order.push_back(x);
    }
  };
  if (root >= 0) discover(root);
  for (int i = 0; i < d.n; ++i) {
    int p = d.pair[i];
    if (label[p] == INT_MIN) discover(p);
    code.push_back(label[p]);
  }
  for (size_t pos = 0; pos < order.size(); ++pos) {
    int p = d.pair[order[pos]];
    if (label[p] == INT_MIN) discover(p);
    code.push_back(label[p]);
  }
  code.push_back(INT_MAX);
  for (size_t i = 0; i < order.size(); i += 3) {
    int v = d.vertex_of(order[i]), r = d.leg_of(order[i]);
    int c = d.dots[v];
    code.push_back(c < 0 ? -1 : (c - r + 3) % 3);
  }
  return code;
}

void append_code(std::ostringstream& os, const std::vector<int>& code) {
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) os << ',';
    os << code[i];
  }
}

}  // namespace

void PlanarDiagram::validate() const {
  if (n < 0 || V < 0 || free_loops < 0) throw SkeinError("diagram: negative counts");
  if ((int)pair.size() != dart_count()) throw SkeinError("diagram: pair table size mismatch");
  if ((int)dots.size() != V) throw SkeinError("diagram: dot table size mismatch");
  for (int v = 0; v < V; ++v)
    if (dots[v] < -1 || dots[v] > 2) throw SkeinError("diagram: bad vertex mark");
  for (int h = 0; h < dart_count(); ++h) {
    int p = pair[h];
    if (p < 0 || p >= dart_count()) throw SkeinError("diagram: dart paired out of range");
    if (p == h) throw SkeinError("diagram: dart paired with itself");
    if (pair[p] != h) throw SkeinError("diagram: pairing is not an involution");
  }
  if (dart_count() == 0) return;

  // Planarity: treat the boundary circle as one outside vertex; every
  // connected piece of the map must have Euler characteristic 2.
  UnionFind uf(dart_count());
  for (int h = 0; h < dart_count(); ++h) uf.unite(h, pair[h]);
  for (int v = 0; v < V; ++v) {
    uf.unite(dart(v, 0), dart(v, 1));
    uf.unite(dart(v, 0), dart(v, 2));
  }
  for (int i = 1; i < n; ++i) uf.unite(0, i);

  std::vector<int> darts_in(dart_count(), 0), faces_in(dart_count(), 0);
  std::vector<char> vseen(std::max(1, V), 0);
  std::vector<int> verts_in(dart_count(), 0), has_b(dart_count(), 0);
  for (int h = 0; h < dart_count(); ++h) {
    int r = uf.find(h);
    darts_in[r]++;
    if (is_boundary(h)) has_b[r] = 1;
    else if (!vseen[vertex_of(h)]) {
      vseen[vertex_of(h)] = 1;
      verts_in[r]++;
    }
  }
  std::vector<char> seen(dart_count(), 0);
  for (int h = 0; h < dart_count(); ++h) {
    if (seen[h]) continue;
    int x = h;
    do {
      seen[x] = 1;
      x = phi(x);
    } while (x != h);
    faces_in[uf.find(h)]++;
  }
  for (int r = 0; r < dart_count(); ++r) {
    if (darts_in[r] == 0) continue;
    int Vc = verts_in[r] + has_b[r];
    int Ec = darts_in[r] / 2;
    if (Vc - Ec + faces_in[r] != 2) throw SkeinError("diagram: not planar (Euler check failed)");
  }
}

std::vector<Face> PlanarDiagram::faces() const {
  std::vector<char> seen(std::max(1, dart_count()), 0);
  std::vector<Face> out;
  for (int h = 0; h < dart_count(); ++h) {
    if (seen[h]) continue;
    Face f;
    int x = h;
    do {
      seen[x] = 1;
      f.darts.push_back(x);
      if (is_boundary(x)) f.boundary_jumps++;
      x = phi(x);
    } while (x != h);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> PlanarDiagram::internal_face_sizes() const {
  std::vector<int> sizes;
  for (const Face& f : faces())
    if (f.internal()) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Components split_components(const PlanarDiagram& d) {
  UnionFind uf(std::max(1, d.dart_count()));
  for (int h = 0; h < d.dart_count(); ++h) uf.unite(h, d.pair[h]);
  for (int v = 0; v < d.V; ++v) {
    uf.unite(d.dart(v, 0), d.dart(v, 1));
    uf.unite(d.dart(v, 0), d.dart(v, 2));
  }
  std::vector<char> open_root(std::max(1, d.dart_count()), 0);
  for (int i = 0; i < d.n; ++i) open_root[uf.find(i)] = 1;

  std::vector<int> open_verts;
  std::vector<std::vector<int>> closed_groups;
  std::vector<int> group_of(std::max(1, d.dart_count()), -1);
  for (int v = 0; v < d.V; ++v) {
    int r = uf.find(d.dart(v, 0));
    if (open_root[r]) {
      open_verts.push_back(v);
    } else {
      if (group_of[r] < 0) {
        group_of[r] = (int)closed_groups.size();
        closed_groups.emplace_back();
      }
      closed_groups[group_of[r]].push_back(v);
    }
  }
  Components c;
  c.free_loops = d.free_loops;
  c.open = extract(d, open_verts, true);
  for (auto& g : closed_groups) c.closed.push_back(extract(d, g, false));
  return c;
}

std::string PlanarDiagram::canonical_key() const {
  Components c = split_components(*this);
  std::ostringstream os;
  os << "n" << n << ";L" << free_loops << ";O:";
  append_code(os, bfs_code(c.open, -1));
  std::vector<std::string> closed_keys;
  for (const PlanarDiagram& comp : c.closed) {
    std::vector<int> best;
    for (int h = 0; h < comp.dart_count(); ++h) {
      std::vector<int> code = bfs_code(comp, h);
      if (best.empty() || code < best) best = std::move(code);
    }
    std::ostringstream cs;
    append_code(cs, best);
    closed_keys.push_back(cs.str());
  }
  std::sort(closed_keys.begin(), closed_keys.end());
  for (const std::string& s : closed_keys) os << ";C:" << s;
  return os.str();
}

// --- text format -------------------------------------------------------------

std::string PlanarDiagram::str() const {
  std::ostringstream os;
  os << "ptg n=" << n << " V=" << V << " loops=" << free_loops;
  for (int v = 0; v < V; ++v) {
    os << " | v" << v << ":";
    for (int k = 0; k < 3; ++k) {
      int p = pair[dart(v, k)];
      if (is_boundary(p))
        os << " s" << p;
      else
        os << " v" << vertex_of(p) << "." << leg_of(p);
    }
  }
  std::string arcs;
  for (int i = 0; i < n; ++i) {
    int p = pair[i];
    if (p < n && i < p) {
      if (!arcs.empty()) arcs += ",";
      arcs += std::to_string(i) + "-" + std::to_string(p);
    }
  }
  if (!arcs.empty()) os << " | arcs: " << arcs;
  std::string marked;
  for (int v = 0; v < V; ++v) {
    if (dots[v] < 0) continue;
    if (!marked.empty()) marked += ",";
    marked += "v" + std::to_string(v) + "." + std::to_string(dots[v]);
  }
  if (!marked.empty()) os << " | dots: " << marked;
  return os.str();
}

namespace {

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

long parse_long(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SkeinError(std::string("diagram text: bad ") + what + " near '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
  std::vector<std::string> chunks = split(text, '|');
  if (chunks.empty()) throw SkeinError("diagram text: empty");
  PlanarDiagram d;
  {
    std::istringstream hs(trimmed(chunks[0]));
    std::string tag;
    hs >> tag;
    if (tag != "ptg") throw SkeinError("diagram text: missing 'ptg' header");
    std::string kv;
    bool have_n = false, have_v = false;
    while (hs >> kv) {
      size_t eq = kv.find('=');
      if (eq == std::string::npos) throw SkeinError("diagram text: bad header field '" + kv + "'");
      std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "n") {
        d.n = (int)parse_long(val, "n");
        have_n = true;
      } else if (key == "V") {
        d.V = (int)parse_long(val, "V");
        have_v = true;
      } else if (key == "loops") {
        d.free_loops = parse_long(val, "loops");
      } else {
        throw SkeinError("diagram text: unknown header field '" + key + "'");
      }
    }
    if (!have_n || !have_v) throw SkeinError("diagram text: header needs n= and V=");
  }
  d.pair.assign(d.dart_count(), -1);
  d.dots.assign(d.V, -1);

  auto parse_dart = [&](const std::string& tok) {
    if (tok.empty()) throw SkeinError("diagram text: empty dart");
    if (tok[0] == 's') {
      long i = parse_long(tok.substr(1), "slot");
      if (i < 0 || i >= d.n) throw SkeinError("diagram text: slot out of range: " + tok);
      return (int)i;
    }
    if (tok[0] == 'v') {
      size_t dotp = tok.find('.');
      if (dotp == std::string::npos) throw SkeinError("diagram text: bad dart '" + tok + "'");
      long v = parse_long(tok.substr(1, dotp - 1), "vertex");
      long k = parse_long(tok.substr(dotp + 1), "leg");
      if (v < 0 || v >= d.V || k < 0 || k > 2)
        throw SkeinError("diagram text: dart out of range: " + tok);
      return d.dart((int)v, (int)k);
    }
    throw SkeinError("diagram text: bad dart '" + tok + "'");
  };
  auto set_pair = [&](int a, int b) {
    if ((d.pair[a] != -1 && d.pair[a] != b) || (d.pair[b] != -1 && d.pair[b] != a))
      throw SkeinError("diagram text: inconsistent pairing");
    d.pair[a] = b;
    d.pair[b] = a;
  };

  for (size_t ci = 1; ci < chunks.size(); ++ci) {
    std::string chunk = trimmed(chunks[ci]);
    if (chunk.empty()) continue;
    size_t colon = chunk.find(':');
    if (colon == std::string::npos) throw SkeinError("diagram text: bad section '" + chunk + "'");
    std::string head = trimmed(chunk.substr(0, colon));
    std::string body = trimmed(chunk.substr(colon + 1));
    if (head == "arcs") {
      if (body.empty()) continue;
      for (const std::string& arc : split(body, ',')) {
        std::vector<std::string> ends = split(trimmed(arc), '-');
        if (ends.size() != 2) throw SkeinError("diagram text: bad arc '" + arc + "'");
        long a = parse_long(trimmed(ends[0]), "arc end"), b = parse_long(trimmed(ends[1]), "arc end");
        if (a < 0 || a >= d.n || b < 0 || b >= d.n)
          throw SkeinError("diagram text: arc out of range '" + arc + "'");
        set_pair((int)a, (int)b);
      }
    } else if (head == "dots") {
      if (body.empty()) continue;
      for (const std::string& m : split(body, ',')) {
        std::string tok = trimmed(m);
        if (tok.empty() || tok[0] != 'v') throw SkeinError("diagram text: bad mark '" + tok + "'");
        size_t dotp = tok.find('.');
        if (dotp == std::string::npos) throw SkeinError("diagram text: bad mark '" + tok + "'");
        long v = parse_long(tok.substr(1, dotp - 1), "marked vertex");
        long c = parse_long(tok.substr(dotp + 1), "corner");
        if (v < 0 || v >= d.V || c < 0 || c > 2)
          throw SkeinError("diagram text: mark out of range '" + tok + "'");
        d.dots[v] = (int)c;
      }
    } else if (!head.empty() && head[0] == 'v') {
      long v = parse_long(head.substr(1), "vertex");
      if (v < 0 || v >= d.V) throw SkeinError("diagram text: vertex out of range '" + head + "'");
      std::istringstream bs(body);
      std::string tok;
      int k = 0;
      while (bs >> tok) {
        if (k > 2) throw SkeinError("diagram text: too many legs on " + head);
        set_pair(d.dart((int)v, k), parse_dart(tok));
        ++k;
      }
      if (k != 3) throw SkeinError("diagram text: vertex " + head + " needs three legs");
    } else {
      throw SkeinError("diagram text: unknown section '" + head + "'");
    }
  }
  for (int h = 0; h < d.dart_count(); ++h)
    if (d.pair[h] == -1) throw SkeinError("diagram text: dart left unpaired");
  d.validate();
  return d;
}

// --- elementary moves --------------------------------------------------------

PlanarDiagram rotate(const PlanarDiagram& d, int k) {
  if (d.n == 0) return d;
  PlanarDiagram r = d;
  k = ((k % d.n) + d.n) % d.n;
  auto map_dart = [&](int h) { return d.is_boundary(h) ? (h - k + d.n) % d.n : h; };
  for (int h = 0; h < d.dart_count(); ++h) r.pair[map_dart(h)] = map_dart(d.pair[h]);
  return r;
}

PlanarDiagram reflect(const PlanarDiagram& d) {
  PlanarDiagram r = d;
  // Mirrors reverse the rotation at every vertex; leg k is re-read as leg -k.
  auto map_dart = [&](int h) {
    if (d.is_boundary(h)) return d.n - 1 - h;
    static const int flip[3] = {0, 2, 1};
    return d.dart(d.vertex_of(h), flip[d.leg_of(h)]);
  };
  for (int h = 0; h < d.dart_count(); ++h) r.pair[map_dart(h)] = map_dart(d.pair[h]);
  for (int v = 0; v < d.V; ++v) r.dots[v] = d.dots[v] < 0 ? -1 : 2 - d.dots[v];
  return r;
}

PlanarDiagram tensor(const PlanarDiagram& a, const PlanarDiagram& b) {
  PlanarDiagram r;
  r.n = a.n + b.n;
  r.V = a.V + b.V;
  r.free_loops = a.free_loops + b.free_loops;
  r.pair.assign(r.dart_count(), -1);
  r.dots = a.dots;
  r.dots.insert(r.dots.end(), b.dots.begin(), b.dots.end());
  auto map_a = [&](int h) { return a.is_boundary(h) ? h : r.dart(a.vertex_of(h), a.leg_of(h)); };
  auto map_b = [&](int h) {
    return b.is_boundary(h) ? a.n + h : r.dart(a.V + b.vertex_of(h), b.leg_of(h));
  };
  for (int h = 0; h < a.dart_count(); ++h) r.pair[map_a(h)] = map_a(a.pair[h]);
  for (int h = 0; h < b.dart_count(); ++h) r.pair[map_b(h)] = map_b(b.pair[h]);
  return r;
}

PlanarDiagram join_slots(const PlanarDiagram& d, const std::vector<std::pair<int, int>>& joins) {
  PlanarDiagram work = d;
  std::vector<char> consumed(std::max(1, d.n), 0);
  for (auto [x, y] : joins) {
    if (x < 0 || y < 0 || x >= d.n || y >= d.n || x == y)
      throw SkeinError("join: bad slot pair");
    if (consumed[x] || consumed[y]) throw SkeinError("join: slot used twice");
    consumed[x] = consumed[y] = 1;
    int a = work.pair[x], b = work.pair[y];
    if (a == y) {
      work.free_loops++;  // a bare strand between the two slots closes up
    } else {
      work.pair[a] = b;
      work.pair[b] = a;
    }
  }
  PlanarDiagram r;
  r.V = d.V;
  r.free_loops = work.free_loops;
  r.dots = d.dots;
  std::vector<int> slot_map(std::max(1, d.n), -1);
  for (int i = 0; i < d.n; ++i)
    if (!consumed[i]) slot_map[i] = r.n++;
  r.pair.assign(r.dart_count(), -1);
  auto map_dart = [&](int h) {
    return d.is_boundary(h) ? slot_map[h] : r.dart(d.vertex_of(h), d.leg_of(h));
  };
  for (int h = 0; h < d.dart_count(); ++h) {
    if (d.is_boundary(h) && consumed[h]) continue;
    int nh = map_dart(h), np = map_dart(work.pair[h]);
    if (np < 0) throw SkeinError("join: rewiring left a dangling strand");
    r.pair[nh] = np;
  }
  r.validate();
  return r;
}

PlanarDiagram glue(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.n != b.n) throw SkeinError("glue: boundary sizes differ");
  // Slot i of a meets slot i of b's mirror image; flattening the folded
  // picture into one disk turns this into the nested join of i with 2n-1-i.
  PlanarDiagram t = tensor(a, b);
  std::vector<std::pair<int, int>> joins;
  for (int i = 0; i < a.n; ++i) joins.push_back({i, 2 * a.n - 1 - i});
  return join_slots(t, joins);
}

PlanarDiagram compose22(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.n != 4 || b.n != 4) throw SkeinError("compose: needs 4-point diagrams");
  return join_slots(tensor(a, b), {{2, 5}, {3, 4}});
}

PlanarDiagram trace22(const PlanarDiagram& a) {
  if (a.n != 4) throw SkeinError("trace: needs a 4-point diagram");
  return join_slots(a, {{0, 3}, {1, 2}});
}

// --- surgery -----------------------------------------------------------------

int add_vertex(PlanarDiagram& d, int dot) {
  d.V++;
  d.pair.push_back(-1);
  d.pair.push_back(-1);
  d.pair.push_back(-1);
  d.dots.push_back(dot);
  return d.V - 1;
}

void remove_vertices(PlanarDiagram& d, const std::vector<bool>& victim) {
  if ((int)victim.size() != d.V) throw SkeinError("remove: flag size mismatch");
  PlanarDiagram r;
  r.n = d.n;
  r.free_loops = d.free_loops;
  std::vector<int> vmap(d.V, -1);
  for (int v = 0; v < d.V; ++v) {
    if (victim[v]) continue;
    vmap[v] = r.V++;
    r.dots.push_back(d.dots[v]);
  }
  r.pair.assign(r.dart_count(), -1);
  auto map_dart = [&](int h) {
    if (d.is_boundary(h)) return h;
    int v = vmap[d.vertex_of(h)];
    return v < 0 ? -1 : r.dart(v, d.leg_of(h));
  };
  for (int h = 0; h < d.dart_count(); ++h) {
    int nh = map_dart(h);
    if (nh < 0) continue;
    int p = d.pair[h];
    int np = p < 0 ? -1 : map_dart(p);
    if (np < 0) throw SkeinError("remove: surviving dart still wired to a deleted vertex");
    r.pair[nh] = np;
  }
  d = std::move(r);
}

// --- builders ----------------------------------------------------------------

PlanarDiagram matching_diagram(int n, const std::vector<std::pair<int, int>>& arcs, long loops) {
  PlanarDiagram d;
  d.n = n;
  d.free_loops = loops;
  d.pair.assign(n, -1);
  for (auto [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b || d.pair[a] != -1 || d.pair[b] != -1)
      throw SkeinError("matching: bad arc list");
    d.pair[a] = b;
    d.pair[b] = a;
  }
  d.validate();
  return d;
}

PlanarDiagram vertex3() { return PlanarDiagram::parse("ptg n=3 V=1 | v0: s0 s1 s2"); }

PlanarDiagram i_diagram() {
  return PlanarDiagram::parse("ptg n=4 V=2 | v0: s0 s1 v1.2 | v1: s2 s3 v0.2");
}

PlanarDiagram h_diagram() {
  return PlanarDiagram::parse("ptg n=4 V=2 | v0: v1.0 s3 s0 | v1: v0.0 s1 s2");
}

PlanarDiagram polygon_with_legs(int m) {
  if (m < 1) throw SkeinError("polygon: needs at least one side");
  PlanarDiagram d;
  d.n = m;
  d.V = m;
  d.pair.assign(d.dart_count(), -1);
  d.dots.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    connect(d, d.dart(i, 0), i);                       // leg
    connect(d, d.dart(i, 1), d.dart((i + 1) % m, 2));  // edge toward the next corner
  }
  d.validate();
  return d;
}

PlanarDiagram theta() {
  return PlanarDiagram::parse("ptg n=0 V=2 | v0: v1.1 v1.0 v1.2 | v1: v0.1 v0.0 v0.2");
}

}  // namespace skein
