#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/enumerate.hpp"

using namespace skein;

namespace {

PlanarDiagram arc() { return matching_diagram(2, {{0, 1}}); }

// Five legs around an internal triangle: forks at slots (0,1) and (3,4), a
// lone leg at slot 2. Gap charges around the boundary are (2, 0, 0, 2, -1).
PlanarDiagram growth_figure() {
  PlanarDiagram d;
  d.n = 5;
  d.pair.assign(5, -1);
  for (int i = 0; i < 5; ++i) add_vertex(d);
  connect(d, 0, d.dart(0, 0));
  connect(d, 1, d.dart(0, 1));
  connect(d, 3, d.dart(1, 0));
  connect(d, 4, d.dart(1, 1));
  connect(d, 2, d.dart(2, 0));
  connect(d, d.dart(0, 2), d.dart(3, 0));
  connect(d, d.dart(2, 1), d.dart(4, 1));
  connect(d, d.dart(2, 2), d.dart(3, 1));
  connect(d, d.dart(3, 2), d.dart(4, 0));
  connect(d, d.dart(1, 2), d.dart(4, 2));
  d.validate();
  return d;
}

// 1x3 ladder: eight vertices in two rows, three square faces, corner legs.
// Slots counterclockwise: 0 bottom-left, 1 bottom-right, 2 top-right, 3
// top-left; vertices 0..3 run along the top row, 4..7 along the bottom.
PlanarDiagram ladder3() {
  PlanarDiagram d;
  d.n = 4;
  d.pair.assign(4, -1);
  for (int i = 0; i < 8; ++i) add_vertex(d);
  connect(d, 3, d.dart(0, 1));
  connect(d, 2, d.dart(3, 0));
  connect(d, 0, d.dart(4, 2));
  connect(d, 1, d.dart(7, 2));
  connect(d, d.dart(0, 0), d.dart(1, 1));  // top row
  connect(d, d.dart(1, 0), d.dart(2, 1));
  connect(d, d.dart(2, 0), d.dart(3, 1));
  connect(d, d.dart(4, 0), d.dart(5, 2));  // bottom row
  connect(d, d.dart(5, 0), d.dart(6, 2));
  connect(d, d.dart(6, 0), d.dart(7, 1));
  connect(d, d.dart(0, 2), d.dart(4, 1));  // rungs
  connect(d, d.dart(1, 2), d.dart(5, 1));
  connect(d, d.dart(2, 2), d.dart(6, 1));
  connect(d, d.dart(3, 2), d.dart(7, 0));
  d.validate();
  return d;
}

std::set<std::string> key_set(const std::vector<PlanarDiagram>& ds) {
  std::set<std::string> out;
  for (const PlanarDiagram& d : ds) out.insert(d.canonical_key());
  return out;
}

bool connected_open(const PlanarDiagram& d) {
  if (d.n == 0 || d.free_loops != 0) return false;
  if (!split_components(d).closed.empty()) return false;
  for (const Face& f : d.faces()) {
    int slots = 0;
    for (int h : f.darts)
      if (d.is_boundary(h)) slots++;
    if (slots > 1) return false;  // a face meeting the boundary twice separates
  }
  return true;
}

FeatureTag tag_under(const PlanarDiagram& d, FeatureTag t) {
  return find_feature(d, {t}).tag;
}

bool face_feature_free(const PlanarDiagram& d) {
  return tag_under(d, FeatureTag::very_small_face) == FeatureTag::none &&
         tag_under(d, FeatureTag::pentapent) == FeatureTag::none &&
         tag_under(d, FeatureTag::hexapent) == FeatureTag::none &&
         tag_under(d, FeatureTag::corner_pentagon) == FeatureTag::none;
}

std::vector<PlanarDiagram> brute_members(int n, int k, BasisVariant variant) {
  return brute_enumerate(n, n + 2 * k - 2,
                         [&](const PlanarDiagram& d) { return is_basis_member(d, k, variant); });
}

}  // namespace

TEST_CASE("gap charges and region charges") {
  PlanarDiagram fig = growth_figure();
  CHECK(fig.internal_face_sizes() == std::vector<int>({3}));
  int expected[5] = {2, 0, 0, 2, -1};
  for (int g = 0; g < 5; ++g) CHECK(boundary_region_charge(fig, g, 1) == expected[g]);
  CHECK(boundary_region_charge(fig, 0, 4) == 4);
  CHECK(boundary_region_charge(fig, 1, 2) == 0);
  CHECK(boundary_region_charge(fig, 3, 2) == 1);

  // around a polygon every gap face carries charge one
  PlanarDiagram pent = polygon_with_legs(5);
  for (int g = 0; g < 5; ++g) CHECK(boundary_region_charge(pent, g, 1) == 1);
  CHECK(boundary_region_charge(pent, 0, 2) == 2);

  // a bare vertex's single gap face
  CHECK(boundary_region_charge(vertex3(), 0, 1) == 2);

  std::vector<Face> fs = pent.faces();
  std::set<int> gap_faces;
  for (int g = 0; g < 5; ++g) {
    int i = face_of_gap(pent, fs, g);
    CHECK(fs[i].charge() == 1);
    gap_faces.insert(i);
  }
  CHECK(gap_faces.size() == 5);

  CHECK_THROWS_AS(boundary_region_charge(pent, 0, 5), SkeinError);   // full boundary
  CHECK_THROWS_AS(boundary_region_charge(pent, 0, 0), SkeinError);   // empty run
  CHECK_THROWS_AS(boundary_region_charge(pent, 5, 1), SkeinError);   // bad start
  CHECK_THROWS_AS(boundary_region_charge(theta(), 0, 1), SkeinError);  // closed
  CHECK_THROWS_AS(boundary_region_charge(tensor(vertex3(), vertex3()), 0, 1),
                  SkeinError);  // disconnected
}

TEST_CASE("growth regions") {
  PlanarDiagram fig = growth_figure();
  auto all = growth_regions(fig);
  CHECK(all.size() == 10);
  auto maximal = growth_regions(fig, true);
  CHECK(maximal == std::vector<std::pair<int, int>>({{0, 4}, {2, 4}, {3, 4}}));

  // polygons grow along any run of five gaps
  CHECK(growth_regions(polygon_with_legs(6), true).size() == 6);
  CHECK(growth_regions(arc(), true) ==
        std::vector<std::pair<int, int>>({{0, 1}, {1, 1}}));

  CHECK(growth_regions(theta()).empty());                      // closed
  CHECK(growth_regions(tensor(arc(), arc())).empty());         // disconnected
}

TEST_CASE("region removal") {
  CHECK(remove_boundary_region(vertex3(), 0, 1).canonical_key() == arc().canonical_key());
  CHECK(remove_boundary_region(vertex3(), 0, 2).empty());
  CHECK(remove_boundary_region(arc(), 0, 1).empty());
  CHECK(remove_boundary_region(i_diagram(), 0, 1).canonical_key() == vertex3().canonical_key());
  CHECK(remove_boundary_region(polygon_with_legs(5), 0, 2).canonical_key() ==
        h_diagram().canonical_key());

  PlanarDiagram fig = growth_figure();
  PlanarDiagram peeled = remove_boundary_region(fig, 0, 1);
  CHECK(peeled.n == 4);
  CHECK(peeled.V == 4);
  CHECK(peeled.internal_face_sizes() == std::vector<int>({3}));
  CHECK(remove_boundary_region(fig, 1, 2).canonical_key() ==
        matching_diagram(4, {{0, 3}, {1, 2}}).canonical_key());
  CHECK(remove_boundary_region(fig, 0, 4).empty());

  CHECK_THROWS_AS(remove_boundary_region(fig, 0, 5), SkeinError);
  CHECK_THROWS_AS(remove_boundary_region(theta(), 0, 1), SkeinError);
  CHECK_THROWS_AS(remove_boundary_region(tensor(vertex3(), vertex3()), 0, 1), SkeinError);
  CHECK_THROWS_AS(remove_boundary_region(matching_diagram(4, {{0, 1}, {2, 3}}), 0, 1),
                  SkeinError);
}

TEST_CASE("feature search on fixed shapes") {
  CHECK(find_feature(PlanarDiagram{}).tag == FeatureTag::none);

  Feature f = find_feature(theta());
  CHECK(f.tag == FeatureTag::very_small_face);
  CHECK(theta().faces()[f.faces[0]].size() == 2);

  CHECK(find_feature(polygon_with_legs(4)).tag == FeatureTag::very_small_face);

  f = find_feature(polygon_with_legs(5));
  CHECK(f.tag == FeatureTag::corner_pentagon);  // no internal neighbours at all
  CHECK(f.faces.size() == 1);
  CHECK(polygon_with_legs(5).faces()[f.faces[0]].size() == 5);

  f = find_feature(polygon_with_legs(6));
  CHECK(f.tag == FeatureTag::growth_region);
  CHECK(f.region_start == 0);
  CHECK(f.region_len == 5);
  CHECK(f.faces.size() == 5);

  f = find_feature(i_diagram());
  CHECK(f.tag == FeatureTag::growth_region);
  CHECK(f.region_len == 3);

  CHECK(tag_under(theta(), FeatureTag::small_face) == FeatureTag::small_face);
  CHECK(tag_under(polygon_with_legs(5), FeatureTag::small_face) == FeatureTag::small_face);
  CHECK(tag_under(polygon_with_legs(6), FeatureTag::small_face) == FeatureTag::none);
  CHECK(tag_under(ladder3(), FeatureTag::very_small_face) == FeatureTag::very_small_face);

  CHECK(to_string(FeatureTag::pentapent) == "pentapent");
  CHECK(to_string(find_feature(PlanarDiagram{}).tag) == "none");
}

TEST_CASE("feature search on enumerated shapes") {
  // two pentagons sharing an edge
  BasisSet b62 = enumerate_basis(6, 2, BasisVariant::square_free);
  bool saw_pentapent = false;
  for (const PlanarDiagram& d : b62.members)
    if (d.internal_face_sizes() == std::vector<int>({5, 5})) {
      CHECK(find_feature(d).tag == FeatureTag::pentapent);
      saw_pentapent = true;
    }
  CHECK(saw_pentapent);

  // pentagon against hexagon
  BasisSet b72 = enumerate_basis(7, 2, BasisVariant::square_free);
  bool saw_hexapent = false;
  for (const PlanarDiagram& d : b72.members)
    if (d.internal_face_sizes() == std::vector<int>({5, 6})) {
      CHECK(find_feature(d).tag == FeatureTag::hexapent);
      saw_hexapent = true;
    }
  CHECK(saw_hexapent);

  // pentagon with two square neighbours (bridge), and square-square-pentagon
  // strips whose pentagon is a corner instead
  BasisSet b53 = enumerate_basis(5, 3, BasisVariant::plain);
  int bridges = 0, corners = 0;
  for (const PlanarDiagram& d : b53.members)
    if (d.internal_face_sizes() == std::vector<int>({4, 4, 5})) {
      CHECK(find_feature(d).tag == FeatureTag::very_small_face);  // squares come first
      if (tag_under(d, FeatureTag::bridge_pentagon) == FeatureTag::bridge_pentagon) {
        CHECK(tag_under(d, FeatureTag::corner_pentagon) == FeatureTag::none);
        bridges++;
      }
      if (tag_under(d, FeatureTag::corner_pentagon) == FeatureTag::corner_pentagon) corners++;
    }
  CHECK(bridges > 0);
  CHECK(corners > 0);
}

TEST_CASE("membership predicate") {
  CHECK(is_basis_member(PlanarDiagram{}, 0, BasisVariant::plain));
  CHECK(is_basis_member(arc(), 0, BasisVariant::square_free));
  CHECK(is_basis_member(tensor(vertex3(), vertex3()), 0, BasisVariant::plain));
  CHECK(is_basis_member(polygon_with_legs(4), 1, BasisVariant::plain));
  CHECK_FALSE(is_basis_member(polygon_with_legs(4), 0, BasisVariant::plain));
  CHECK_FALSE(is_basis_member(polygon_with_legs(4), 1, BasisVariant::square_free));
  CHECK_FALSE(is_basis_member(polygon_with_legs(1), 3, BasisVariant::plain));
  CHECK_FALSE(is_basis_member(theta(), 3, BasisVariant::plain));
  CHECK_FALSE(is_basis_member(matching_diagram(2, {{0, 1}}, 1), 3, BasisVariant::plain));
  CHECK(is_basis_member(polygon_with_legs(5), 1, BasisVariant::square_free));
}

TEST_CASE("pinned basis counts") {
  BasisSet b40 = enumerate_basis(4, 0, BasisVariant::plain);
  CHECK(b40.members.size() == 4);
  CHECK(key_set(b40.members) ==
        key_set({matching_diagram(4, {{0, 3}, {1, 2}}), matching_diagram(4, {{0, 1}, {2, 3}}),
                 i_diagram(), h_diagram()}));

  BasisSet b41 = enumerate_basis(4, 1, BasisVariant::plain);
  CHECK(b41.members.size() == 5);
  CHECK(key_set(b41.members).count(polygon_with_legs(4).canonical_key()) == 1);

  CHECK(enumerate_basis(5, 0, BasisVariant::plain).members.size() == 10);
  CHECK(enumerate_basis(5, 1, BasisVariant::plain).members.size() == 16);
  CHECK(enumerate_basis(6, 0, BasisVariant::plain).members.size() == 34);
  CHECK(enumerate_basis(5, 1, BasisVariant::square_free).members.size() == 11);
  CHECK(enumerate_basis(6, 1, BasisVariant::square_free).members.size() == 41);
  CHECK(enumerate_basis(6, 2, BasisVariant::square_free).members.size() == 44);
  CHECK(enumerate_basis(7, 1, BasisVariant::square_free).members.size() == 155);
}

TEST_CASE("basis edge cases and envelope") {
  BasisSet empty_boundary = enumerate_basis(0, 2, BasisVariant::plain);
  REQUIRE(empty_boundary.members.size() == 1);
  CHECK(empty_boundary.members[0].empty());

  for (int k = 0; k <= 3; ++k) {
    CHECK(enumerate_basis(1, k, BasisVariant::plain).members.empty());
    CHECK(enumerate_basis(1, k, BasisVariant::square_free).members.empty());
  }
  BasisSet b22 = enumerate_basis(2, 2, BasisVariant::plain);
  REQUIRE(b22.members.size() == 1);
  CHECK(b22.members[0].canonical_key() == arc().canonical_key());

  BasisSet b33 = enumerate_basis(3, 3, BasisVariant::plain);
  REQUIRE(b33.members.size() == 1);
  CHECK(b33.members[0].canonical_key() == vertex3().canonical_key());

  CHECK_THROWS_AS(enumerate_basis(9, 0, BasisVariant::plain), SkeinError);
  CHECK_THROWS_AS(enumerate_basis(4, 4, BasisVariant::plain), SkeinError);
  CHECK_THROWS_AS(enumerate_basis(-1, 0, BasisVariant::plain), SkeinError);
  CHECK_THROWS_AS(enumerate_basis(4, -1, BasisVariant::plain), SkeinError);
  CHECK_THROWS_AS(brute_enumerate(5, 13, [](const PlanarDiagram&) { return true; }),
                  SkeinError);
  CHECK_THROWS_AS(brute_enumerate(-1, 0, [](const PlanarDiagram&) { return true; }),
                  SkeinError);
}

TEST_CASE("basis sets agree with exhaustive generation") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= 2; ++k)
      for (BasisVariant variant : {BasisVariant::plain, BasisVariant::square_free}) {
        CAPTURE(n);
        CAPTURE(k);
        auto brute = brute_members(n, k, variant);
        std::set<std::string> brute_keys = key_set(brute);
        CHECK(brute_keys.size() == brute.size());  // generator never repeats
        CHECK(key_set(enumerate_basis(n, k, variant).members) == brute_keys);
      }

  // deep vertex budget: the square ladder needs two stacked H moves
  BasisSet b43 = enumerate_basis(4, 3, BasisVariant::plain);
  CHECK(key_set(b43.members) == key_set(brute_members(4, 3, BasisVariant::plain)));
  CHECK(key_set(b43.members).count(ladder3().canonical_key()) == 1);

  CHECK(key_set(enumerate_basis(7, 0, BasisVariant::plain).members) ==
        key_set(brute_members(7, 0, BasisVariant::plain)));
  CHECK(key_set(enumerate_basis(7, 1, BasisVariant::square_free).members) ==
        key_set(brute_members(7, 1, BasisVariant::square_free)));
}

TEST_CASE("basis ordering, containment, and invariants") {
  // deterministic output, sorted by vertex count then key
  BasisSet a = enumerate_basis(6, 1, BasisVariant::square_free);
  BasisSet b = enumerate_basis(6, 1, BasisVariant::square_free);
  CHECK(a.keys() == b.keys());
  for (size_t i = 0; i + 1 < a.members.size(); ++i) {
    const PlanarDiagram &x = a.members[i], &y = a.members[i + 1];
    CHECK((x.V < y.V || (x.V == y.V && x.canonical_key() < y.canonical_key())));
  }
  for (const PlanarDiagram& d : a.members) {
    CHECK(d.n == 6);
    CHECK_NOTHROW(d.validate());
    CHECK(is_basis_member(d, 1, BasisVariant::square_free));
  }

  // square-free bases sit inside the plain ones
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 1}, {6, 1}, {6, 2}}) {
    std::set<std::string> plain = key_set(enumerate_basis(n, k, BasisVariant::plain).members);
    for (const std::string& key :
         key_set(enumerate_basis(n, k, BasisVariant::square_free).members))
      CHECK(plain.count(key) == 1);
  }

  // larger face budgets only add diagrams
  size_t prev = 0;
  for (int k = 0; k <= 3; ++k) {
    size_t cur = enumerate_basis(4, k, BasisVariant::plain).members.size();
    CHECK(cur >= prev);
    prev = cur;
  }

  // face-size floors
  for (const PlanarDiagram& d : enumerate_basis(6, 2, BasisVariant::plain).members) {
    auto sizes = d.internal_face_sizes();
    CHECK((sizes.empty() || sizes.front() >= 4));
  }
  for (const PlanarDiagram& d : a.members) {
    auto sizes = d.internal_face_sizes();
    CHECK((sizes.empty() || sizes.front() >= 5));
  }
}

TEST_CASE("connected diagrams always expose a small face or a growth region") {
  for (BasisVariant variant : {BasisVariant::plain, BasisVariant::square_free})
    for (const PlanarDiagram& d : enumerate_basis(6, 2, variant).members)
      if (connected_open(d))
        CHECK(find_feature(d, {FeatureTag::small_face, FeatureTag::growth_region}).tag !=
              FeatureTag::none);
}

TEST_CASE("removing a maximal growth region preserves feature freeness") {
  std::vector<PlanarDiagram> instances;
  for (const PlanarDiagram& d : enumerate_basis(6, 0, BasisVariant::plain).members)
    instances.push_back(d);
  for (const PlanarDiagram& d : enumerate_basis(7, 0, BasisVariant::plain).members)
    instances.push_back(d);
  for (const PlanarDiagram& d : enumerate_basis(6, 1, BasisVariant::plain).members)
    instances.push_back(d);
  for (const PlanarDiagram& d : enumerate_basis(7, 1, BasisVariant::square_free).members)
    instances.push_back(d);

  int removals = 0;
  for (const PlanarDiagram& d : instances) {
    if (!connected_open(d) || !face_feature_free(d)) continue;
    for (auto [s, l] : growth_regions(d, /*maximal_only=*/true)) {
      PlanarDiagram r = remove_boundary_region(d, s, l);
      CHECK(face_feature_free(r));
      removals++;
    }
  }
  CHECK(removals > 100);  // the pool really exercises the lemma
}

TEST_CASE("exhaustive generator basics") {
  auto all = brute_enumerate(0, 2, [](const PlanarDiagram&) { return true; });
  REQUIRE(all.size() == 1);
  CHECK(all[0].empty());

  auto strands = brute_enumerate(2, 0, [](const PlanarDiagram&) { return true; });
  REQUIRE(strands.size() == 1);
  CHECK(strands[0].canonical_key() == arc().canonical_key());

  auto wild = brute_enumerate(5, 5, [](const PlanarDiagram&) { return true; });
  CHECK(key_set(wild).size() == wild.size());
  for (const PlanarDiagram& d : wild) CHECK(d.n == 5);
}
