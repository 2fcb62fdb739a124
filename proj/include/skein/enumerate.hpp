#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"

// Reduced-diagram bases and the structural features used by the discharging
// arguments.  A diagram belongs to the plain basis B(n,k) when it is open, has
// no closed components, every internal face has at least four sides, and at
// most k internal faces in total; the square-free variant raises the minimum
// internal face size to five.

namespace skein {

enum class FeatureTag {
  small_face,       // internal face with <= 5 sides
  very_small_face,  // internal face with <= 4 sides
  pentapent,        // two internal pentagons sharing an edge
  hexapent,         // internal pentagon sharing an edge with an internal hexagon
  growth_region,    // contiguous proper run of boundary faces with charge >= 2
  corner_pentagon,  // pentagon touching <= 2 internal faces, mutually adjacent
  bridge_pentagon,  // pentagon touching exactly 2 non-adjacent internal faces
  none,
};

std::string to_string(FeatureTag tag);

struct Feature {
  FeatureTag tag = FeatureTag::none;
  // Indices into faces() of the diagram the feature was found in.  For a
  // growth region the faces are the region's boundary faces and
  // region_start/region_len locate it in boundary gap order.
  std::vector<int> faces;
  int region_start = -1;
  int region_len = 0;
};

enum class BasisVariant { plain, square_free };

struct BasisSet {
  int n = 0;
  int k = 0;
  BasisVariant variant = BasisVariant::plain;
  std::vector<PlanarDiagram> members;  // sorted by (vertex count, canonical key)
  std::vector<std::string> keys() const;
};

// The face bordering the boundary interval between slot g and slot g+1 (mod n).
// Returns an index into fs; requires a boundary-connected diagram where that
// association is single-valued per gap.
int face_of_gap(const PlanarDiagram& d, const std::vector<Face>& fs, int gap);

// Sum of charges of the boundary faces of gaps [start, start+len) (cyclic).
// The diagram must be connected and the run proper (1 <= len < n).  The value
// equals O - I + 1 for the region's outgoing/incoming edge counts, and the
// region is a growth region exactly when the result is >= 2.
int boundary_region_charge(const PlanarDiagram& d, int start, int len);

// Carve the boundary region of gaps [start, start+len) out of a connected
// diagram: its faces, their vertices and their legs disappear, and the edges
// that crossed the region's frontier become new boundary points.  The result
// is rotated so its slot 0 is the first surviving old slot after the region.
PlanarDiagram remove_boundary_region(const PlanarDiagram& d, int start, int len);

// All (start, len) runs that are growth regions; maximal_only keeps those not
// strictly contained in another growth region.
std::vector<std::pair<int, int>> growth_regions(const PlanarDiagram& d,
                                                bool maximal_only = false);

// Highest-priority feature present in the diagram, scanning tags in policy
// order.  The default policy mirrors the structure lemmas: very small face,
// pentapent, hexapent, corner pentagon, growth region.  Growth regions and
// corner/bridge pentagons are only sought in connected open diagrams.
Feature find_feature(const PlanarDiagram& d);
Feature find_feature(const PlanarDiagram& d, const std::vector<FeatureTag>& policy);

// Membership predicate shared by both enumerators.
bool is_basis_member(const PlanarDiagram& d, int k, BasisVariant variant);

// Exhaustive generation of all open diagrams with n boundary points and at
// most max_vertices vertices (no closed components, no free loops), filtered
// by pred.  Diagrams are produced by resolving the first free boundary point
// of each region, which generates every diagram exactly once; canonical keys
// are still checked for uniqueness.  Results sorted by (vertex count, key).
std::vector<PlanarDiagram> brute_enumerate(
    int n, int max_vertices, const std::function<bool(const PlanarDiagram&)>& pred);

// Basis via the structure lemmas: connected diagrams are grown from a strand
// and a bare vertex by attaching boundary regions (caterpillar gadgets with
// at least one incoming edge, whether they grow or shrink the boundary), and
// members are planar unions of connected pieces.  Supported envelope:
// n <= 8, k <= 3.
BasisSet enumerate_basis(int n, int k, BasisVariant variant);

}  // namespace skein
