#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/valency.hpp"

namespace hyptv {

// One glued edge pair. reversed=true is the orientation-reversing boundary
// identification (corner a <-> corner b+1, corner a+1 <-> corner b), the only
// one producing a closed oriented surface.
struct EdgePair {
  std::int64_t a{0};
  std::int64_t b{0};
  bool reversed{true};
};

// Closed oriented surface obtained from a regular m-gon with a fixed-point-free
// edge pairing, subdivided (barycenter cone + edge midpoints) so every
// rotation power is simplicial with its fixed points at vertices.
struct GluedPolygon {
  std::int64_t edge_count{0};                       // m
  std::vector<std::int64_t> pairing;                // involution on 0..m-1
  std::int64_t genus{0};
  std::vector<std::vector<std::int64_t>> corner_cycles;  // vertex links in CCW wedge order
  std::vector<std::int64_t> corner_class;           // corner -> cycle index
  std::vector<std::int64_t> corner_position;        // corner -> position in its cycle
};

GluedPolygon build_glued_polygon(std::int64_t m, const std::vector<EdgePair>& pairs);

struct RotationAction {
  std::int64_t step{0};  // rotation by 2*pi*step/m
};

// Rotation order on the m-gon (1 for the identity).
std::int64_t rotation_order(const GluedPolygon& surface, const RotationAction& rot);

struct MultipleOrbit {
  std::int64_t orbit_size{1};      // d
  std::int64_t isotropy_order{2};  // lambda = n/d
  std::int64_t local_rotation{1};  // nu, shift of the isotropy generator on the link
  Valency valency;                 // theta/lambda with theta = nu^-1 mod lambda
};

// All orbits with nontrivial isotropy, one entry per orbit. Requires the
// pairing to be equivariant for the rotation step.
std::vector<MultipleOrbit> multiple_orbits(const GluedPolygon& surface, const RotationAction& rot);

TotalValency tv_from_polygon(const GluedPolygon& surface, const RotationAction& rot);

struct FamilyModel {
  GluedPolygon surface;
  RotationAction rotation;
};

// Built-in polygon model of the family generator (F1/F2/F3 only): the
// rotation-equivariant pairing reproducing the closed-form total valency.
FamilyModel standard_family(Family family, std::int64_t genus);

// Step-2-equivariant pairing determined by the images of edges 0 and 1.
std::vector<EdgePair> equivariant_pairing(std::int64_t m, std::int64_t p0, std::int64_t p1);

// Derivation oracle for the built-in pairings: all (p0, p1) whose equivariant
// pairing yields the family's genus and closed-form total valency.
std::vector<std::pair<std::int64_t, std::int64_t>> search_equivariant_pairings(Family family,
                                                                               std::int64_t genus);

std::vector<EdgePair> pairing_from_json(const std::string& text);

}  // namespace hyptv
