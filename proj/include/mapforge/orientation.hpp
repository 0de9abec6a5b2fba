#pragma once

#include <optional>
#include <vector>

#include "mapforge/rotation_map.hpp"

namespace mapforge {

/// head[e] is the dart of edge e sitting at the head vertex.
struct Orientation {
  std::vector<Dart> head;
  bool operator==(const Orientation&) const = default;
};

inline constexpr Dart kBioriented = -1;

/// head[e] is a dart of edge e, or kBioriented.
struct HalfOrientation {
  std::vector<Dart> head;
  bool operator==(const HalfOrientation&) const = default;
};

/// True when dart d is the head end of its edge.
inline bool is_head(const Orientation& o, const RotationMap& m, Dart d) {
  return o.head[m.edge_of(d)] == d;
}

Orientation validate_orientation(const RotationMap& m, std::vector<Dart> heads);
HalfOrientation validate_half_orientation(const RotationMap& m, std::vector<Dart> heads);

/// Graph distance from the root vertex.
std::vector<int> vertex_distances(const RotationMap& m);

Orientation geodesic_orientation(const RotationMap& m);
/// Transport of an orientation of m to dual(m). The dual edge through dart x
/// crosses the primal edge of sigma(x); head h becomes sigma^-1(h).
Orientation dual_orientation(const RotationMap& m, const Orientation& o);
/// Transport of a geodesic orientation of dual(m) back to m, so that the
/// root face becomes the only clockwise face.
Orientation dual_geodesic_orientation(const RotationMap& m);

bool is_bipartite_orientation(const RotationMap& m, const Orientation& o);
bool is_bicolorable_orientation(const RotationMap& m, const Orientation& o);

/// Every edge on the face of corner c(d) is traversed forward by the clockwise walk.
bool is_clockwise_face(const RotationMap& m, const Orientation& o, int face);
bool is_counterclockwise_face(const RotationMap& m, const Orientation& o, int face);
bool is_sink(const RotationMap& m, const Orientation& o, int vertex);

Orientation reverse_all(const Orientation& o, const RotationMap& m);
Orientation face_flip(const RotationMap& m, const Orientation& o, int face);
/// Inverse of face_flip: a counterclockwise non-root face becomes clockwise.
Orientation face_unflip(const RotationMap& m, const Orientation& o, int face);
Orientation vertex_push(const RotationMap& m, const Orientation& o, int vertex);
Orientation minimize_by_flips(const RotationMap& m, Orientation o, int* flips = nullptr);

/// All 2^e orientations, in bitmask order (bit e set = head is the larger dart).
std::vector<Orientation> all_orientations(const RotationMap& m);

/// m∥: each edge replaced by two parallel copies. Dart d becomes 2d, 2d+1 in
/// counterclockwise order.
RotationMap double_faces(const RotationMap& m);
/// m⊻: each edge subdivided by a degree-2 vertex. Edge e gets darts n+2e (next
/// to its smaller dart) and n+2e+1.
RotationMap double_vertices(const RotationMap& m);

HalfOrientation geodesic_half_orientation(const RotationMap& m);
HalfOrientation dual_geodesic_half_orientation(const RotationMap& m);
/// No edge of the face is fully counterclockwise.
bool is_clockwise_face_half(const RotationMap& m, const HalfOrientation& h, int face);
HalfOrientation to_half(const Orientation& o);

}  // namespace mapforge
