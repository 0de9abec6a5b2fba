#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapforge/error.hpp"

namespace mapforge {

/// Darts are dense 0-based indices internally; the JSON layer shifts to 1-based.
using Dart = int;

/// Vertex and face degree statistics of a map.
struct DegreeProfile {
  std::vector<int> vertex_degrees;  // vertex_degrees[k] = number of degree-k vertices
  std::vector<int> face_degrees;    // face_degrees[k]   = number of degree-k faces
  int edges = 0;
  int genus = 0;
};

/// The six corner accessors. A corner is named by the dart d such that the
/// corner sits between d and sigma(d) around their vertex.
struct CornerNav {
  Dart next_face;    // clockwise successor around the face
  Dart next_vertex;  // counterclockwise successor around the vertex
  Dart prev_face;
  Dart prev_vertex;
  int next_edge;  // edge index of sigma(d)
  int prev_edge;  // edge index of d
};

/// Rooted map on an orientable surface, given by a fixed-point-free
/// involution alpha (edges) and a permutation sigma (counterclockwise
/// rotation around vertices).
///
/// Conventions:
///  - corner c(d) is the sector between d and sigma(d);
///  - walking a face clockwise goes from c(d) to c(alpha(sigma(d)));
///  - the root corner is c(root).
///
/// Values are immutable once validated.
class RotationMap {
 public:
  /// Validates the permutations and precomputes vertices, edges and faces.
  static RotationMap validate(std::vector<Dart> alpha, std::vector<Dart> sigma, Dart root);

  int n_darts() const noexcept { return static_cast<int>(alpha_.size()); }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart root() const noexcept { return root_; }
  std::span<const Dart> alpha_perm() const noexcept { return alpha_; }
  std::span<const Dart> sigma_perm() const noexcept { return sigma_; }

  int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  int num_edges() const noexcept { return n_darts() / 2; }
  int num_faces() const noexcept { return static_cast<int>(faces_.size()); }
  int genus() const noexcept { return genus_; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  /// Face containing corner c(d).
  int face_of(Dart d) const { return face_of_[d]; }
  int edge_of(Dart d) const { return edge_of_[d]; }
  /// The smaller dart of edge e; edges are numbered in increasing min-dart order.
  Dart edge_dart(int e) const { return edge_darts_[e]; }

  /// Darts around each vertex in counterclockwise order, starting from the smallest.
  const std::vector<std::vector<Dart>>& vertices() const noexcept { return vertices_; }
  /// Corners of each face in clockwise order, starting from the smallest dart.
  const std::vector<std::vector<Dart>>& faces() const noexcept { return faces_; }

  int root_vertex() const { return vertex_of_[root_]; }
  int root_face() const { return face_of_[root_]; }

  CornerNav corner(Dart d) const;
  DegreeProfile degree_profile() const;

  bool operator==(const RotationMap& other) const {
    return alpha_ == other.alpha_ && sigma_ == other.sigma_ && root_ == other.root_;
  }

 private:
  RotationMap() = default;

  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  Dart root_ = 0;
  int genus_ = 0;
  std::vector<int> vertex_of_, face_of_, edge_of_;
  std::vector<Dart> edge_darts_;
  std::vector<std::vector<Dart>> vertices_, faces_;
};

int genus(const RotationMap& m);

/// Dual map on the same dart set: sigma' = sigma^-1 alpha, alpha' = sigma^-1 alpha sigma.
/// The root dart is kept, so the root corner is the same vertex/face incidence
/// with roles swapped, and dual(dual(m)) == m exactly.
RotationMap dual(const RotationMap& m);

/// Radial map: one 4-valent vertex per edge of m, one edge per corner of m.
/// Dart 2d and 2d+1 are the two ends of the radial edge of corner c(d); the
/// radial root corner lies inside the radial face of the primal root vertex.
RotationMap radial(const RotationMap& m);

/// Mirror image: sigma is inverted and the root re-anchored on the same corner.
RotationMap reflect(const RotationMap& m);

/// Proper 2-coloring of the vertices (0/1 per vertex), if any.
std::optional<std::vector<int>> is_bipartite(const RotationMap& m);
/// Proper 2-coloring of the faces (0/1 per face), if any.
std::optional<std::vector<int>> is_bicolorable(const RotationMap& m);

/// Edge subset as a membership mask indexed by edge number.
using EdgeSet = std::vector<bool>;
EdgeSet complement_submap(const EdgeSet& s, const RotationMap& m);

/// Byte string equal for two maps iff they are isomorphic as rooted maps.
std::string canonical_encoding(const RotationMap& m);

/// Canonical BFS relabeling from a root dart. alpha may contain fixed points
/// (stems); every dart must be reachable by alpha/sigma moves. Returns
/// new_label[old_dart].
std::vector<int> canonical_relabeling(std::span<const Dart> alpha, std::span<const Dart> sigma,
                                      Dart root);

/// Encodes (alpha, sigma, extra per-dart tags) after canonical relabeling.
std::string encode_relabeled(std::span<const Dart> alpha, std::span<const Dart> sigma,
                             std::span<const int> tags, Dart root);

/// Relabels a map's darts (new = perm[old]) keeping the rooted map the same.
RotationMap relabel(const RotationMap& m, std::span<const int> perm);

}  // namespace mapforge
