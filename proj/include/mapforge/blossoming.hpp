#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapforge/orientation.hpp"
#include "mapforge/rotation_map.hpp"

namespace mapforge {

/// Direction of a dart relative to its own vertex. For stems: Out = bud,
/// In = leaf. For interior edges: In at the head, Out at the tail, Both on
/// the two darts of a bi-oriented edge.
enum class Flow : std::int8_t { In = 0, Out = 1, Both = 2 };

/// Rotation system whose alpha may have fixed points (the stems). Corners,
/// faces and the tour follow the closed-map conventions with alpha(x) = x on
/// stems: the tour moves from c(d) to c(alpha(sigma(d))).
///
/// The map is rooted at a corner. Usually that corner is c(sigma^-1(b)) for
/// the root bud b, so the tour meets b first. Fractional openings may keep a
/// bi-oriented edge right after the root corner, or have no stem at all; the
/// root bud is then the first stem met by the tour, if any.
class BlossomingMap {
 public:
  /// Rooted on the bud root_bud.
  static BlossomingMap validate(std::vector<Dart> alpha, std::vector<Dart> sigma,
                                std::vector<Flow> flow, Dart root_bud,
                                std::vector<int> labels = {});
  static BlossomingMap validate_corner(std::vector<Dart> alpha, std::vector<Dart> sigma,
                                       std::vector<Flow> flow, Dart root_corner,
                                       std::vector<int> labels = {});

  int n_darts() const noexcept { return static_cast<int>(alpha_.size()); }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Flow flow(Dart d) const { return flow_[d]; }
  /// Root bud, or -1 for a stemless map.
  Dart root() const noexcept { return root_; }
  Dart root_corner() const noexcept { return root_corner_; }
  const std::vector<Dart>& alpha_perm() const noexcept { return alpha_; }
  const std::vector<Dart>& sigma_perm() const noexcept { return sigma_; }
  const std::vector<Flow>& flows() const noexcept { return flow_; }
  /// Per-corner labels, empty when not computed.
  const std::vector<int>& labels() const noexcept { return labels_; }

  bool is_stem(Dart d) const { return alpha_[d] == d; }
  bool is_bud(Dart d) const { return is_stem(d) && flow_[d] == Flow::Out; }
  bool is_leaf(Dart d) const { return is_stem(d) && flow_[d] == Flow::In; }

  int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  int num_faces() const noexcept { return num_faces_; }
  int num_interior_edges() const noexcept { return n_interior_edges_; }
  int num_stems() const noexcept { return n_darts() - 2 * n_interior_edges_; }
  int num_leaves() const noexcept { return num_stems() / 2; }
  int genus() const noexcept { return genus_; }
  bool is_unicellular() const noexcept { return num_faces_ == 1; }
  int vertex_of(Dart d) const { return vertex_of_[d]; }
  const std::vector<std::vector<Dart>>& vertices() const noexcept { return vertices_; }
  int interior_degree(int v) const;

  /// Stems in tour order from the root corner (requires one face).
  std::vector<Dart> stem_tour() const;
  /// Every step of the tour from the root corner: the dart x = sigma(d) crossed from corner c(d).
  std::vector<Dart> dart_tour() const;

  BlossomingMap with_flows(std::vector<Flow> flow) const;
  BlossomingMap with_labels(std::vector<int> labels) const;
  BlossomingMap with_root(Dart root) const;

  bool operator==(const BlossomingMap& o) const {
    return alpha_ == o.alpha_ && sigma_ == o.sigma_ && flow_ == o.flow_ &&
           root_corner_ == o.root_corner_;
  }

 private:
  BlossomingMap() = default;

  std::vector<Dart> alpha_, sigma_, sigma_inv_;
  std::vector<Flow> flow_;
  std::vector<int> labels_;
  Dart root_ = -1, root_corner_ = 0;
  int num_faces_ = 0, n_interior_edges_ = 0, genus_ = 0;
  std::vector<int> vertex_of_;
  std::vector<std::vector<Dart>> vertices_;
};

/// Interior map with stems removed; nullopt when there is no interior edge.
/// The second component maps interior-map darts back to blossoming darts.
std::optional<std::pair<RotationMap, std::vector<Dart>>> interior_map(const BlossomingMap& b);

/// Canonical rooted encoding including stem and edge directions.
std::string blossoming_encoding(const BlossomingMap& b);
/// Same, but directions of interior edges are ignored (stem directions kept).
std::string blossoming_encoding_undirected(const BlossomingMap& b);

struct ContourWord {
  std::string letters;  // 'U' for a bud, 'D' for a leaf
  std::vector<int> heights() const;  // height after each letter
  bool is_dyck() const;
};

ContourWord contour_word(const BlossomingMap& b);

/// Closed map with the orientation recovered from the matching. Bi-oriented
/// edges of the blossoming map stay bi-oriented.
struct ClosedMap {
  RotationMap map;
  HalfOrientation orientation;
  Orientation full_orientation() const;
};

ClosedMap close(const BlossomingMap& b);
BlossomingMap open(const RotationMap& m, const Orientation& o);
BlossomingMap fractional_open(const RotationMap& m, const HalfOrientation& h);
/// Edges kept as interior edges by the opening walk; works on any half-orientation.
EdgeSet opening_kept_edges(const RotationMap& m, const HalfOrientation& h);

bool is_well_rooted(const BlossomingMap& b);
std::vector<Dart> rootable_stems(const BlossomingMap& b);
std::vector<Dart> well_rootable_stems(const BlossomingMap& b);

/// Every interior edge is first crossed backward (or is bi-oriented).
bool is_well_oriented(const BlossomingMap& b);
/// Same predicate evaluated on a counterclockwise tour.
bool is_well_oriented_reverse_tour(const BlossomingMap& b);
BlossomingMap well_orient(const BlossomingMap& b);

/// Labels around vertices step by +1 across Out darts, -1 across In darts and
/// 0 across Both darts; corners on the same side of an interior edge agree;
/// the root bud is surrounded by 0 then 1.
bool is_well_labeled(const BlossomingMap& b);
BlossomingMap compute_labels(const BlossomingMap& b);
/// Labels for any rotation system with flows, or nullopt if inconsistent.
/// base_corner gets label 0.
std::optional<std::vector<int>> corner_labels(const std::vector<Dart>& alpha,
                                              const std::vector<Dart>& sigma,
                                              const std::vector<Flow>& flow, Dart base_corner);

/// Well-rooted, well-labeled, well-oriented and unicellular.
bool in_class_O(const BlossomingMap& b);

struct Rerooted {
  BlossomingMap map;
  Dart marked;
};

/// Makes the marked stem (a leaf, or the root itself) the new root bud, then
/// re-orients and relabels. The old root becomes a leaf and is returned as
/// the marked stem, so applying reroot to the result undoes it.
Rerooted reroot(const BlossomingMap& b, Dart marked);

}  // namespace mapforge
