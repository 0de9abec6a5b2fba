#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mapforge/blossoming.hpp"
#include "mapforge/rotation_map.hpp"
#include "mapforge/series.hpp"

namespace mapforge {

/// Core of the interior map after repeatedly deleting interior-degree-1
/// vertices. back[i] is the dart of u carried by dart i of the map.
struct ExtendedScheme {
  RotationMap map;
  std::vector<Dart> back;
};

ExtendedScheme extended_scheme(const BlossomingMap& u);

/// Blossoming map whose treelike parts were each replaced by one stem.
struct PrunedMap {
  BlossomingMap map;
  int v2 = 0, v3 = 0, v4 = 0;  // vertices of interior degree 2, 3, 4
};

PrunedMap prune(const BlossomingMap& u);
/// True when every vertex has interior degree at least 2.
bool is_pruned(const BlossomingMap& b);
/// Root vertex has interior degree at least 3.
bool is_scheme_rooted(const BlossomingMap& b);
/// Root bud and leaves sitting on vertices of interior degree >= 3.
std::vector<Dart> rootable_scheme_stems(const BlossomingMap& b);
/// Reroots a pruned map on a rootable scheme stem.
Rerooted reroot_on_scheme(const BlossomingMap& p, Dart marked);

/// Degree-2 vertex types along a branch. A vertex is crossed from its
/// incoming dart y to its outgoing dart z; "side A" holds the stems met
/// turning from y to z in rotation order.
///   Up   : A = [bud]          Down : A = [leaf]
///   H1   : A = [bud, leaf]    H2   : A = [leaf, bud]
///   H3   : A = [], then [bud, leaf] after z
///   H4   : A = [], then [leaf, bud] after z
enum class Step : std::int8_t { Up, Down, H1, H2, H3, H4 };

struct MotzkinPath {
  std::vector<Step> steps;
  int start = 0, end = 0;  // side-A labels at the two scheme ends
  int delta() const;
};

/// Scheme (interior degrees 3 and 4) with the labels of its corners taken
/// from the map it came from. Labels agree around vertices but not
/// necessarily along edges.
struct LabeledScheme {
  BlossomingMap map;            // unlabeled scheme, rooted on its root bud
  std::vector<int> labels;      // corner c(d) for each dart d of map
  std::vector<int> vertex_min;  // per vertex of map
  std::vector<int> offsets;     // labels minus the vertex minimum
};

struct Branch {
  Dart tail;  // scheme dart at the tail end
  Dart head;  // scheme dart at the head end
  MotzkinPath path;
};

struct MergedScheme {
  LabeledScheme scheme;
  std::vector<Branch> branches;  // one per scheme edge, by tail dart
};

MergedScheme merge_branches(const BlossomingMap& r);
/// Inverse of merge_branches: expands each scheme edge into its branch.
BlossomingMap expand_branches(const MergedScheme& m);

/// Offset labels of each corner, computed from flows alone (0101 or 0121 per vertex).
std::vector<int> offset_labels(const BlossomingMap& scheme);

struct OffsetGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // every scheme edge, vertex pairs (loops included)
  std::vector<std::pair<int, int>> arcs;   // offset edges u -> v, offset toward v
  std::vector<int> order;                  // a topological order of the vertices
  std::vector<int> rank;                   // rank[v] = position of v in order
};

/// Throws CycleDetected when the offset edges contain a directed cycle.
OffsetGraph offset_graph(const BlossomingMap& scheme);

/// Rooted unlabeled schemes of genus g, sorted by encoding.
std::vector<BlossomingMap> enumerate_rooted_schemes(int genus, int jobs = 1);
/// Undirected map plus the set of rootable stems, independent of the root.
std::string unrooted_key(const BlossomingMap& b);
/// Groups of indices into `schemes`, one group per unrooted scheme.
std::vector<std::vector<int>> group_by_unrooted(const std::vector<BlossomingMap>& schemes);
/// Number of degree-4 vertices.
int scheme_v4(const BlossomingMap& scheme);

/// Branch-leaf series of scheme-rooted maps with this unlabeled scheme:
/// B^n_e * sum over surjections o of prod Phi_o(i) * D^(n_t + n_a - n_i).
LaurentRational r_b_s(const BlossomingMap& scheme);
LaurentRational r_b_s(const OffsetGraph& g);
/// Same series in D by direct summation over vertex heights (min height 0),
/// truncated after D^order. Independent of the surjection formula.
TruncatedSeries r_b_s_by_heights(const OffsetGraph& g, int order);
/// Isomorphism-invariant key of (edges, arcs); r_b_s depends only on it.
std::string graph_key(const OffsetGraph& g);

struct SchemeTerm {
  int index;  // into the census
  int v4;
  LaurentRational rbs;
};

struct MgResult {
  int genus = 0;
  int order = 0;
  std::vector<BigInt> coefficients;  // [t^0 .. t^order]
  RationalZ in_T;                    // M_g as a rational function of T
  int n_rooted_schemes = 0;
  int n_unrooted_schemes = 0;
  int n_graph_classes = 0;
};

/// M_g(t) = sum over rooted schemes s of 2 t^(2g-2) / (2g - v4(s)) * T * T^(2g - v4(s) - 1) * R^b_s(T).
MgResult assemble_Mg(int genus, int order, int jobs = 1);

}  // namespace mapforge
