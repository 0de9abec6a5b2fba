#include <set>

#include "doctest.h"
#include "mapforge/blossoming.hpp"
#include "mapforge/oracle.hpp"

using namespace mapforge;

namespace {

const std::vector<RotationMap>& small_maps() {
  static const auto maps = enumerate_maps_upto(4, 1);
  return maps;
}

std::vector<int> face_distances(const RotationMap& m) {
  auto dm = dual(m);
  auto dv = vertex_distances(dm);
  std::vector<int> out(m.num_faces());
  for (Dart d = 0; d < m.n_darts(); ++d) out[m.face_of(d)] = dv[dm.vertex_of(d)];
  return out;
}

// Single vertex: root bud then one leaf.
BlossomingMap bud_leaf() { return BlossomingMap::validate({0, 1}, {1, 0}, {Flow::Out, Flow::In}, 0); }

}  // namespace

TEST_CASE("contour words and closing hand cases") {
  auto b = bud_leaf();
  CHECK(contour_word(b).letters == "UD");
  CHECK(b.num_leaves() == 1);
  auto c = close(b);
  CHECK(c.map.num_edges() == 1);
  CHECK(c.map.num_vertices() == 1);

  // One vertex with stems in counterclockwise order 0..3: the tour meets them in sigma order.
  auto uudd = BlossomingMap::validate({0, 1, 2, 3}, {1, 2, 3, 0}, {Flow::Out, Flow::Out, Flow::In, Flow::In}, 0);
  CHECK(contour_word(uudd).letters == "UUDD");
  CHECK(is_well_rooted(uudd));
  auto cu = close(uudd);
  CHECK(cu.map.alpha(1) == 2);
  CHECK(cu.map.alpha(0) == 3);
  auto udud = BlossomingMap::validate({0, 1, 2, 3}, {1, 2, 3, 0}, {Flow::Out, Flow::In, Flow::Out, Flow::In}, 0);
  auto cd = close(udud);
  CHECK(cd.map.alpha(0) == 1);
  CHECK(cd.map.alpha(2) == 3);
  CHECK(is_well_rooted(udud));
  auto wr = well_rootable_stems(udud);
  CHECK(wr == std::vector<Dart>{0, 1});
  CHECK(rootable_stems(udud) == std::vector<Dart>{0, 1, 3});
  auto dudu = udud.with_flows({Flow::Out, Flow::In, Flow::In, Flow::Out});
  CHECK_THROWS_AS(close(BlossomingMap::validate({0, 1}, {1, 0}, {Flow::Out, Flow::Out}, 0)), Error);
  (void)dudu;
}

TEST_CASE("opening bicolorable maps and closing back") {
  int checked = 0;
  for (const auto& m : small_maps()) {
    if (!is_bicolorable(m)) continue;
    auto o = dual_geodesic_orientation(m);
    auto b = open(m, o);
    CHECK(b.root() == m.sigma(m.root()));
    CHECK(b.is_unicellular());
    CHECK(b.genus() == m.genus());
    CHECK(in_class_O(b));
    CHECK(is_well_labeled(b));
    CHECK(is_well_oriented(b));
    CHECK(is_well_oriented_reverse_tour(b));
    CHECK(b.num_interior_edges() == m.num_vertices() - 1 + 2 * m.genus());
    // labels are distances in the dual map
    auto fd = face_distances(m);
    for (Dart d = 0; d < m.n_darts(); ++d) CHECK(b.labels()[d] == fd[m.face_of(d)]);
    auto c = close(b);
    CHECK(c.map == m);
    CHECK(c.full_orientation() == o);
    // no clockwise non-root face after closing
    for (int f = 0; f < c.map.num_faces(); ++f)
      if (f != c.map.root_face()) CHECK_FALSE(is_clockwise_face(c.map, o, f));
    CHECK(fractional_open(m, dual_geodesic_half_orientation(m)) == b);
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("opening a map and its reflected dual gives complementary edge sets") {
  for (const auto& m : small_maps()) {
    if (!is_bicolorable(m)) continue;
    auto b = open(m, dual_geodesic_orientation(m));
    auto dm = dual(m);
    auto rd = reflect(dm);
    auto kept = opening_kept_edges(rd, to_half(geodesic_orientation(dm)));
    // dual edge through dart x crosses the primal edge of sigma(x)
    std::vector<int> count(m.num_edges(), 0);
    for (int e = 0; e < m.num_edges(); ++e) {
      if (!b.is_stem(m.edge_dart(e))) ++count[e];
      if (kept[e]) ++count[m.edge_of(m.sigma(rd.edge_dart(e)))];
    }
    for (int c : count) CHECK(c == 1);
  }
}

TEST_CASE("fractional opening inverts closing on all small maps") {
  for (const auto& m : small_maps()) {
    if (m.num_edges() > 3) continue;
    auto h = dual_geodesic_half_orientation(m);
    auto b = fractional_open(m, h);
    CHECK(b.is_unicellular());
    CHECK(is_well_rooted(b));
    CHECK(is_well_oriented(b));
    CHECK(!b.labels().empty());
    auto c = close(b);
    CHECK(c.map == m);
    CHECK(c.orientation == h);
  }
}

TEST_CASE("well orientation and labels") {
  for (const auto& m : small_maps()) {
    if (!is_bicolorable(m)) continue;
    auto b = open(m, dual_geodesic_orientation(m));
    CHECK(well_orient(b) == b);
    CHECK(well_orient(well_orient(b)) == well_orient(b));
  }
  // stemless maps: a labeling exists iff the orientation is bicolorable
  for (const auto& m : small_maps()) {
    if (m.num_edges() > 3) continue;
    for (const auto& o : all_orientations(m)) {
      std::vector<Flow> flow(m.n_darts(), Flow::Out);
      for (Dart h : o.head) flow[h] = Flow::In;
      std::vector<Dart> a(m.alpha_perm().begin(), m.alpha_perm().end());
      std::vector<Dart> s(m.sigma_perm().begin(), m.sigma_perm().end());
      CHECK(corner_labels(a, s, flow, m.root()).has_value() == is_bicolorable_orientation(m, o));
    }
  }
  auto b = bud_leaf();
  CHECK(compute_labels(b).labels() == std::vector<int>{1, 0});
  CHECK(is_well_labeled(compute_labels(b)));
  // flipping both stems of a two-stem vertex plus an edge breaks the labels
  auto m = RotationMap::validate({1, 0}, {0, 1}, 0);
  auto ob = open(radial(m), dual_geodesic_orientation(radial(m)));
  auto flows = ob.flows();
  for (Dart d = 0; d < ob.n_darts(); ++d)
    if (!ob.is_stem(d)) flows[d] = flows[d] == Flow::In ? Flow::Out : Flow::In;
  bool any_interior = ob.num_interior_edges() > 0;
  if (any_interior)
    CHECK_FALSE(corner_labels(ob.alpha_perm(), ob.sigma_perm(), flows, ob.sigma_inv(ob.root())).has_value());
}

TEST_CASE("rerooting") {
  for (const auto& m : small_maps()) {
    if (!is_bicolorable(m)) continue;
    auto b = open(m, dual_geodesic_orientation(m));
    CHECK(reroot(b, b.root()).map == b);
    auto before = contour_word(b).letters;
    for (Dart s : rootable_stems(b)) {
      if (s == b.root()) continue;
      auto r = reroot(b, s);
      CHECK(r.map.root() == s);
      CHECK(is_well_labeled(r.map));
      CHECK(is_well_oriented(r.map));
      CHECK(blossoming_encoding_undirected(r.map.with_root(r.map.root())) != "");
      auto wr = well_rootable_stems(r.map);
      CHECK(std::find(wr.begin(), wr.end(), r.marked) != wr.end());
      // contour word of the result is a rotation of the original (with root swap)
      auto after = contour_word(r.map).letters;
      CHECK(after.size() == before.size());
      auto back = reroot(r.map, r.marked);
      CHECK(back.map == b);
      CHECK(back.marked == s);
    }
    CHECK(well_rootable_stems(b).size() == 2);
  }
}
