#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "mapforge/oracle.hpp"
#include "mapforge/orientation.hpp"

using namespace mapforge;

namespace {

RotationMap path2() { return RotationMap::validate({1, 0, 3, 2}, {0, 2, 1, 3}, 0); }
RotationMap square() {
  return RotationMap::validate({1, 0, 3, 2, 5, 4, 7, 6}, {7, 2, 1, 4, 3, 6, 5, 0}, 0);
}
RotationMap triangle() { return RotationMap::validate({1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}, 0); }

const std::vector<RotationMap>& small_maps() {
  static const auto maps = enumerate_maps_upto(4, 4);
  return maps;
}

bool no_clockwise_nonroot(const RotationMap& m, const Orientation& o) {
  for (int f = 0; f < m.num_faces(); ++f)
    if (f != m.root_face() && is_clockwise_face(m, o, f)) return false;
  return true;
}

}  // namespace

TEST_CASE("geodesic orientation hand cases") {
  auto p = path2();
  auto o = geodesic_orientation(p);
  CHECK(o.head == std::vector<Dart>{0, 2});
  auto sq = square();
  CHECK(geodesic_orientation(sq).head == std::vector<Dart>{0, 2, 5, 7});
  CHECK(is_bipartite_orientation(sq, geodesic_orientation(sq)));
  CHECK_FALSE(is_bipartite_orientation(sq, Orientation{{1, 3, 5, 7}}));
  CHECK(is_bipartite_orientation(sq, Orientation{{0, 3, 4, 7}}));
  CHECK_THROWS_AS(geodesic_orientation(triangle()), Error);
}

TEST_CASE("geodesic orientation is the unique bipartite orientation with only the root as sink") {
  for (const auto& m : small_maps()) {
    if (!is_bipartite(m)) continue;
    auto g = geodesic_orientation(m);
    CHECK(is_bipartite_orientation(m, g));
    int matches = 0;
    for (const auto& o : all_orientations(m)) {
      if (!is_bipartite_orientation(m, o)) continue;
      bool only_root = is_sink(m, o, m.root_vertex());
      for (int v = 0; v < m.num_vertices(); ++v)
        if (v != m.root_vertex() && is_sink(m, o, v)) only_root = false;
      if (only_root) {
        ++matches;
        CHECK(o == g);
      }
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("dual-geodesic orientation") {
  auto t = triangle();
  auto o = dual_geodesic_orientation(t);
  CHECK(is_bicolorable_orientation(t, o));
  int other = 1 - t.root_face();
  CHECK(is_counterclockwise_face(t, o, other));
  CHECK(is_clockwise_face(t, o, t.root_face()));
  for (const auto& m : small_maps()) {
    if (!is_bicolorable(m)) continue;
    auto dg = dual_geodesic_orientation(m);
    CHECK(is_bicolorable_orientation(m, dg));
    CHECK(no_clockwise_nonroot(m, dg));
    CHECK(is_bicolorable_orientation(m, reverse_all(dg, m)));
  }
  auto r = radial(RotationMap::validate({1, 0}, {0, 1}, 0));
  auto ro = dual_geodesic_orientation(r);
  int in = 0;
  for (Dart d = 0; d < r.n_darts(); ++d) in += is_head(ro, r, d);
  CHECK(in == 2);
}

TEST_CASE("Eulerian but not bicolorable orientation exists in genus 1") {
  bool found = false;
  for (const auto& m : small_maps()) {
    if (m.genus() != 1 || found) continue;
    for (const auto& o : all_orientations(m)) {
      bool euler = true;
      for (int v = 0; v < m.num_vertices(); ++v) {
        int in = 0;
        for (Dart d : m.vertices()[v]) in += is_head(o, m, d);
        euler = euler && 2 * in == static_cast<int>(m.vertices()[v].size());
      }
      if (euler && !is_bicolorable_orientation(m, o)) {
        found = true;
        break;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("flips, pushes, and the lattice minimum") {
  auto t = triangle();
  auto o = dual_geodesic_orientation(t);
  int other = 1 - t.root_face();
  auto cw = face_unflip(t, o, other);
  CHECK(is_clockwise_face(t, cw, other));
  auto back = face_flip(t, cw, other);
  CHECK(back == o);
  CHECK(is_counterclockwise_face(t, back, other));
  for (int e = 0; e < 3; ++e) CHECK(cw.head[e] == t.alpha(o.head[e]));
  CHECK_THROWS_AS(face_flip(t, o, other), Error);
  CHECK_THROWS_AS(face_flip(t, cw, t.root_face()), Error);

  for (const auto& m : small_maps()) {
    if (!is_bicolorable(m)) continue;
    auto dg = dual_geodesic_orientation(m);
    CHECK(minimize_by_flips(m, dg) == dg);
    int minima = 0;
    std::map<std::vector<Dart>, int> depth;  // flip distance to the minimum
    std::function<int(const Orientation&)> distances = [&](const Orientation& x) -> int {
      auto it = depth.find(x.head);
      if (it != depth.end()) return it->second;
      int d = -1;
      bool consistent = true;
      for (int f = 0; f < m.num_faces(); ++f) {
        if (f == m.root_face() || !is_clockwise_face(m, x, f)) continue;
        int sub = distances(face_flip(m, x, f)) + 1;
        if (d == -1) d = sub;
        consistent = consistent && sub == d;
      }
      CHECK(consistent);
      if (d == -1) d = 0;
      depth[x.head] = d;
      return d;
    };
    for (const auto& x : all_orientations(m)) {
      if (!is_bicolorable_orientation(m, x)) continue;
      if (no_clockwise_nonroot(m, x)) {
        ++minima;
        CHECK(x == dg);
      }
      int flips = 0;
      CHECK(minimize_by_flips(m, x, &flips) == dg);
      CHECK(flips == distances(x));
      for (int f = 0; f < m.num_faces(); ++f)
        if (f != m.root_face() && is_clockwise_face(m, x, f))
          CHECK(is_bicolorable_orientation(m, face_flip(m, x, f)));
    }
    CHECK(minima == 1);
  }
}

TEST_CASE("vertex push and face flip correspond under duality") {
  for (const auto& m : small_maps()) {
    if (m.num_edges() > 3 || !is_bicolorable(m)) continue;
    auto dm = dual(m);
    for (const auto& o : all_orientations(m)) {
      auto t = reverse_all(dual_orientation(m, o), dm);
      for (int f = 0; f < m.num_faces(); ++f) {
        int v = dm.vertex_of(m.faces()[f][0]);
        bool flippable = f != m.root_face() && is_clockwise_face(m, o, f);
        bool pushable = v != dm.root_vertex() && is_sink(dm, t, v);
        CHECK(flippable == pushable);
        if (flippable)
          CHECK(reverse_all(dual_orientation(m, face_flip(m, o, f)), dm) == vertex_push(dm, t, v));
      }
    }
  }
}

TEST_CASE("doubling") {
  auto edge = RotationMap::validate({1, 0}, {0, 1}, 0);
  auto loop = RotationMap::validate({1, 0}, {1, 0}, 0);
  auto ef = double_faces(edge);
  CHECK(ef.num_vertices() == 2);
  CHECK(ef.num_edges() == 2);
  CHECK(ef.num_faces() == 2);
  auto lv = double_vertices(loop);
  CHECK(lv.num_vertices() == 2);
  CHECK(lv.num_edges() == 2);
  CHECK(lv.num_faces() == 2);
  for (const auto& m : small_maps()) {
    if (m.num_edges() > 3) continue;
    auto mf = double_faces(m);
    auto mv = double_vertices(m);
    CHECK(mf.num_edges() == 2 * m.num_edges());
    CHECK(mf.num_faces() == m.num_faces() + m.num_edges());
    CHECK(mf.genus() == m.genus());
    CHECK(is_bicolorable(mf).has_value());
    CHECK(is_bipartite(mv).has_value());
    CHECK(canonical_encoding(dual(mf)) == canonical_encoding(double_vertices(dual(m))));
  }
}

TEST_CASE("half orientations") {
  auto t = triangle();
  auto h = geodesic_half_orientation(t);
  // root vertex holds darts 0 and 5
  CHECK(h.head == std::vector<Dart>{0, kBioriented, 5});
  for (const auto& m : small_maps()) {
    if (m.num_edges() > 3) continue;
    auto gh = geodesic_half_orientation(m);
    if (is_bipartite(m)) CHECK(gh == to_half(geodesic_orientation(m)));
    auto dh = dual_geodesic_half_orientation(m);
    for (int f = 0; f < m.num_faces(); ++f)
      if (f != m.root_face()) CHECK_FALSE(is_clockwise_face_half(m, dh, f));
    if (is_bicolorable(m)) CHECK(dh == to_half(dual_geodesic_orientation(m)));
  }
}
