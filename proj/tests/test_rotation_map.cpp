#include <set>

#include "doctest.h"
#include "mapforge/oracle.hpp"
#include "mapforge/rotation_map.hpp"

using namespace mapforge;

namespace {

// Cycle notation with 1-based darts, as written in the examples.
std::vector<Dart> perm(int n, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<Dart> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (auto c : cycles) {
    std::vector<int> v(c);
    for (std::size_t i = 0; i < v.size(); ++i) p[v[i] - 1] = v[(i + 1) % v.size()] - 1;
  }
  return p;
}

RotationMap torus() { return RotationMap::validate(perm(4, {{1, 3}, {2, 4}}), perm(4, {{1, 2, 3, 4}}), 0); }
RotationMap single_edge() { return RotationMap::validate(perm(2, {{1, 2}}), perm(2, {}), 0); }
RotationMap single_loop() { return RotationMap::validate(perm(2, {{1, 2}}), perm(2, {{1, 2}}), 0); }
RotationMap sphere_triangle() {
  // vertices (1 6)(2 3)(4 5), edges (1 2)(3 4)(5 6)
  return RotationMap::validate(perm(6, {{1, 2}, {3, 4}, {5, 6}}), perm(6, {{1, 6}, {2, 3}, {4, 5}}), 0);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("validate torus and errors") {
  auto m = torus();
  CHECK(m.num_vertices() == 1);
  CHECK(m.num_edges() == 2);
  CHECK(m.num_faces() == 1);
  CHECK(genus(m) == 1);
  CHECK(code_of([] { RotationMap::validate(perm(2, {}), perm(2, {}), 0); }) == ErrorCode::FixedPointInAlpha);
  CHECK(code_of([] { RotationMap::validate(perm(4, {{1, 2}, {3, 4}}), perm(4, {{1, 2}, {3, 4}}), 0); }) ==
        ErrorCode::Disconnected);
  CHECK(code_of([] { RotationMap::validate({1, 2, 0, 3}, perm(4, {}), 0); }) == ErrorCode::NotInvolution);
  CHECK(code_of([] { RotationMap::validate({1, 0}, {0, 0}, 0); }) == ErrorCode::NotPermutation);
  CHECK(code_of([] { RotationMap::validate({1, 0}, {0, 1}, 5); }) == ErrorCode::RootOutOfRange);
}

TEST_CASE("genus examples") {
  CHECK(genus(single_edge()) == 0);
  auto nested = RotationMap::validate(perm(4, {{1, 2}, {3, 4}}), perm(4, {{1, 2, 3, 4}}), 0);
  CHECK(nested.num_faces() == 3);
  CHECK(genus(nested) == 0);
}

TEST_CASE("degree profile sums") {
  for (const auto& m : enumerate_maps_upto(3, 5)) {
    auto p = m.degree_profile();
    int sv = 0, sf = 0;
    for (std::size_t k = 0; k < p.vertex_degrees.size(); ++k) sv += static_cast<int>(k) * p.vertex_degrees[k];
    for (std::size_t k = 0; k < p.face_degrees.size(); ++k) sf += static_cast<int>(k) * p.face_degrees[k];
    CHECK(sv == 2 * p.edges);
    CHECK(sf == 2 * p.edges);
  }
}

TEST_CASE("dual") {
  auto d = dual(single_edge());
  CHECK(d.num_vertices() == 1);
  CHECK(d.num_edges() == 1);
  CHECK(d.num_faces() == 2);
  CHECK(genus(dual(torus())) == 1);
  for (const auto& m : enumerate_maps_upto(3, 5)) {
    auto dm = dual(m);
    CHECK(dm.num_vertices() == m.num_faces());
    CHECK(dm.genus() == m.genus());
    CHECK(dual(dm) == m);
    CHECK(canonical_encoding(dual(dm)) == canonical_encoding(m));
  }
}

TEST_CASE("radial") {
  auto r = radial(single_edge());
  CHECK(r.num_vertices() == 1);
  CHECK(r.num_edges() == 2);
  CHECK(r.genus() == 0);
  auto rt = radial(torus());
  CHECK(rt.genus() == 1);
  CHECK(rt.num_vertices() == 2);
  CHECK(rt.num_edges() == 4);
  for (int e = 1; e <= 5; ++e) {
    for (const auto& m : enumerate_rooted_maps(std::nullopt, e)) {
      auto rm = radial(m);
      CHECK(rm.num_vertices() == m.num_edges());
      for (const auto& v : rm.vertices()) CHECK(v.size() == 4);
      CHECK(rm.genus() == m.genus());
      CHECK(is_bicolorable(rm).has_value());
    }
  }
}

TEST_CASE("radial is a bijection onto 4-valent bicolorable maps") {
  for (int g = 0; g <= 1; ++g) {
    for (int n = 1; n <= 4; ++n) {
      auto maps = enumerate_rooted_maps(g, n);
      std::set<std::string> images;
      for (const auto& m : maps) images.insert(canonical_encoding(radial(m)));
      CHECK(images.size() == maps.size());
      auto bc = enumerate_bc4valent(g, n);
      std::set<std::string> bc_codes;
      for (const auto& b : bc) bc_codes.insert(canonical_encoding(b));
      CHECK(bc_codes == images);
    }
  }
}

TEST_CASE("bicolorable and bipartite") {
  CHECK(is_bicolorable(sphere_triangle()).has_value());
  CHECK_FALSE(is_bipartite(sphere_triangle()).has_value());
  CHECK_FALSE(is_bicolorable(torus()).has_value());
  bool found_even_not_bicolorable = false;
  for (int e = 1; e <= 5; ++e) {
    for (const auto& m : enumerate_rooted_maps(std::nullopt, e)) {
      CHECK(is_bipartite(m).has_value() == is_bicolorable(dual(m)).has_value());
      if (auto c = is_bipartite(m)) {
        for (Dart d = 0; d < m.n_darts(); ++d) CHECK(m.vertex_of(d) != m.vertex_of(m.alpha(d)));
      }
      if (is_bicolorable(m)) {
        for (const auto& v : m.vertices()) CHECK(v.size() % 2 == 0);
      } else if (e <= 4 && m.genus() == 1) {
        bool even = true;
        for (const auto& v : m.vertices()) even = even && v.size() % 2 == 0;
        found_even_not_bicolorable = found_even_not_bicolorable || even;
      }
    }
  }
  CHECK(found_even_not_bicolorable);
}

TEST_CASE("corner navigation") {
  auto m = single_edge();
  auto c = m.corner(0).next_face;
  CHECK(m.corner(c).next_face == 0);
  CHECK(m.corner(0).next_vertex == 0);
  for (const auto& mm : enumerate_maps_upto(3, 5)) {
    std::vector<int> in(mm.n_darts(), 0), out(mm.n_darts(), 0);
    for (Dart d = 0; d < mm.n_darts(); ++d) {
      auto nav = mm.corner(d);
      CHECK(mm.corner(nav.next_face).prev_face == d);
      CHECK(mm.corner(nav.next_vertex).prev_vertex == d);
      Dart e = mm.edge_dart(nav.next_edge);
      std::set<int> ends{mm.vertex_of(e), mm.vertex_of(mm.alpha(e))};
      CHECK(ends == std::set<int>{mm.vertex_of(d), mm.vertex_of(nav.next_face)});
      // corner map: arcs c -> nextF(c) and c -> nextV(c)
      ++out[d];
      ++out[d];
      ++in[nav.next_face];
      ++in[nav.next_vertex];
    }
    for (Dart d = 0; d < mm.n_darts(); ++d) CHECK(in[d] == 2);
  }
}

TEST_CASE("reflect") {
  CHECK(reflect(torus()).genus() == 1);
  CHECK(reflect(sphere_triangle()).genus() == 0);
  for (const auto& m : enumerate_maps_upto(3, 5)) CHECK(reflect(reflect(m)) == m);
}

TEST_CASE("complement submap") {
  auto m = torus();
  EdgeSet none(2, false), all(2, true), one{true, false};
  CHECK(complement_submap(none, m) == all);
  CHECK(complement_submap(all, m) == none);
  auto c = complement_submap(one, m);
  CHECK(std::count(one.begin(), one.end(), true) + std::count(c.begin(), c.end(), true) == m.num_edges());
  CHECK(complement_submap(c, m) == one);
}

TEST_CASE("canonical encoding") {
  auto m = sphere_triangle();
  std::vector<int> p{3, 5, 0, 2, 4, 1};
  CHECK(canonical_encoding(relabel(m, p)) == canonical_encoding(m));
  CHECK(canonical_encoding(single_edge()) != canonical_encoding(single_loop()));
  CHECK(enumerate_rooted_maps(std::nullopt, 1).size() == 2);
  CHECK(enumerate_rooted_maps(std::nullopt, 2).size() == 10);
}

TEST_CASE("rooted map counts") {
  const int planar[] = {2, 9, 54, 378};
  for (int n = 1; n <= 4; ++n) CHECK(enumerate_rooted_maps(0, n).size() == static_cast<std::size_t>(planar[n - 1]));
  const int torus_counts[] = {0, 1, 20, 307};
  for (int n = 1; n <= 4; ++n) CHECK(enumerate_rooted_maps(1, n).size() == static_cast<std::size_t>(torus_counts[n - 1]));
}
