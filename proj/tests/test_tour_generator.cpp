#include <map>
#include <set>

#include "doctest.h"
#include "mapforge/oracle.hpp"
#include "mapforge/tour_generator.hpp"

using namespace mapforge;

TEST_CASE("class O matches rooted map counts") {
  const long planar[] = {2, 9, 54, 378};
  const long torus[] = {0, 1, 20, 307};
  for (int n = 1; n <= 4; ++n) {
    CHECK(count_tours(spec_O(0, n)) == planar[n - 1]);
    CHECK(count_tours(spec_O(1, n)) == torus[n - 1]);
  }
}

TEST_CASE("generated maps satisfy their class predicates") {
  for (int n = 1; n <= 4; ++n) {
    for (int g = 0; g <= 1; ++g) {
      std::set<std::string> codes;
      generate_tours(spec_O(g, n), [&](const BlossomingMap& b) {
        CHECK(in_class_O(b));
        CHECK(is_well_labeled(b));
        CHECK(b.genus() == g);
        CHECK(b.num_vertices() == n);
        for (const auto& v : b.vertices()) CHECK(v.size() == 4);
        codes.insert(blossoming_encoding(b));
      });
      CHECK(static_cast<long>(codes.size()) == count_tours(spec_O(g, n)));
    }
  }
  generate_tours(spec_P(1, 3), [&](const BlossomingMap& b) {
    CHECK(is_well_labeled(b));
    CHECK(is_well_oriented(b));
    for (int v = 0; v < b.num_vertices(); ++v) CHECK(b.interior_degree(v) >= 2);
  });
  generate_tours(spec_R(1, 3), [&](const BlossomingMap& b) {
    CHECK(b.interior_degree(b.vertex_of(b.root())) >= 3);
  });
}

TEST_CASE("parallel generation gives the same count") {
  CHECK(count_tours(spec_U(1, 3), 3) == count_tours(spec_U(1, 3), 1));
}
