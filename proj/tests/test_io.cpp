#include "doctest.h"
#include "mapforge/error.hpp"
#include "mapforge/io.hpp"
#include "mapforge/oracle.hpp"
#include "mapforge/tour_generator.hpp"

using namespace mapforge;

TEST_CASE("map JSON round trip") {
  for (const auto& m : enumerate_maps_upto(3, 1)) {
    const Json j = map_to_json(m);
    CHECK(map_from_json(j) == m);
    CHECK(map_to_json(map_from_json(Json::parse(j.dump()))) == j);
  }
}

TEST_CASE("torus map from text") {
  const auto j = Json::parse(R"({"n_darts": 4, "alpha": [2, 1, 4, 3], "sigma": [3, 4, 2, 1], "root": 1})");
  const RotationMap m = map_from_json(j);
  CHECK(m.genus() == 1);
  CHECK(m.num_vertices() == 1);
  CHECK(m.num_faces() == 1);
}

TEST_CASE("bad map JSON is rejected") {
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"n_darts": 2, "alpha": [1, 2], "sigma": [1, 2], "root": 1})")), Error);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"n_darts": 2, "alpha": [2, 1], "root": 1})")), Error);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"n_darts": 4, "alpha": [2, 1], "sigma": [1, 2], "root": 1})")), Error);
}

TEST_CASE("orientation JSON round trip") {
  for (const auto& m : enumerate_maps_upto(2, 1)) {
    for (const auto& o : all_orientations(m)) {
      CHECK(orientation_from_json(m, orientation_to_json(m, o)) == o);
      HalfOrientation h = to_half(o);
      h.head[0] = kBioriented;
      CHECK(half_orientation_from_json(m, half_orientation_to_json(m, h)) == h);
    }
  }
}

TEST_CASE("blossoming JSON round trip") {
  for (int genus = 0; genus <= 1; ++genus)
    for (int n = 1; n <= 3; ++n)
      generate_tours(spec_O(genus, n), [](const BlossomingMap& b) {
        const Json j = blossoming_to_json(b);
        const BlossomingMap back = blossoming_from_json(Json::parse(j.dump()));
        CHECK(blossoming_encoding(back) == blossoming_encoding(b));
        CHECK(back.labels().size() == b.labels().size());
        CHECK(blossoming_to_json(back) == j);
      });
}

TEST_CASE("big integers become strings") {
  CHECK(bigint_to_json(BigInt(12)) == Json(12));
  const BigInt big = BigInt(1) << 80;
  CHECK(bigint_to_json(big).is_string());
}

TEST_CASE("corner-rooted blossoming maps round trip") {
  for (const auto& m : enumerate_maps_upto(3, 1)) {
    const BlossomingMap b = fractional_open(m, dual_geodesic_half_orientation(m));
    const Json j = blossoming_to_json(b);
    const BlossomingMap back = blossoming_from_json(Json::parse(j.dump()));
    CHECK(blossoming_encoding(back) == blossoming_encoding(b));
    CHECK(blossoming_to_json(back) == j);
    CHECK(canonical_encoding(close(back).map) == canonical_encoding(m));
  }
}
