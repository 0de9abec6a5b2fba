#include <map>
#include <set>

#include "doctest.h"
#include "mapforge/error.hpp"
#include "mapforge/oracle.hpp"
#include "mapforge/scheme.hpp"
#include "mapforge/tour_generator.hpp"

using namespace mapforge;

namespace {

std::vector<BlossomingMap> collect(const TourSpec& spec) {
  std::vector<BlossomingMap> out;
  generate_tours(spec, [&](const BlossomingMap& b) { out.push_back(b); });
  return out;
}

}  // namespace

TEST_CASE("pruning keeps genus and the degree budget") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& u : collect(spec_U(1, n))) {
      const PrunedMap p = prune(u);
      CHECK(is_pruned(p.map));
      CHECK(p.map.genus() == 1);
      CHECK(p.v3 + 2 * p.v4 == 2);
      CHECK(static_cast<int>(rootable_scheme_stems(p.map).size()) == 2 - p.v4);
      CHECK(is_well_labeled(p.map));
      const ExtendedScheme ex = extended_scheme(u);
      CHECK(ex.map.genus() == 1);
    }
  }
}

TEST_CASE("genus zero has no scheme") {
  const auto planar = collect(spec_U(0, 2));
  REQUIRE(!planar.empty());
  CHECK_THROWS_AS(extended_scheme(planar[0]), Error);
}

TEST_CASE("pruned maps counted through the pruning are the P maps") {
  // every U map prunes to a P map; the number of U maps with n leaves
  // is the coefficient of T'(z) P(T(z)), checked here by counting preimages.
  std::map<std::string, long> preimages;
  for (int n = 1; n <= 4; ++n)
    for (const auto& u : collect(spec_U(1, n))) ++preimages[blossoming_encoding(prune(u).map)];
  long p_total = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : collect(spec_P(1, n))) p_total += preimages.count(blossoming_encoding(p)) ? 1 : 0;
  CHECK(p_total == static_cast<long>(preimages.size()));
}

TEST_CASE("merge and expand are inverse on R maps") {
  for (int genus = 1; genus <= 2; ++genus) {
    const int max_n = genus == 1 ? 4 : 2;
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& r : collect(spec_R(genus, n))) {
        const BlossomingMap labeled = compute_labels(r);
        const MergedScheme ms = merge_branches(labeled);
        CHECK(ms.scheme.map.genus() == genus);
        CHECK(scheme_v4(ms.scheme.map) <= 2 * genus - 2);
        for (const auto& br : ms.branches)
          CHECK(br.path.end - br.path.start == br.path.delta());
        const BlossomingMap back = expand_branches(ms);
        CHECK(blossoming_encoding(back) == blossoming_encoding(labeled));
        CHECK_NOTHROW(offset_graph(ms.scheme.map));
      }
    }
  }
}

TEST_CASE("offset labels depend only on the flows") {
  for (const auto& s : enumerate_rooted_schemes(1)) {
    const auto off = offset_labels(s);
    for (const auto& cyc : s.vertices()) {
      int lo = 9, hi = -9;
      for (Dart d : cyc) {
        lo = std::min(lo, off[d]);
        hi = std::max(hi, off[d]);
      }
      CHECK(lo == 0);
      CHECK(hi <= 2);
    }
  }
}

TEST_CASE("scheme census sizes") {
  const auto g1 = enumerate_rooted_schemes(1);
  CHECK(g1.size() == 3);
  for (const auto& s : g1) {
    CHECK(s.genus() == 1);
    CHECK(s.is_unicellular());
    CHECK(is_scheme_rooted(s));
  }
  CHECK(group_by_unrooted(g1).size() >= 1);
}

TEST_CASE("r_b_s is symmetric and matches the height sum") {
  for (const auto& s : enumerate_rooted_schemes(1)) {
    const OffsetGraph g = offset_graph(s);
    const LaurentRational f = r_b_s(g);
    CHECK(is_symmetric(f));
    const int order = 10;
    CHECK(expand_in_D(f, order) == r_b_s_by_heights(g, order));
  }
}

TEST_CASE("graph key ignores vertex names") {
  OffsetGraph a, b;
  a.n_vertices = b.n_vertices = 2;
  a.edges = {{0, 1}, {0, 1}, {0, 0}};
  a.arcs = {{0, 1}};
  b.edges = {{1, 0}, {1, 1}, {0, 1}};
  b.arcs = {{1, 0}};
  CHECK(graph_key(a) == graph_key(b));
  b.arcs = {{0, 1}};
  CHECK(graph_key(a) != graph_key(b));
}

TEST_CASE("scheme-rooted maps counted by the scheme series") {
  // [z^n] of sum over rooted schemes of z^(v3 / 2) R^b_s equals the number of R maps with n leaves.
  const auto census = enumerate_rooted_schemes(1);
  LaurentRational total;
  for (const auto& s : census) {
    const int v3 = s.num_vertices() - scheme_v4(s);
    total = total + pow(z_in_D(), v3 / 2) * r_b_s(s);
  }
  const int order = 4;
  const TruncatedSeries series = expand_in_z(total, order);
  for (int n = 1; n <= order; ++n) CHECK(series[n] == count_tours(spec_R(1, n)));
}

TEST_CASE("genus one generating function") {
  const MgResult res = assemble_Mg(1, 6);
  const std::vector<BigInt> want{0, 0, 1, 20, 307, 4280, 56914};
  REQUIRE(res.coefficients.size() == want.size());
  for (std::size_t n = 0; n < want.size(); ++n) CHECK(res.coefficients[n] == want[n]);
  CHECK(res.n_rooted_schemes == 3);
}

TEST_CASE("rerooting on scheme stems") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& u : collect(spec_U(1, n))) {
      const PrunedMap p = prune(u);
      for (Dart s : rootable_scheme_stems(p.map)) {
        const Rerooted rr = reroot_on_scheme(p.map, s);
        CHECK(is_scheme_rooted(rr.map));
        CHECK(is_well_labeled(rr.map));
      }
      for (Dart d = 0; d < p.map.n_darts(); ++d) {
        if (p.map.is_bud(d) && d != p.map.root()) CHECK_THROWS_AS(reroot_on_scheme(p.map, d), Error);
      }
    }
  }
}

TEST_CASE("r_b_s matches the height sum on sampled genus-two schemes") {
  const auto census = enumerate_rooted_schemes(2);
  CHECK(census.size() == 21060);
  std::map<int, int> by_v4;
  for (const auto& s : census) ++by_v4[scheme_v4(s)];
  CHECK(by_v4[0] == 17010);
  CHECK(by_v4[1] == 3888);
  CHECK(by_v4[2] == 162);
  for (std::size_t i = 0; i < census.size(); i += 1500) {
    const OffsetGraph g = offset_graph(census[i]);
    const LaurentRational f = r_b_s(g);
    CHECK(is_symmetric(f));
    CHECK(expand_in_D(f, 5) == r_b_s_by_heights(g, 5));
  }
}
