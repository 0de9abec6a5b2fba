#include "mapforge/verify.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <set>

#include "mapforge/blossoming.hpp"
#include "mapforge/error.hpp"
#include "mapforge/oracle.hpp"
#include "mapforge/orientation.hpp"
#include "mapforge/parallel.hpp"
#include "mapforge/scheme.hpp"
#include "mapforge/surjection.hpp"
#include "mapforge/tour_generator.hpp"

namespace mapforge {

namespace {

std::string enc(const RotationMap& m) { return canonical_encoding(m); }

// Runs body over n items on `jobs` threads; body returns an empty string on success.
void for_each_item(CheckResult& r, int n, int jobs, const std::function<std::string(int)>& body) {
  std::vector<std::string> out(n);
  parallel_tasks(n, jobs, [&](int i) {
    try {
      out[i] = body(i);
    } catch (const std::exception& e) {
      out[i] = std::string("exception: ") + e.what();
    }
  });
  for (const auto& s : out) {
    ++r.items;
    if (!s.empty()) r.fail(s);
  }
}

std::vector<BlossomingMap> collect(const TourSpec& spec, int jobs) {
  std::vector<BlossomingMap> out;
  std::mutex mu;
  generate_tours(
      spec,
      [&](const BlossomingMap& b) {
        std::lock_guard<std::mutex> lock(mu);
        out.push_back(b);
      },
      jobs);
  std::sort(out.begin(), out.end(),
            [](const BlossomingMap& a, const BlossomingMap& b) { return blossoming_encoding(a) < blossoming_encoding(b); });
  return out;
}

bool no_clockwise_nonroot(const RotationMap& m, const Orientation& o) {
  for (int f = 0; f < m.num_faces(); ++f)
    if (f != m.root_face() && is_clockwise_face(m, o, f)) return false;
  return true;
}

std::string big_str(const BigInt& x) { return x.str(); }

}  // namespace

Json to_json(const CheckResult& r) {
  return Json{{"id", r.id},       {"title", r.title},     {"ok", r.ok},
              {"items", r.items}, {"failures", r.failures}, {"detail", r.detail},
              {"seconds", r.seconds}, {"data", r.data}};
}

CheckResult timed(const std::string& id, const std::function<CheckResult()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.id = id;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckResult check_bijection(int max_genus, int max_edges, int jobs) {
  CheckResult r;
  r.title = "close(open(m)) = m and open(close(b)) = b";
  std::vector<RotationMap> maps;
  for (const auto& m : enumerate_maps_upto(max_edges, max_genus, jobs))
    if (is_bicolorable(m)) maps.push_back(m);
  for_each_item(r, static_cast<int>(maps.size()), jobs, [&](int i) -> std::string {
    const RotationMap& m = maps[i];
    const BlossomingMap b = open(m, dual_geodesic_orientation(m));
    if (!in_class_O(b)) return "opening left class O: " + map_to_json(m).dump();
    if (enc(close(b).map) != enc(m)) return "close(open(m)) != m for " + map_to_json(m).dump();
    return "";
  });
  long blossoming = 0;
  for (int g = 0; g <= max_genus; ++g) {
    for (int n = 1; n <= max_edges; ++n) {
      const auto os = collect(spec_O(g, n), jobs);
      blossoming += static_cast<long>(os.size());
      for_each_item(r, static_cast<int>(os.size()), jobs, [&](int i) -> std::string {
        const ClosedMap c = close(os[i]);
        const BlossomingMap again = open(c.map, c.full_orientation());
        if (blossoming_encoding(again) != blossoming_encoding(os[i]))
          return "open(close(b)) != b for " + blossoming_to_json(os[i]).dump();
        if (!(c.full_orientation() == dual_geodesic_orientation(c.map)))
          return "closing did not give the minimal orientation";
        return "";
      });
    }
  }
  r.data = {{"bicolorable_maps", static_cast<long>(maps.size())}, {"blossoming_maps", blossoming}};
  if (r.ok)
    r.detail = std::to_string(maps.size()) + " bicolorable maps, " + std::to_string(blossoming) + " maps of O";
  return r;
}

CheckResult check_cardinalities(int max_genus, int max_edges, int jobs) {
  CheckResult r;
  r.title = "|M_g(n)| = |BC_g(n)| = |O_g(n)|";
  Json table = Json::array();
  std::string line;
  for (int g = 0; g <= max_genus; ++g) {
    for (int n = 1; n <= max_edges; ++n) {
      const long maps = static_cast<long>(enumerate_rooted_maps(g, n, jobs).size());
      const long bc = static_cast<long>(enumerate_bc4valent(g, n, jobs).size());
      const long o = count_tours(spec_O(g, n), jobs);
      ++r.items;
      table.push_back({{"genus", g}, {"n", n}, {"maps", maps}, {"bc4v", bc}, {"O", o}});
      line += (line.empty() ? "" : " ") + std::string("g") + std::to_string(g) + "n" + std::to_string(n) + "=" +
              std::to_string(maps);
      if (maps != bc || bc != o)
        r.fail("g=" + std::to_string(g) + " n=" + std::to_string(n) + ": " + std::to_string(maps) + " / " +
               std::to_string(bc) + " / " + std::to_string(o));
    }
  }
  r.data = {{"counts", table}};
  if (r.ok) r.detail = line;
  return r;
}

CheckResult check_rerooting(int genus, int max_leaves, int jobs) {
  CheckResult r;
  r.title = "2|U| = (#rootable stems)|O| per unrooted class";
  long classes = 0;
  Json per_n = Json::array();
  for (int n = 1; n <= max_leaves; ++n) {
    const auto us = collect(spec_U(genus, n), jobs);
    std::map<std::string, std::pair<long, long>> by_class;  // |U|, |O|
    std::vector<std::string> keys(us.size());
    std::vector<std::string> errors(us.size());
    parallel_tasks(static_cast<int>(us.size()), jobs, [&](int i) {
      keys[i] = unrooted_key(us[i]);
      if (well_rootable_stems(us[i]).size() != 2) errors[i] = "a map does not have exactly 2 well-rootable stems";
    });
    for (std::size_t i = 0; i < us.size(); ++i) {
      auto& c = by_class[keys[i]];
      ++c.first;
      if (in_class_O(us[i])) ++c.second;
      ++r.items;
      if (!errors[i].empty()) r.fail(errors[i] + ": " + blossoming_to_json(us[i]).dump());
    }
    for (const auto& [key, c] : by_class)
      if (2 * c.first != static_cast<long>(n + 1) * c.second)
        r.fail("n=" + std::to_string(n) + ": |U|=" + std::to_string(c.first) + " |O|=" + std::to_string(c.second));
    classes += static_cast<long>(by_class.size());
    per_n.push_back({{"leaves", n}, {"U", static_cast<long>(us.size())}, {"classes", static_cast<long>(by_class.size())}});
  }
  r.data = {{"genus", genus}, {"by_leaves", per_n}};
  if (r.ok) r.detail = std::to_string(r.items) + " maps in " + std::to_string(classes) + " unrooted classes";
  return r;
}

CheckResult check_series(int eq_order, int dp_order) {
  CheckResult r;
  r.title = "T, D, B equations and lattice-path counts";
  const int N = eq_order;
  const auto z = TruncatedSeries::variable(N);
  TruncatedSeries one(N);
  one[0] = 1;
  const auto T = series_T(N), D = series_D(N), B = series_B(N);
  auto expect = [&](bool ok, const std::string& what) {
    ++r.items;
    if (!ok) r.fail(what);
  };
  expect(T - z - BigRat(3) * (T * T) == TruncatedSeries(N), "T = z + 3T^2");
  expect(D - z * (one + BigRat(4) * D + D * D) == TruncatedSeries(N), "D = z(1 + 4D + D^2)");
  expect(B - one - BigRat(4) * (z * B) - BigRat(2) * (z * D * B) == TruncatedSeries(N), "B = 1 + 4zB + 2zDB");
  expect(series_B_closed(N) == B, "closed form of B");
  const auto d = count_D_paths(dp_order), b = count_B_paths(dp_order);
  const auto D2 = series_D(dp_order), B2 = series_B(dp_order);
  for (int n = 0; n <= dp_order; ++n) {
    expect(BigRat(d[n]) == D2[n], "[z^" + std::to_string(n) + "] D");
    expect(BigRat(b[n]) == B2[n], "[z^" + std::to_string(n) + "] B");
  }
  const int tree_order = std::min(dp_order, 6);
  const auto trees = count_trees_by_leaves(tree_order);
  const auto T2 = series_T(tree_order);
  for (int n = 1; n <= tree_order; ++n) expect(BigRat(trees[n]) == T2[n], "[z^" + std::to_string(n) + "] T");
  Json dj = Json::array(), bj = Json::array();
  for (int n = 0; n <= dp_order; ++n) {
    dj.push_back(bigint_to_json(d[n]));
    bj.push_back(bigint_to_json(b[n]));
  }
  r.data = {{"D", dj}, {"B", bj}};
  if (r.ok)
    r.detail = "equations to order " + std::to_string(eq_order) + ", path counts to order " + std::to_string(dp_order);
  return r;
}

CheckResult check_pruning_series(int genus, int order, int jobs) {
  CheckResult r;
  r.title = "U = T'(z) P(T(z))";
  std::vector<BigRat> u(order + 1), p(order + 1);
  Json uj = Json::array(), pj = Json::array();
  for (int n = 1; n <= order; ++n) {
    const long cu = count_tours(spec_U(genus, n), jobs);
    const long cp = count_tours(spec_P(genus, n), jobs);
    u[n] = cu;
    p[n] = cp;
    uj.push_back(cu);
    pj.push_back(cp);
  }
  const TruncatedSeries U(order, u), P(order, p);
  const TruncatedSeries T = series_T(order + 1);
  const TruncatedSeries rhs = T.derivative() * P.compose(T.truncated(order));
  for (int n = 1; n <= order; ++n) {
    ++r.items;
    if (U[n] != rhs[n]) r.fail("[z^" + std::to_string(n) + "]: " + U[n].str() + " vs " + rhs[n].str());
  }
  r.data = {{"genus", genus}, {"U", uj}, {"P", pj}};
  if (r.ok) r.detail = "U = " + uj.dump() + ", P = " + pj.dump();
  return r;
}

CheckResult check_offset_acyclicity(int max_genus, const std::vector<int>& max_leaves, int jobs) {
  CheckResult r;
  r.title = "offset graphs are acyclic";
  long from_maps = 0, from_census = 0;
  for (int g = 1; g <= max_genus; ++g) {
    const int top = g - 1 < static_cast<int>(max_leaves.size()) ? max_leaves[g - 1] : 1;
    for (int n = 1; n <= top; ++n) {
      const auto rs = collect(spec_R(g, n), jobs);
      from_maps += static_cast<long>(rs.size());
      for_each_item(r, static_cast<int>(rs.size()), jobs, [&](int i) -> std::string {
        const MergedScheme ms = merge_branches(compute_labels(rs[i]));
        try {
          offset_graph(ms.scheme.map);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::CycleDetected) return "cycle in " + blossoming_to_json(rs[i]).dump();
          throw;
        }
        return "";
      });
    }
    const auto census = enumerate_rooted_schemes(g, jobs);
    from_census += static_cast<long>(census.size());
    for_each_item(r, static_cast<int>(census.size()), jobs, [&](int i) -> std::string {
      try {
        offset_graph(census[i]);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::CycleDetected) return "cycle in census scheme " + std::to_string(i);
        throw;
      }
      return "";
    });
  }
  r.data = {{"merged_maps", from_maps}, {"census_schemes", from_census}};
  if (r.ok)
    r.detail = std::to_string(from_maps) + " merged R maps, " + std::to_string(from_census) + " census schemes";
  return r;
}

CheckResult check_symmetry(int max_genus, int jobs) {
  CheckResult r;
  r.title = "r_b_s(1/D) = r_b_s(D)";
  Json per_genus = Json::array();
  for (int g = 1; g <= max_genus; ++g) {
    const auto census = enumerate_rooted_schemes(g, jobs);
    // r_b_s is a function of the offset graph alone, so each isomorphism class is evaluated once
    std::vector<std::string> key_of(census.size());
    std::map<std::string, OffsetGraph> graphs;
    for (std::size_t i = 0; i < census.size(); ++i) {
      OffsetGraph og = offset_graph(census[i]);
      key_of[i] = graph_key(og);
      graphs.emplace(key_of[i], std::move(og));
    }
    std::vector<std::string> keys;
    for (const auto& kv : graphs) keys.push_back(kv.first);
    std::vector<char> sym(keys.size());
    parallel_tasks(static_cast<int>(keys.size()), jobs, [&](int t) { sym[t] = is_symmetric(r_b_s(graphs.at(keys[t]))); });
    std::map<std::string, bool> sym_of;
    for (std::size_t t = 0; t < keys.size(); ++t) sym_of[keys[t]] = sym[t];
    for (std::size_t i = 0; i < census.size(); ++i) {
      ++r.items;
      if (!sym_of.at(key_of[i])) r.fail("genus " + std::to_string(g) + " scheme " + std::to_string(i) + " is not symmetric");
    }
    per_genus.push_back({{"genus", g},
                         {"rooted_schemes", static_cast<long>(census.size())},
                         {"graph_classes", static_cast<long>(keys.size())}});
  }
  r.data = {{"censuses", per_genus}};
  if (r.ok) r.detail = std::to_string(r.items) + " rooted schemes, census " + per_genus.dump();
  return r;
}

CheckResult check_identities(int max_n) {
  CheckResult r;
  r.title = "surjection sum identities";
  Json per_n = Json::array();
  for (int n = 1; n <= max_n; ++n) {
    const IdentityReport rep = verify_sum_identities(n, all_forward_arc_sets(n));
    r.items += rep.checks;
    if (!rep.ok()) r.fail("n=" + std::to_string(n) + ": " + (rep.failed.empty() ? "" : rep.failed.front()));
    per_n.push_back({{"n", n}, {"surjections", rep.n_surjections}, {"arc_sets", rep.n_arc_sets}, {"checks", rep.checks}});
  }
  r.data = {{"by_n", per_n}};
  if (r.ok) r.detail = std::to_string(r.items) + " identities for n <= " + std::to_string(max_n);
  return r;
}

CheckResult check_Mg(int genus, int max_edges, int jobs) {
  CheckResult r;
  r.title = "assembled M_g against the map oracle";
  const MgResult res = assemble_Mg(genus, max_edges, jobs);
  Json ours = Json::array(), oracle = Json::array();
  for (int n = 1; n <= max_edges; ++n) {
    const BigInt want = static_cast<long>(enumerate_rooted_maps(genus, n, jobs).size());
    ours.push_back(bigint_to_json(res.coefficients[n]));
    oracle.push_back(bigint_to_json(want));
    ++r.items;
    if (res.coefficients[n] != want)
      r.fail("[t^" + std::to_string(n) + "]: " + big_str(res.coefficients[n]) + " vs oracle " + big_str(want));
  }
  r.data = {{"genus", genus},
            {"coefficients", ours},
            {"oracle", oracle},
            {"rational_in_T", res.in_T.to_string("T")},
            {"rooted_schemes", res.n_rooted_schemes}};
  if (r.ok) r.detail = "n=1.." + std::to_string(max_edges) + ": " + ours.dump();
  return r;
}

CheckResult check_fractional(int max_genus, int max_edges, int jobs) {
  CheckResult r;
  r.title = "fractional opening";
  const auto maps = enumerate_maps_upto(max_edges, max_genus, jobs);
  long bicolorable = 0;
  for (const auto& m : maps) bicolorable += is_bicolorable(m).has_value();
  for_each_item(r, static_cast<int>(maps.size()), jobs, [&](int i) -> std::string {
    const RotationMap& m = maps[i];
    const HalfOrientation h = dual_geodesic_half_orientation(m);
    const BlossomingMap b = fractional_open(m, h);
    const ClosedMap c = close(b);
    if (enc(c.map) != enc(m) || !(c.orientation == h)) return "close(fractional_open(m)) != m for " + map_to_json(m).dump();
    if (is_bicolorable(m) && !(b == open(m, dual_geodesic_orientation(m))))
      return "fractional_open differs from open on " + map_to_json(m).dump();
    return "";
  });
  r.data = {{"maps", static_cast<long>(maps.size())}, {"bicolorable", bicolorable}};
  if (r.ok) r.detail = std::to_string(maps.size()) + " maps, " + std::to_string(bicolorable) + " bicolorable";
  return r;
}

CheckResult check_lattice(int max_genus, int max_edges, int jobs) {
  CheckResult r;
  r.title = "minimal bicolorable orientation";
  std::vector<RotationMap> maps;
  for (const auto& m : enumerate_maps_upto(max_edges, max_genus, jobs))
    if (is_bicolorable(m)) maps.push_back(m);
  std::vector<long> counted(maps.size());
  for_each_item(r, static_cast<int>(maps.size()), jobs, [&](int i) -> std::string {
    const RotationMap& m = maps[i];
    const Orientation dg = dual_geodesic_orientation(m);
    int minima = 0;
    for (const auto& x : all_orientations(m)) {
      if (!is_bicolorable_orientation(m, x)) continue;
      ++counted[i];
      if (no_clockwise_nonroot(m, x)) {
        ++minima;
        if (!(x == dg)) return "a minimal orientation differs from the dual-geodesic one on " + map_to_json(m).dump();
      }
      if (!(minimize_by_flips(m, x) == dg)) return "flips did not reach the minimum on " + map_to_json(m).dump();
    }
    if (minima != 1) return std::to_string(minima) + " minimal orientations on " + map_to_json(m).dump();
    return "";
  });
  long orientations = 0;
  for (long c : counted) orientations += c;
  r.data = {{"maps", static_cast<long>(maps.size())}, {"bicolorable_orientations", orientations}};
  if (r.ok)
    r.detail = std::to_string(maps.size()) + " maps, " + std::to_string(orientations) + " bicolorable orientations";
  return r;
}

}  // namespace mapforge
