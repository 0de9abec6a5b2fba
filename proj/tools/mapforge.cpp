// mapforge command line. Machine output is JSON (or JSON lines); --pretty
// switches to indented JSON and plain tables.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 a checked invariant failed.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mapforge/blossoming.hpp"
#include "mapforge/error.hpp"
#include "mapforge/io.hpp"
#include "mapforge/oracle.hpp"
#include "mapforge/orientation.hpp"
#include "mapforge/parallel.hpp"
#include "mapforge/scheme.hpp"
#include "mapforge/series.hpp"
#include "mapforge/tour_generator.hpp"
#include "mapforge/verify.hpp"

using namespace mapforge;

namespace {

constexpr int kInvariantFailed = 2;

struct Globals {
  std::optional<int> jobs;
  bool pretty = false;
  int jobs_resolved() const { return resolve_jobs(jobs); }
};

Globals g_opts;

void emit(const Json& j) { std::cout << (g_opts.pretty ? j.dump(2) : j.dump()) << "\n"; }
void emit_line(const Json& j) { std::cout << j.dump() << "\n"; }

Json map_info(const RotationMap& m) {
  return Json{{"genus", m.genus()}, {"v", m.num_vertices()}, {"e", m.num_edges()}, {"f", m.num_faces()}};
}

Orientation orientation_or_default(const RotationMap& m, const std::string& path) {
  if (path.empty()) return dual_geodesic_orientation(m);
  return orientation_from_json(m, read_json_file(path));
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

Json scheme_line(int id, const BlossomingMap& s) {
  const OffsetGraph og = offset_graph(s);
  Json arcs = Json::array();
  for (auto [u, v] : og.arcs) arcs.push_back({u + 1, v + 1});
  const int v4 = scheme_v4(s);
  return Json{{"scheme_id", id},
              {"encoding", hex(blossoming_encoding(s))},
              {"v_s3", s.num_vertices() - v4},
              {"v_s4", v4},
              {"scheme", blossoming_to_json(s)},
              {"offset_arcs", arcs}};
}

void print_count_table(const Json& rows, const char* size_name) {
  std::printf("%6s %8s %12s\n", "genus", size_name, "count");
  for (const auto& r : rows)
    std::printf("%6d %8d %12lld\n", r["genus"].get<int>(), r[size_name].get<int>(), r["count"].get<long long>());
}

void print_checks(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    std::printf("%s %-12s %8ld items %8.1fs  %s\n", r.ok ? "PASS" : "FAIL", r.id.c_str(), r.items, r.seconds,
                r.detail.c_str());
}

int run_checks(const std::vector<std::pair<std::string, std::function<CheckResult()>>>& checks,
               const std::string& report_path) {
  std::vector<CheckResult> results;
  bool ok = true;
  for (const auto& [id, body] : checks) {
    results.push_back(timed(id, body));
    ok = ok && results.back().ok;
  }
  Json report{{"ok", ok}, {"checks", Json::array()}};
  for (const auto& r : results) report["checks"].push_back(to_json(r));
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw Error(ErrorCode::BadInput, "cannot write " + report_path);
    out << report.dump(2) << "\n";
  }
  if (g_opts.pretty)
    print_checks(results);
  else
    emit(report);
  return ok ? 0 : kInvariantFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted maps, blossoming bijections and genus-g scheme series"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too
  app.add_option("--jobs", g_opts.jobs, "worker threads (default: MAPFORGE_JOBS or all cores)")->check(CLI::PositiveNumber);
  app.add_flag("--pretty", g_opts.pretty, "human readable output");

  int result = 0;
  std::string file, orientation_file, report;
  int genus = 1, edges = 4, order = 10, stem = 0, max_n = 4;
  bool count = false, emit_jsonl = false;
  std::string cls = "O";

  // maps
  auto* maps = app.add_subcommand("maps", "validate and transform maps");
  maps->require_subcommand(1);
  auto map_cmd = [&](const char* name, const char* help, std::function<Json(const RotationMap&)> f) {
    auto* c = maps->add_subcommand(name, help);
    c->add_option("file", file, "map JSON ('-' for stdin)")->required();
    c->callback([&, f] { emit(f(map_from_json(read_json_file(file)))); });
  };
  map_cmd("info", "genus and cell counts", map_info);
  map_cmd("dual", "dual map", [](const RotationMap& m) { return map_to_json(dual(m)); });
  map_cmd("radial", "radial map", [](const RotationMap& m) { return map_to_json(radial(m)); });
  map_cmd("reflect", "mirror image", [](const RotationMap& m) { return map_to_json(reflect(m)); });
  {
    auto* c = maps->add_subcommand("validate", "check a map file");
    c->add_option("file", file, "map JSON")->required();
    c->callback([&] {
      Json j = map_info(map_from_json(read_json_file(file)));
      j["valid"] = true;
      emit(j);
    });
  }

  // orient
  auto* orient = app.add_subcommand("orient", "orientations of a map");
  orient->require_subcommand(1);
  {
    auto* c = orient->add_subcommand("geodesic", "edges toward the root vertex (bipartite maps)");
    c->add_option("file", file)->required();
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      emit(orientation_to_json(m, geodesic_orientation(m)));
    });
    c = orient->add_subcommand("dual-geodesic", "minimal bicolorable orientation");
    c->add_option("file", file)->required();
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      emit(orientation_to_json(m, dual_geodesic_orientation(m)));
    });
    c = orient->add_subcommand("check", "properties of an orientation");
    c->add_option("file", file)->required();
    c->add_option("--orientation", orientation_file, "orientation JSON")->required();
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      const Orientation o = orientation_from_json(m, read_json_file(orientation_file));
      Json cw = Json::array();
      for (int f = 0; f < m.num_faces(); ++f)
        if (is_clockwise_face(m, o, f)) cw.push_back(f + 1);
      bool minimal = is_bicolorable_orientation(m, o);
      for (int f = 0; f < m.num_faces(); ++f)
        if (f != m.root_face() && is_clockwise_face(m, o, f)) minimal = false;
      emit(Json{{"bipartite", is_bipartite_orientation(m, o)},
                {"bicolorable", is_bicolorable_orientation(m, o)},
                {"clockwise_faces", cw},
                {"root_face", m.root_face() + 1},
                {"minimal", minimal}});
    });
    c = orient->add_subcommand("minimize", "flip clockwise faces down to the minimum");
    c->add_option("file", file)->required();
    c->add_option("--orientation", orientation_file, "starting orientation JSON")->required();
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      int flips = 0;
      const Orientation o = minimize_by_flips(m, orientation_from_json(m, read_json_file(orientation_file)), &flips);
      emit(Json{{"orientation", orientation_to_json(m, o)}, {"flips", flips}});
    });
    c = orient->add_subcommand("half", "dual-geodesic half orientation (any map)");
    c->add_option("file", file)->required();
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      emit(half_orientation_to_json(m, dual_geodesic_half_orientation(m)));
    });
  }

  // bij
  auto* bij = app.add_subcommand("bij", "opening, closing and rerooting");
  bij->require_subcommand(1);
  {
    auto* c = bij->add_subcommand("open", "open a bicolorable map");
    c->add_option("file", file)->required();
    c->add_option("--orientation", orientation_file, "orientation JSON (default: dual-geodesic)");
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      emit(blossoming_to_json(open(m, orientation_or_default(m, orientation_file))));
    });
    c = bij->add_subcommand("close", "close a blossoming map");
    c->add_option("file", file, "blossoming JSON")->required();
    c->callback([&] {
      const ClosedMap cm = close(blossoming_from_json(read_json_file(file)));
      emit(Json{{"map", map_to_json(cm.map)}, {"orientation", half_orientation_to_json(cm.map, cm.orientation)}});
    });
    c = bij->add_subcommand("fractional-open", "open any map through its half orientation");
    c->add_option("file", file)->required();
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      emit(blossoming_to_json(fractional_open(m, dual_geodesic_half_orientation(m))));
    });
    c = bij->add_subcommand("reroot", "move the root to another stem");
    c->add_option("file", file, "blossoming JSON")->required();
    c->add_option("--stem", stem, "stem index (1-based, in the file's stem list)")->required();
    c->callback([&] {
      const Json j = read_json_file(file);
      const BlossomingMap b = blossoming_from_json(j);
      const int m = j["n_darts"].get<int>();
      if (stem < 1 || stem > static_cast<int>(j["stems"].size()))
        throw Error(ErrorCode::BadInput, "stem index out of range");
      const Rerooted r = reroot(b, m + stem - 1);
      emit(blossoming_to_json(r.map));
    });
    c = bij->add_subcommand("roundtrip", "open then close and compare");
    c->add_option("file", file)->required();
    c->callback([&] {
      const RotationMap m = map_from_json(read_json_file(file));
      const bool bic = is_bicolorable(m).has_value();
      const BlossomingMap b = bic ? open(m, dual_geodesic_orientation(m))
                                  : fractional_open(m, dual_geodesic_half_orientation(m));
      const bool ok = canonical_encoding(close(b).map) == canonical_encoding(m);
      emit(Json{{"ok", ok}, {"bicolorable", bic}, {"blossoming", blossoming_to_json(b)}});
      if (!ok) result = kInvariantFailed;
    });
  }

  // enum
  auto* en = app.add_subcommand("enum", "exhaustive enumeration");
  en->require_subcommand(1);
  {
    auto* c = en->add_subcommand("maps", "rooted maps");
    c->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
    c->add_option("--edges", edges)->check(CLI::PositiveNumber);
    c->add_flag("--count", count, "table of counts for every genus and size up to the bounds");
    c->add_flag("--emit", emit_jsonl, "stream maps as JSON lines");
    c->callback([&] {
      if (count) {
        Json rows = Json::array();
        for (int g = 0; g <= genus; ++g)
          for (int n = 1; n <= edges; ++n)
            rows.push_back({{"genus", g}, {"edges", n},
                            {"count", static_cast<long long>(enumerate_rooted_maps(g, n, g_opts.jobs_resolved()).size())}});
        if (g_opts.pretty) print_count_table(rows, "edges");
        else emit(Json{{"counts", rows}});
        return;
      }
      const auto ms = enumerate_rooted_maps(genus, edges, g_opts.jobs_resolved());
      if (emit_jsonl)
        for (const auto& m : ms) emit_line(map_to_json(m));
      else
        emit(Json{{"genus", genus}, {"edges", edges}, {"count", ms.size()}});
    });
    c = en->add_subcommand("bc4v", "rooted 4-valent bicolorable maps");
    c->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
    c->add_option("--edges", edges, "number of vertices (edges of the underlying map)")->check(CLI::PositiveNumber);
    c->add_flag("--count", count);
    c->add_flag("--emit", emit_jsonl);
    c->callback([&] {
      if (count) {
        Json rows = Json::array();
        for (int g = 0; g <= genus; ++g)
          for (int n = 1; n <= edges; ++n)
            rows.push_back({{"genus", g}, {"vertices", n},
                            {"count", static_cast<long long>(enumerate_bc4valent(g, n, g_opts.jobs_resolved()).size())}});
        if (g_opts.pretty) print_count_table(rows, "vertices");
        else emit(Json{{"counts", rows}});
        return;
      }
      const auto ms = enumerate_bc4valent(genus, edges, g_opts.jobs_resolved());
      if (emit_jsonl)
        for (const auto& m : ms) emit_line(map_to_json(m));
      else
        emit(Json{{"genus", genus}, {"vertices", edges}, {"count", ms.size()}});
    });
    c = en->add_subcommand("blossoming", "blossoming maps of a class (O by vertices; U, P, R by leaves)");
    c->add_option("--class", cls)->check(CLI::IsMember({"O", "U", "P", "R"}));
    c->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
    c->add_option("--edges", edges, "size: vertices for O, leaves for U, P, R")->check(CLI::PositiveNumber);
    c->add_flag("--count", count);
    c->add_flag("--emit", emit_jsonl);
    c->callback([&] {
      auto spec_for = [&](int g, int n) {
        if (cls == "O") return spec_O(g, n);
        if (cls == "U") return spec_U(g, n);
        if (cls == "P") return spec_P(g, n);
        return spec_R(g, n);
      };
      if (count) {
        Json rows = Json::array();
        for (int g = 0; g <= genus; ++g)
          for (int n = 1; n <= edges; ++n)
            rows.push_back({{"genus", g}, {"size", n}, {"count", count_tours(spec_for(g, n), g_opts.jobs_resolved())}});
        if (g_opts.pretty) print_count_table(rows, "size");
        else emit(Json{{"class", cls}, {"counts", rows}});
        return;
      }
      if (emit_jsonl) {
        generate_tours(spec_for(genus, edges), [](const BlossomingMap& b) { emit_line(blossoming_to_json(b)); });
      } else {
        emit(Json{{"class", cls}, {"genus", genus}, {"size", edges},
                  {"count", count_tours(spec_for(genus, edges), g_opts.jobs_resolved())}});
      }
    });
  }

  // scheme
  auto* sch = app.add_subcommand("scheme", "schemes of unicellular blossoming maps");
  sch->require_subcommand(1);
  {
    auto* c = sch->add_subcommand("census", "rooted unlabeled schemes as JSON lines");
    c->add_option("--genus", genus)->check(CLI::PositiveNumber);
    c->callback([&] {
      const auto census = enumerate_rooted_schemes(genus, g_opts.jobs_resolved());
      for (std::size_t i = 0; i < census.size(); ++i) emit_line(scheme_line(static_cast<int>(i) + 1, census[i]));
    });
    c = sch->add_subcommand("offsets", "merge the branches of a scheme-rooted map");
    c->add_option("file", file, "blossoming JSON")->required();
    c->callback([&] {
      const BlossomingMap r = compute_labels(blossoming_from_json(read_json_file(file)));
      const MergedScheme ms = merge_branches(r);
      const OffsetGraph og = offset_graph(ms.scheme.map);
      Json arcs = Json::array(), branches = Json::array();
      for (auto [u, v] : og.arcs) arcs.push_back({u + 1, v + 1});
      static const char* names[] = {"U", "D", "H1", "H2", "H3", "H4"};
      for (const auto& b : ms.branches) {
        Json steps = Json::array();
        for (Step s : b.path.steps) steps.push_back(names[static_cast<int>(s)]);
        branches.push_back({{"tail", b.tail + 1}, {"head", b.head + 1}, {"start", b.path.start},
                            {"end", b.path.end}, {"steps", steps}});
      }
      emit(Json{{"scheme", blossoming_to_json(ms.scheme.map)},
                {"offsets", ms.scheme.offsets},
                {"vertex_min", ms.scheme.vertex_min},
                {"offset_arcs", arcs},
                {"branches", branches}});
    });
    c = sch->add_subcommand("symmetry", "r_b_s and its D -> 1/D symmetry for every rooted scheme");
    c->add_option("--genus", genus)->check(CLI::PositiveNumber);
    c->callback([&] {
      const auto census = enumerate_rooted_schemes(genus, g_opts.jobs_resolved());
      std::map<std::string, LaurentRational> cache;
      bool all = true;
      for (std::size_t i = 0; i < census.size(); ++i) {
        const OffsetGraph og = offset_graph(census[i]);
        const std::string key = graph_key(og);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, r_b_s(og)).first;
        const LaurentRational& f = it->second;
        Json arcs = Json::array();
        for (auto [u, v] : og.arcs) arcs.push_back({u + 1, v + 1});
        const bool sym = is_symmetric(f);
        all = all && sym;
        emit_line(Json{{"scheme_id", i + 1},
                       {"n_e", og.edges.size()},
                       {"n_v", og.n_vertices},
                       {"v_s4", scheme_v4(census[i])},
                       {"offset_arcs", arcs},
                       {"r_b_s", {{"low", f.low()}, {"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}},
                       {"symmetric", sym}});
      }
      if (!all) result = kInvariantFailed;
    });
  }

  // series
  auto* ser = app.add_subcommand("series", "power series coefficients");
  ser->require_subcommand(1);
  {
    auto series_cmd = [&](const char* name, const char* help, std::function<TruncatedSeries(int)> f) {
      auto* c = ser->add_subcommand(name, help);
      c->add_option("--order", order)->check(CLI::NonNegativeNumber);
      c->callback([&, f, name] {
        const auto s = f(order);
        Json coeffs = Json::array();
        for (const auto& x : s.integers()) coeffs.push_back(bigint_to_json(x));
        if (g_opts.pretty) {
          for (const auto& x : s.integers()) std::cout << x << " ";
          std::cout << "\n";
        } else {
          emit(Json{{"series", name}, {"order", order}, {"coefficients", coeffs}});
        }
      });
    };
    series_cmd("T", "T = z + 3T^2", series_T);
    series_cmd("D", "D = z(1 + 4D + D^2)", series_D);
    series_cmd("B", "B = 1 + 4zB + 2zDB", series_B);
    auto* c = ser->add_subcommand("Mg", "rooted genus-g maps counted by edges, through the schemes");
    c->add_option("--genus", genus)->check(CLI::PositiveNumber);
    c->add_option("--order", order)->check(CLI::NonNegativeNumber);
    c->callback([&] {
      const MgResult r = assemble_Mg(genus, order, g_opts.jobs_resolved());
      Json coeffs = Json::array();
      for (const auto& x : r.coefficients) coeffs.push_back(bigint_to_json(x));
      emit(Json{{"genus", genus},
                {"coefficients", coeffs},
                {"rational_in_T", r.in_T.to_string("T")},
                {"rooted_schemes", r.n_rooted_schemes},
                {"unrooted_schemes", r.n_unrooted_schemes}});
    });
  }

  // verify
  auto* ver = app.add_subcommand("verify", "exhaustive invariant checks");
  ver->require_subcommand(1);
  {
    auto* c = ver->add_subcommand("all", "every check at the given scale");
    c->add_option("--genus", genus, "largest genus")->check(CLI::NonNegativeNumber);
    c->add_option("--max-edges", edges)->check(CLI::PositiveNumber);
    c->add_option("--report", report, "write the JSON report here");
    c->callback([&] {
      const int jobs = g_opts.jobs_resolved();
      const int g1 = std::max(genus, 1);
      const int g = genus, n = edges;
      std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
          {"bijection", [=] { return check_bijection(g, n, jobs); }},
          {"cardinality", [=] { return check_cardinalities(g, n, jobs); }},
          {"rerooting", [=] { return check_rerooting(g1, n, jobs); }},
          {"series", [] { return check_series(12, 10); }},
          {"pruning", [=] { return check_pruning_series(g1, n, jobs); }},
          {"offsets", [=] { return check_offset_acyclicity(g1, std::vector<int>(g1, n), jobs); }},
          {"symmetry", [=] { return check_symmetry(g1, jobs); }},
          {"identities", [] { return check_identities(4); }},
          {"Mg", [=] { return check_Mg(g1, n, jobs); }},
          {"fractional", [=] { return check_fractional(g, std::min(n, 3), jobs); }},
          {"lattice", [=] { return check_lattice(g, n, jobs); }},
      };
      result = run_checks(checks, report);
    });
    c = ver->add_subcommand("identities", "surjection identities only");
    c->add_option("--max-n", max_n)->check(CLI::Range(1, 6));
    c->add_option("--report", report);
    c->callback([&] {
      const int m = max_n;
      result = run_checks({{"identities", [m] { return check_identities(m); }}}, report);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return result;
}
