// One line per acceptance criterion. All comparisons are exact: the
// tolerance is zero mismatches for every criterion.
#include <cstdio>
#include <iostream>

#include "mapforge/parallel.hpp"
#include "mapforge/verify.hpp"

using namespace mapforge;

namespace {

constexpr long kTolerance = 0;  // allowed mismatches

struct Criterion {
  const char* id;
  std::function<CheckResult()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const int jobs = resolve_jobs();
  const bool json = argc > 1 && std::string(argv[1]) == "--json";
  const std::vector<Criterion> criteria = {
      {"C1 bijection round trips", [&] { return check_bijection(1, 4, jobs); }},
      {"C2 cardinality chain", [&] { return check_cardinalities(1, 4, jobs); }},
      {"C3 rerooting law", [&] { return check_rerooting(1, 4, jobs); }},
      {"C4 series identities", [&] { return check_series(12, 10); }},
      {"C5 pruning series", [&] { return check_pruning_series(1, 5, jobs); }},
      {"C6 offset acyclicity", [&] { return check_offset_acyclicity(2, {4, 3}, jobs); }},
      {"C7 symmetry", [&] { return check_symmetry(2, jobs); }},
      {"C8 surjection identities", [&] { return check_identities(4); }},
      {"C9 rationality pipeline", [&] { return check_Mg(1, 5, jobs); }},
      {"C10 fractional extension", [&] { return check_fractional(1, 3, jobs); }},
      {"C11 orientation lattice", [&] { return check_lattice(1, 4, jobs); }},
  };
  int failed = 0;
  Json report = Json::array();
  for (const auto& c : criteria) {
    const CheckResult r = timed(c.id, c.run);
    const bool pass = r.ok && r.failures <= kTolerance && r.items > 0;
    failed += !pass;
    std::printf("%s %-26s %8ld items %8.1fs  %s\n", pass ? "PASS" : "FAIL", c.id, r.items, r.seconds, r.detail.c_str());
    std::fflush(stdout);
    report.push_back(to_json(r));
  }
  if (json) std::cout << report.dump(2) << "\n";
  return failed == 0 ? 0 : 1;
}
