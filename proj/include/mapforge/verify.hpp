#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mapforge/io.hpp"

namespace mapforge {

/// Outcome of one exhaustive check.
struct CheckResult {
  std::string id;
  std::string title;
  bool ok = true;
  long items = 0;      // objects examined
  long failures = 0;
  std::string detail;  // short summary, or the first failure
  double seconds = 0;
  Json data = Json::object();

  void fail(const std::string& what) {
    if (failures++ == 0) detail = what;
    ok = false;
  }
};

Json to_json(const CheckResult& r);

/// close(open(m)) = m for bicolorable maps, open(close(b)) = b on O.
CheckResult check_bijection(int max_genus, int max_edges, int jobs);
/// Rooted maps, 4-valent bicolorable maps and O maps have the same counts.
CheckResult check_cardinalities(int max_genus, int max_edges, int jobs);
/// 2 |U| = (leaves + 1) |O| per unrooted class and two well-rootable stems per map.
CheckResult check_rerooting(int genus, int max_leaves, int jobs);
/// T, D, B against their equations (eq_order) and lattice-path counts (dp_order).
CheckResult check_series(int eq_order, int dp_order);
/// Genus-g U counted by leaves equals T'(z) P(T(z)).
CheckResult check_pruning_series(int genus, int order, int jobs);
/// No directed cycle among offset edges of merged R maps and census schemes.
CheckResult check_offset_acyclicity(int max_genus, const std::vector<int>& max_leaves, int jobs);
/// r_b_s(1/D) = r_b_s(D) for every rooted scheme of the given genera.
CheckResult check_symmetry(int max_genus, int jobs);
/// Surjection identities for every n up to max_n and every forward arc set.
CheckResult check_identities(int max_n);
/// Coefficients of assemble_Mg(genus) against the rooted map oracle.
CheckResult check_Mg(int genus, int max_edges, int jobs);
/// close(fractional_open(m)) = m for all maps, and agreement with open() on bicolorable maps.
CheckResult check_fractional(int max_genus, int max_edges, int jobs);
/// Unique minimal bicolorable orientation, reached by flips from every start.
CheckResult check_lattice(int max_genus, int max_edges, int jobs);

/// Runs a check, timing it and turning exceptions into failures.
CheckResult timed(const std::string& id, const std::function<CheckResult()>& body);

}  // namespace mapforge
