#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mapforge {

/// o(1..n) onto {1..k}, stored 0-based by position: o[i] is the value of i+1.
using Surjection = std::vector<int>;

/// All surjections of [n], grouped by k and lexicographic inside a group.
std::vector<Surjection> enumerate_surjections(int n);
int image_size(const Surjection& o);
bool is_surjection(const Surjection& o);
/// o refines p: p(x) < p(y) implies o(x) < o(y) (so o-blocks split p-blocks in order).
bool refines(const Surjection& o, const Surjection& p);
Surjection reverse(const Surjection& p);
/// r(p)(i) = #{j : p(j) < p(i)} + #{j : p(j) = p(i), j >= i}.
Surjection canonical_permutation(const Surjection& p);
/// Exponents of X_ij (i < j, pairs in lexicographic order): +1 if p(i) > p(j), else -1.
std::vector<int> monomial_X(const Surjection& p);

/// Arcs (i, j) with i < j, 0-based, of an offset graph on ordered vertices.
using OffsetArcs = std::vector<std::pair<int, int>>;

/// Exponent n_t + n_a - n_i of D for o against the arcs u -> v (offset toward v).
int offset_exponent(const Surjection& o, const OffsetArcs& arcs);

struct IdentityReport {
  int n_vertices = 0;
  int n_surjections = 0;
  int n_arc_sets = 0;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> failed;  // first few failures, human readable
  bool ok() const { return failures == 0; }
};

/// Checks, for every surjection p of [n]:
///  - X(p)^-1 = sum over o refining reverse(p) of (-1)^(k(o)-n) X(o), as Laurent monomials;
///  - the same sum with X_ij := D^(number of arcs (i,j)), for each arc set given;
///  - sum over o refining reverse(p) of (-1)^(k(o)-1) = (-1)^(n-1).
/// Also checks that the canonical permutation refines p and has no admissible ascent.
IdentityReport verify_sum_identities(int n, const std::vector<OffsetArcs>& arc_sets);

/// Every subset of the pairs i < j on n vertices (all acyclic offset graphs
/// on n ordered vertices with simple arcs).
std::vector<OffsetArcs> all_forward_arc_sets(int n);

}  // namespace mapforge
