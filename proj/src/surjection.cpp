#include "mapforge/surjection.hpp"

#include <algorithm>
#include <map>

#include "mapforge/error.hpp"

namespace mapforge {

int image_size(const Surjection& o) { return o.empty() ? 0 : *std::max_element(o.begin(), o.end()); }

bool is_surjection(const Surjection& o) {
  const int k = image_size(o);
  std::vector<bool> hit(k + 1, false);
  for (int v : o) {
    if (v < 1) return false;
    hit[v] = true;
  }
  return std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

std::vector<Surjection> enumerate_surjections(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "surjections need n >= 1");
  std::vector<Surjection> out;
  Surjection f(n, 1);
  while (true) {
    if (is_surjection(f)) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == n) f[i--] = 1;
    if (i < 0) break;
    ++f[i];
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Surjection& a, const Surjection& b) { return image_size(a) < image_size(b); });
  return out;
}

bool refines(const Surjection& o, const Surjection& p) {
  const int n = static_cast<int>(o.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p[x] < p[y] && !(o[x] < o[y])) return false;
  return true;
}

Surjection reverse(const Surjection& p) {
  const int k = image_size(p);
  Surjection r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = k + 1 - p[i];
  return r;
}

Surjection canonical_permutation(const Surjection& p) {
  const int n = static_cast<int>(p.size());
  Surjection r(n);
  for (int i = 0; i < n; ++i) {
    int below = 0, tied_after = 0;
    for (int j = 0; j < n; ++j) {
      if (p[j] < p[i]) ++below;
      if (p[j] == p[i] && j >= i) ++tied_after;
    }
    r[i] = below + tied_after;
  }
  return r;
}

std::vector<int> monomial_X(const Surjection& p) {
  std::vector<int> e;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) e.push_back(p[i] > p[j] ? 1 : -1);
  return e;
}

int offset_exponent(const Surjection& o, const OffsetArcs& arcs) {
  int e = 0;
  for (auto [u, v] : arcs) e += o[u] > o[v] ? -1 : 1;  // inversion -1, tie or anti-inversion +1
  return e;
}

std::vector<OffsetArcs> all_forward_arc_sets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<OffsetArcs> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    OffsetArcs a;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u) a.push_back(pairs[b]);
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::string show(const Surjection& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

void fail(IdentityReport& r, const std::string& what) {
  ++r.failures;
  if (r.failed.size() < 8) r.failed.push_back(what);
}

}  // namespace

IdentityReport verify_sum_identities(int n, const std::vector<OffsetArcs>& arc_sets) {
  IdentityReport rep;
  rep.n_vertices = n;
  rep.n_arc_sets = static_cast<int>(arc_sets.size());
  const auto all = enumerate_surjections(n);
  rep.n_surjections = static_cast<int>(all.size());
  const int sign_n = (n % 2 == 0) ? 1 : -1;

  for (const auto& p : all) {
    const Surjection pr = reverse(p);
    std::vector<const Surjection*> finer;
    for (const auto& o : all)
      if (refines(o, pr)) finer.push_back(&o);

    // multivariate identity
    std::map<std::vector<int>, long> sum;
    for (const Surjection* o : finer) {
      const int sign = ((image_size(*o) - n) % 2 == 0) ? 1 : -1;
      sum[monomial_X(*o)] += sign;
    }
    for (auto it = sum.begin(); it != sum.end();) it = it->second == 0 ? sum.erase(it) : std::next(it);
    std::vector<int> inv = monomial_X(p);
    for (int& x : inv) x = -x;
    ++rep.checks;
    if (!(sum.size() == 1 && sum.begin()->first == inv && sum.begin()->second == 1))
      fail(rep, "X(p)^-1 expansion, p = " + show(p));

    // canonical permutation
    const Surjection r = canonical_permutation(p);
    ++rep.checks;
    // an admissible ascent: values v, v+1 held by x < y in one block of p;
    // giving them a common value would not change the monomial
    std::vector<int> at(n + 1);
    for (int i = 0; i < n; ++i) at[r[i]] = i;
    bool ascent = false;
    for (int v = 1; v < n; ++v)
      if (at[v] < at[v + 1] && p[at[v]] == p[at[v + 1]]) ascent = true;
    if (!refines(r, p) || ascent || image_size(r) != n) fail(rep, "canonical permutation, p = " + show(p));
    ++rep.checks;
    std::vector<int> xr = monomial_X(r), xpr = monomial_X(pr);
    for (int& x : xpr) x = -x;
    if (xr != xpr) fail(rep, "X(r(p)) = X(reverse p)^-1, p = " + show(p));

    // alternating sum of the face lattice
    long alt = 0;
    for (const Surjection* o : finer) alt += ((image_size(*o) - 1) % 2 == 0) ? 1 : -1;
    ++rep.checks;
    if (alt != -sign_n) fail(rep, "alternating sum, p = " + show(p));

    // specialisation X_ij -> D^(arcs i->j)
    for (const auto& arcs : arc_sets) {
      std::map<int, long> dsum;
      for (const Surjection* o : finer) {
        const int sign = ((image_size(*o) - 1) % 2 == 0) ? 1 : -1;
        dsum[-offset_exponent(*o, arcs)] += sign;
      }
      for (auto it = dsum.begin(); it != dsum.end();) it = it->second == 0 ? dsum.erase(it) : std::next(it);
      ++rep.checks;
      const int want = offset_exponent(p, arcs);
      if (!(dsum.size() == 1 && dsum.begin()->first == want && dsum.begin()->second == -sign_n))
        fail(rep, "D-specialised sum, p = " + show(p) + ", " + std::to_string(arcs.size()) + " arcs");
    }
  }
  return rep;
}

}  // namespace mapforge
