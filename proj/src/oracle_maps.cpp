#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "mapforge/oracle.hpp"
#include "mapforge/parallel.hpp"

namespace mapforge {

namespace {

bool connected(const std::vector<Dart>& alpha, const std::vector<Dart>& sigma) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (Dart d = 0; d < n; ++d)
    for (Dart y : {alpha[d], sigma[d]}) {
      int a = find(d), b = find(y);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
  return comps == 1;
}

int count_cycles(int n, auto&& step) {
  std::vector<char> seen(n, 0);
  int c = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++c;
    for (int x = d; !seen[x]; x = step(x)) seen[x] = 1;
  }
  return c;
}

int genus_of(const std::vector<Dart>& alpha, const std::vector<Dart>& sigma) {
  const int n = static_cast<int>(alpha.size());
  int v = count_cycles(n, [&](int d) { return sigma[d]; });
  int f = count_cycles(n, [&](int d) { return alpha[sigma[d]]; });
  return (2 - v + n / 2 - f) / 2;
}

std::vector<RotationMap> finish(std::vector<std::pair<std::vector<Dart>, std::vector<Dart>>>& raw) {
  std::vector<std::pair<std::string, RotationMap>> out;
  out.reserve(raw.size());
  for (auto& [a, s] : raw) {
    auto m = RotationMap::validate(a, s, 0);
    out.emplace_back(canonical_encoding(m), std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<RotationMap> maps;
  maps.reserve(out.size());
  for (auto& p : out) maps.push_back(std::move(p.second));
  return maps;
}

}  // namespace

std::vector<RotationMap> enumerate_rooted_maps(std::optional<int> genus, int n_edges, int jobs,
                                               int dart_bound) {
  const int n = 2 * n_edges;
  if (n > dart_bound) throw Error(ErrorCode::BoundExceeded, "2*n_edges exceeds dart bound");
  if (n_edges <= 0) throw Error(ErrorCode::BadInput, "n_edges must be positive");
  std::vector<Dart> alpha(n);
  for (Dart d = 0; d < n; ++d) alpha[d] = d ^ 1;

  std::set<std::string> codes;
  std::vector<std::pair<std::vector<Dart>, std::vector<Dart>>> raw;
  std::mutex mu;
  // One task per value of sigma(0); the rest of sigma runs through all permutations.
  parallel_tasks(n, jobs, [&](int first) {
    std::vector<Dart> sigma(n);
    sigma[0] = first;
    int k = 1;
    for (Dart d = 0; d < n; ++d)
      if (d != first) sigma[k++] = d;
    std::set<std::string> local;
    std::vector<std::pair<std::vector<Dart>, std::vector<Dart>>> found;
    do {
      if (!connected(alpha, sigma)) continue;
      if (genus && genus_of(alpha, sigma) != *genus) continue;
      auto code = encode_relabeled(alpha, sigma, {}, 0);
      if (local.insert(std::move(code)).second) found.emplace_back(alpha, sigma);
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    std::lock_guard lock(mu);
    for (std::size_t i = 0; i < found.size(); ++i) {
      auto code = encode_relabeled(found[i].first, found[i].second, {}, 0);
      if (codes.insert(std::move(code)).second) raw.push_back(std::move(found[i]));
    }
  });
  return finish(raw);
}

std::vector<RotationMap> enumerate_bc4valent(std::optional<int> genus, int n_vertices, int jobs,
                                             int dart_bound) {
  const int n = 4 * n_vertices;
  if (n > dart_bound) throw Error(ErrorCode::BoundExceeded, "4*n_vertices exceeds dart bound");
  if (n_vertices <= 0) throw Error(ErrorCode::BadInput, "n_vertices must be positive");
  std::vector<Dart> sigma(n);
  for (Dart d = 0; d < n; ++d) sigma[d] = (d % 4 == 3) ? d - 3 : d + 1;

  std::set<std::string> codes;
  std::vector<std::pair<std::vector<Dart>, std::vector<Dart>>> raw;
  std::mutex mu;
  parallel_tasks(n - 1, jobs, [&](int task) {
    const Dart partner0 = task + 1;
    std::vector<Dart> alpha(n, -1);
    alpha[0] = partner0;
    alpha[partner0] = 0;
    std::set<std::string> local;
    std::vector<std::pair<std::vector<Dart>, std::vector<Dart>>> found;
    auto consider = [&] {
      if (!connected(alpha, sigma)) return;
      if (genus && genus_of(alpha, sigma) != *genus) return;
      auto m = RotationMap::validate(alpha, sigma, 0);
      if (!is_bicolorable(m)) return;
      auto code = canonical_encoding(m);
      if (local.insert(std::move(code)).second) found.emplace_back(alpha, sigma);
    };
    auto rec = [&](auto&& self) -> void {
      Dart d = 0;
      while (d < n && alpha[d] != -1) ++d;
      if (d == n) {
        consider();
        return;
      }
      for (Dart y = d + 1; y < n; ++y) {
        if (alpha[y] != -1) continue;
        alpha[d] = y;
        alpha[y] = d;
        self(self);
        alpha[d] = alpha[y] = -1;
      }
    };
    rec(rec);
    std::lock_guard lock(mu);
    for (auto& f : found) {
      auto code = encode_relabeled(f.first, f.second, {}, 0);
      if (codes.insert(std::move(code)).second) raw.push_back(std::move(f));
    }
  });
  return finish(raw);
}

std::vector<RotationMap> enumerate_maps_upto(int max_edges, int max_genus, int jobs) {
  std::vector<RotationMap> out;
  for (int e = 1; e <= max_edges; ++e)
    for (auto& m : enumerate_rooted_maps(std::nullopt, e, jobs))
      if (m.genus() <= max_genus) out.push_back(std::move(m));
  return out;
}

}  // namespace mapforge
