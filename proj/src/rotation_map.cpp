#include "mapforge/rotation_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mapforge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::FixedPointInAlpha: return "FixedPointInAlpha";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RootOutOfRange: return "RootOutOfRange";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotBicolorable: return "NotBicolorable";
    case ErrorCode::NotFlippable: return "NotFlippable";
    case ErrorCode::NotPushable: return "NotPushable";
    case ErrorCode::NotUnicellular: return "NotUnicellular";
    case ErrorCode::StemCountMismatch: return "StemCountMismatch";
    case ErrorCode::InconsistentLabeling: return "InconsistentLabeling";
    case ErrorCode::MarkNotRootable: return "MarkNotRootable";
    case ErrorCode::GenusZero: return "GenusZero";
    case ErrorCode::MarkNotSchemeStem: return "MarkNotSchemeStem";
    case ErrorCode::NotSchemeRooted: return "NotSchemeRooted";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::OffsetCycle: return "OffsetCycle";
    case ErrorCode::CensusMissing: return "CensusMissing";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

bool is_permutation_of_range(const std::vector<Dart>& p) {
  std::vector<char> seen(p.size(), 0);
  for (Dart x : p) {
    if (x < 0 || x >= static_cast<Dart>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Cycles of a permutation, each starting at its smallest element, listed by that element.
std::vector<std::vector<Dart>> cycles_of(int n, auto&& step) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(n, 0);
  for (Dart d = 0; d < n; ++d) {
    if (seen[d]) continue;
    auto& cyc = out.emplace_back();
    for (Dart x = d; !seen[x]; x = step(x)) {
      seen[x] = 1;
      cyc.push_back(x);
    }
  }
  return out;
}

}  // namespace

RotationMap RotationMap::validate(std::vector<Dart> alpha, std::vector<Dart> sigma, Dart root) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(sigma.size()) != n)
    throw Error(ErrorCode::BadInput, "alpha and sigma lengths differ");
  if (n == 0 || n % 2 != 0) throw Error(ErrorCode::BadInput, "dart count must be even and positive");
  if (root < 0 || root >= n) throw Error(ErrorCode::RootOutOfRange, "root " + std::to_string(root));
  if (!is_permutation_of_range(alpha)) throw Error(ErrorCode::NotPermutation, "alpha");
  if (!is_permutation_of_range(sigma)) throw Error(ErrorCode::NotPermutation, "sigma");
  for (Dart d = 0; d < n; ++d) {
    if (alpha[d] == d) throw Error(ErrorCode::FixedPointInAlpha, "dart " + std::to_string(d + 1));
    if (alpha[alpha[d]] != d) throw Error(ErrorCode::NotInvolution, "dart " + std::to_string(d + 1));
  }

  RotationMap m;
  m.alpha_ = std::move(alpha);
  m.sigma_ = std::move(sigma);
  m.root_ = root;
  m.sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart y : {m.alpha_[d], m.sigma_[d]}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "map is not connected");

  m.vertices_ = cycles_of(n, [&](Dart d) { return m.sigma_[d]; });
  m.faces_ = cycles_of(n, [&](Dart d) { return m.alpha_[m.sigma_[d]]; });
  m.vertex_of_.assign(n, 0);
  m.face_of_.assign(n, 0);
  m.edge_of_.assign(n, 0);
  for (int v = 0; v < m.num_vertices(); ++v)
    for (Dart d : m.vertices_[v]) m.vertex_of_[d] = v;
  for (int f = 0; f < m.num_faces(); ++f)
    for (Dart d : m.faces_[f]) m.face_of_[d] = f;
  for (Dart d = 0; d < n; ++d) {
    if (d < m.alpha_[d]) {
      m.edge_of_[d] = m.edge_of_[m.alpha_[d]] = static_cast<int>(m.edge_darts_.size());
      m.edge_darts_.push_back(d);
    }
  }
  const int chi = m.num_vertices() - m.num_edges() + m.num_faces();
  m.genus_ = (2 - chi) / 2;
  return m;
}

CornerNav RotationMap::corner(Dart d) const {
  return CornerNav{alpha_[sigma_[d]], sigma_[d], sigma_inv_[alpha_[d]], sigma_inv_[d],
                   edge_of_[sigma_[d]], edge_of_[d]};
}

DegreeProfile RotationMap::degree_profile() const {
  DegreeProfile p;
  p.edges = num_edges();
  p.genus = genus_;
  p.vertex_degrees.assign(n_darts() + 1, 0);
  p.face_degrees.assign(n_darts() + 1, 0);
  for (const auto& v : vertices_) ++p.vertex_degrees[v.size()];
  for (const auto& f : faces_) ++p.face_degrees[f.size()];
  return p;
}

int genus(const RotationMap& m) { return m.genus(); }

RotationMap dual(const RotationMap& m) {
  const int n = m.n_darts();
  std::vector<Dart> a(n), s(n);
  for (Dart d = 0; d < n; ++d) {
    s[d] = m.sigma_inv(m.alpha(d));
    a[d] = m.sigma_inv(m.alpha(m.sigma(d)));
  }
  return RotationMap::validate(std::move(a), std::move(s), m.root());
}

RotationMap radial(const RotationMap& m) {
  const int n = m.n_darts();
  std::vector<Dart> a(2 * n), s(2 * n);
  for (Dart d = 0; d < n; ++d) {
    a[2 * d] = 2 * d + 1;
    a[2 * d + 1] = 2 * d;
    s[2 * d] = 2 * m.sigma_inv(d) + 1;
    s[2 * d + 1] = 2 * m.alpha(m.sigma(d));
  }
  return RotationMap::validate(std::move(a), std::move(s), 2 * m.root());
}

RotationMap reflect(const RotationMap& m) {
  const int n = m.n_darts();
  std::vector<Dart> a(m.alpha_perm().begin(), m.alpha_perm().end());
  std::vector<Dart> s(n);
  for (Dart d = 0; d < n; ++d) s[d] = m.sigma_inv(d);
  return RotationMap::validate(std::move(a), std::move(s), m.sigma(m.root()));
}

namespace {

// 2-coloring of the classes of `cls` where darts d and alpha(d) must differ.
std::optional<std::vector<int>> two_color(const RotationMap& m, const std::vector<int>& cls,
                                          int n_classes, auto&& partner) {
  std::vector<int> color(n_classes, -1);
  std::vector<std::vector<int>> adj(n_classes);
  for (Dart d = 0; d < m.n_darts(); ++d) adj[cls[d]].push_back(cls[partner(d)]);
  for (int s = 0; s < n_classes; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

std::optional<std::vector<int>> is_bipartite(const RotationMap& m) {
  std::vector<int> cls(m.n_darts());
  for (Dart d = 0; d < m.n_darts(); ++d) cls[d] = m.vertex_of(d);
  return two_color(m, cls, m.num_vertices(), [&](Dart d) { return m.alpha(d); });
}

std::optional<std::vector<int>> is_bicolorable(const RotationMap& m) {
  // Dart d separates corner c(sigma^-1 d) from corner c(d).
  std::vector<int> cls(m.n_darts());
  for (Dart d = 0; d < m.n_darts(); ++d) cls[d] = m.face_of(d);
  return two_color(m, cls, m.num_faces(), [&](Dart d) { return m.sigma_inv(d); });
}

EdgeSet complement_submap(const EdgeSet& s, const RotationMap& m) {
  if (static_cast<int>(s.size()) != m.num_edges())
    throw Error(ErrorCode::BadInput, "edge subset size mismatch");
  EdgeSet out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = !s[i];
  return out;
}

std::vector<int> canonical_relabeling(std::span<const Dart> alpha, std::span<const Dart> sigma,
                                      Dart root) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> label(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  label[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart d = order[i];
    for (Dart y : {alpha[d], sigma[d]}) {
      if (label[y] == -1) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::Disconnected, "relabeling");
  return label;
}

std::string encode_relabeled(std::span<const Dart> alpha, std::span<const Dart> sigma,
                             std::span<const int> tags, Dart root) {
  const auto label = canonical_relabeling(alpha, sigma, root);
  const int n = static_cast<int>(alpha.size());
  std::vector<Dart> inv(n);
  for (Dart d = 0; d < n; ++d) inv[label[d]] = d;
  // After BFS relabeling alpha and sigma are determined by their values in BFS
  // order, so the string of (alpha, sigma, tag) triples is a complete invariant.
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * 3 + 4);
  auto put = [&](int x) {
    out.push_back(static_cast<char>(x & 0xff));
    out.push_back(static_cast<char>((x >> 8) & 0xff));
  };
  put(n);
  for (int i = 0; i < n; ++i) {
    Dart d = inv[i];
    put(label[alpha[d]]);
    put(label[sigma[d]]);
    if (!tags.empty()) out.push_back(static_cast<char>(tags[d]));
  }
  return out;
}

std::string canonical_encoding(const RotationMap& m) {
  return encode_relabeled(m.alpha_perm(), m.sigma_perm(), {}, m.root());
}

RotationMap relabel(const RotationMap& m, std::span<const int> perm) {
  const int n = m.n_darts();
  std::vector<Dart> a(n), s(n);
  for (Dart d = 0; d < n; ++d) {
    a[perm[d]] = perm[m.alpha(d)];
    s[perm[d]] = perm[m.sigma(d)];
  }
  return RotationMap::validate(std::move(a), std::move(s), perm[m.root()]);
}

}  // namespace mapforge
