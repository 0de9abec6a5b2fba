#include "mapforge/blossoming.hpp"

#include <algorithm>
#include <deque>

namespace mapforge {

namespace {

int delta(Flow f) { return f == Flow::Out ? 1 : (f == Flow::In ? -1 : 0); }

bool is_perm(const std::vector<Dart>& p) {
  std::vector<char> seen(p.size(), 0);
  for (Dart x : p) {
    if (x < 0 || x >= static_cast<Dart>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

BlossomingMap BlossomingMap::validate(std::vector<Dart> alpha, std::vector<Dart> sigma,
                                      std::vector<Flow> flow, Dart root_bud, std::vector<int> labels) {
  const int n = static_cast<int>(alpha.size());
  if (root_bud < 0 || root_bud >= n)
    throw Error(ErrorCode::RootOutOfRange, "root " + std::to_string(root_bud + 1));
  if (!is_perm(sigma)) throw Error(ErrorCode::NotPermutation, "sigma");
  if (static_cast<int>(flow.size()) != n || alpha[root_bud] != root_bud || flow[root_bud] != Flow::Out)
    throw Error(ErrorCode::BadInput, "root must be a bud");
  Dart corner = 0;
  while (sigma[corner] != root_bud) ++corner;
  return validate_corner(std::move(alpha), std::move(sigma), std::move(flow), corner, std::move(labels));
}

BlossomingMap BlossomingMap::validate_corner(std::vector<Dart> alpha, std::vector<Dart> sigma,
                                             std::vector<Flow> flow, Dart root, std::vector<int> labels) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(flow.size()) != n)
    throw Error(ErrorCode::BadInput, "array lengths differ");
  if (n == 0) throw Error(ErrorCode::BadInput, "empty blossoming map");
  if (root < 0 || root >= n) throw Error(ErrorCode::RootOutOfRange, "root corner " + std::to_string(root + 1));
  if (!is_perm(alpha)) throw Error(ErrorCode::NotPermutation, "alpha");
  if (!is_perm(sigma)) throw Error(ErrorCode::NotPermutation, "sigma");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::BadInput, "one label per corner expected");
  int buds = 0, leaves = 0, interior = 0;
  for (Dart d = 0; d < n; ++d) {
    if (alpha[alpha[d]] != d) throw Error(ErrorCode::NotInvolution, "dart " + std::to_string(d + 1));
    if (alpha[d] == d) {
      if (flow[d] == Flow::Out) ++buds;
      else if (flow[d] == Flow::In) ++leaves;
      else throw Error(ErrorCode::BadInput, "stem cannot be bi-oriented");
    } else {
      ++interior;
      Flow a = flow[d], b = flow[alpha[d]];
      bool ok = (a == Flow::Both && b == Flow::Both) || (a == Flow::In && b == Flow::Out) ||
                (a == Flow::Out && b == Flow::In);
      if (!ok) throw Error(ErrorCode::BadInput, "inconsistent edge direction at dart " + std::to_string(d + 1));
    }
  }
  if (buds != leaves) throw Error(ErrorCode::StemCountMismatch, std::to_string(buds) + " buds, " +
                                                                  std::to_string(leaves) + " leaves");

  BlossomingMap b;
  b.alpha_ = std::move(alpha);
  b.sigma_ = std::move(sigma);
  b.flow_ = std::move(flow);
  b.labels_ = std::move(labels);
  b.root_corner_ = root;
  b.n_interior_edges_ = interior / 2;
  b.sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) b.sigma_inv_[b.sigma_[d]] = d;

  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart y : {b.alpha_[d], b.sigma_[d]})
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "blossoming map is not connected");

  b.vertex_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (b.vertex_of_[d] != -1) continue;
    int v = static_cast<int>(b.vertices_.size());
    auto& cyc = b.vertices_.emplace_back();
    for (Dart x = d; b.vertex_of_[x] == -1; x = b.sigma_[x]) {
      b.vertex_of_[x] = v;
      cyc.push_back(x);
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (Dart d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++b.num_faces_;
    for (Dart x = d; !seen[x]; x = b.alpha_[b.sigma_[x]]) seen[x] = 1;
  }
  b.genus_ = (2 - b.num_vertices() + b.n_interior_edges_ - b.num_faces_) / 2;
  // Root bud: first stem on the face walk from the root corner.
  Dart d = root;
  do {
    Dart x = b.sigma_[d];
    if (b.alpha_[x] == x) {
      b.root_ = x;
      break;
    }
    d = b.alpha_[x];
  } while (d != root);
  if (b.root_ >= 0 && b.flow_[b.root_] != Flow::Out)
    throw Error(ErrorCode::BadInput, "first stem after the root corner must be a bud");
  return b;
}

int BlossomingMap::interior_degree(int v) const {
  int k = 0;
  for (Dart d : vertices_[v]) k += !is_stem(d);
  return k;
}

std::vector<Dart> BlossomingMap::dart_tour() const {
  if (!is_unicellular()) throw Error(ErrorCode::NotUnicellular, "tour needs a single face");
  std::vector<Dart> out;
  out.reserve(n_darts());
  const Dart start = root_corner_;
  Dart d = start;
  do {
    Dart x = sigma_[d];
    out.push_back(x);
    d = alpha_[x];
  } while (d != start);
  return out;
}

std::vector<Dart> BlossomingMap::stem_tour() const {
  std::vector<Dart> out;
  for (Dart x : dart_tour())
    if (is_stem(x)) out.push_back(x);
  return out;
}

BlossomingMap BlossomingMap::with_flows(std::vector<Flow> flow) const {
  return validate_corner(alpha_, sigma_, std::move(flow), root_corner_);
}

BlossomingMap BlossomingMap::with_labels(std::vector<int> labels) const {
  BlossomingMap b = *this;
  if (!labels.empty() && static_cast<int>(labels.size()) != n_darts())
    throw Error(ErrorCode::BadInput, "one label per corner expected");
  b.labels_ = std::move(labels);
  return b;
}

BlossomingMap BlossomingMap::with_root(Dart root) const { return validate(alpha_, sigma_, flow_, root); }

std::optional<std::pair<RotationMap, std::vector<Dart>>> interior_map(const BlossomingMap& b) {
  if (b.num_interior_edges() == 0) return std::nullopt;
  const int n = b.n_darts();
  std::vector<int> idx(n, -1);
  std::vector<Dart> back;
  for (Dart d = 0; d < n; ++d)
    if (!b.is_stem(d)) {
      idx[d] = static_cast<int>(back.size());
      back.push_back(d);
    }
  std::vector<Dart> a(back.size()), s(back.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    Dart d = back[i];
    a[i] = idx[b.alpha(d)];
    Dart y = b.sigma(d);
    while (b.is_stem(y)) y = b.sigma(y);
    s[i] = idx[y];
  }
  Dart r = b.root_corner();
  while (b.is_stem(r)) r = b.sigma_inv(r);
  return std::make_pair(RotationMap::validate(std::move(a), std::move(s), idx[r]), std::move(back));
}

std::string blossoming_encoding(const BlossomingMap& b) {
  std::vector<int> tags(b.n_darts());
  for (Dart d = 0; d < b.n_darts(); ++d) tags[d] = static_cast<int>(b.flow(d));
  return encode_relabeled(b.alpha_perm(), b.sigma_perm(), tags, b.root_corner());
}

std::string blossoming_encoding_undirected(const BlossomingMap& b) {
  std::vector<int> tags(b.n_darts());
  for (Dart d = 0; d < b.n_darts(); ++d) tags[d] = b.is_stem(d) ? static_cast<int>(b.flow(d)) : 3;
  return encode_relabeled(b.alpha_perm(), b.sigma_perm(), tags, b.root_corner());
}

std::vector<int> ContourWord::heights() const {
  std::vector<int> h;
  h.reserve(letters.size());
  int cur = 0;
  for (char c : letters) h.push_back(cur += (c == 'U' ? 1 : -1));
  return h;
}

bool ContourWord::is_dyck() const {
  for (int h : heights())
    if (h < 0) return false;
  return true;
}

ContourWord contour_word(const BlossomingMap& b) {
  ContourWord w;
  for (Dart s : b.stem_tour()) w.letters.push_back(b.is_bud(s) ? 'U' : 'D');
  return w;
}

Orientation ClosedMap::full_orientation() const {
  for (Dart h : orientation.head)
    if (h == kBioriented) throw Error(ErrorCode::BadInput, "closed map has bi-oriented edges");
  return Orientation{orientation.head};
}

ClosedMap close(const BlossomingMap& b) {
  auto stems = b.stem_tour();
  const int L = static_cast<int>(stems.size());
  // Start right after the lowest point so that the rotated word is a Dyck path.
  int start = 0, h = 0, best = 0;
  for (int i = 0; i < L; ++i) {
    h += b.is_bud(stems[i]) ? 1 : -1;
    if (h < best) {
      best = h;
      start = i + 1;
    }
  }
  std::vector<Dart> alpha = b.alpha_perm();
  std::vector<Dart> open_buds;
  for (int k = 0; k < L; ++k) {
    Dart s = stems[(start + k) % L];
    if (b.is_bud(s)) {
      open_buds.push_back(s);
    } else {
      Dart u = open_buds.back();
      open_buds.pop_back();
      alpha[u] = s;
      alpha[s] = u;
    }
  }
  auto m = RotationMap::validate(std::move(alpha), b.sigma_perm(), b.root_corner());
  HalfOrientation o;
  o.head.resize(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e);
    o.head[e] = b.flow(d) == Flow::Both ? kBioriented : (b.flow(d) == Flow::In ? d : m.alpha(d));
  }
  return ClosedMap{std::move(m), std::move(o)};
}

std::optional<std::vector<int>> corner_labels(const std::vector<Dart>& alpha,
                                              const std::vector<Dart>& sigma,
                                              const std::vector<Flow>& flow, Dart base_corner) {
  const int n = static_cast<int>(alpha.size());
  std::vector<Dart> sinv(n);
  for (Dart d = 0; d < n; ++d) sinv[sigma[d]] = d;
  // Constraint arcs: c(sigma^-1 x) -> c(x) with step delta(x); c(sigma^-1 x) == c(alpha x).
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (Dart x = 0; x < n; ++x) {
    int from = sinv[x];
    adj[from].push_back({x, delta(flow[x])});
    adj[x].push_back({from, -delta(flow[x])});
    if (alpha[x] != x) {
      adj[from].push_back({alpha[x], 0});
      adj[alpha[x]].push_back({from, 0});
    }
  }
  std::vector<int> label(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<int> q{base_corner};
  seen[base_corner] = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    for (auto [w, s] : adj[c]) {
      if (!seen[w]) {
        seen[w] = 1;
        label[w] = label[c] + s;
        q.push_back(w);
      } else if (label[w] != label[c] + s) {
        return std::nullopt;
      }
    }
  }
  return label;
}

BlossomingMap compute_labels(const BlossomingMap& b) {
  auto l = corner_labels(b.alpha_perm(), b.sigma_perm(), b.flows(), b.root_corner());
  if (!l) throw Error(ErrorCode::InconsistentLabeling, "no labeling matches the orientation");
  return b.with_labels(std::move(*l));
}

bool is_well_labeled(const BlossomingMap& b) {
  if (b.labels().empty()) return false;
  auto l = corner_labels(b.alpha_perm(), b.sigma_perm(), b.flows(), b.root_corner());
  return l && *l == b.labels();
}

namespace {

// Walks the corners from the root corner and cuts edges as in the opening
// algorithm. Returns alpha with cut edges turned into pairs of stems.
std::vector<Dart> opening_walk(const RotationMap& m, const HalfOrientation& h) {
  const int n = m.n_darts();
  std::vector<Dart> alpha(m.alpha_perm().begin(), m.alpha_perm().end());
  std::vector<char> visited(m.num_edges(), 0);
  Dart d = m.root();
  long guard = 4L * n + 4;
  do {
    if (--guard < 0) throw Error(ErrorCode::BadInput, "opening walk did not return to the root corner");
    Dart x = m.sigma(d);
    int e = m.edge_of(x);
    bool bi = h.head[e] == kBioriented;
    bool incoming = !bi && h.head[e] == x;
    if (!visited[e]) {
      visited[e] = 1;
      if (incoming || bi) {
        d = m.alpha(x);
      } else {
        alpha[m.alpha(x)] = m.alpha(x);
        alpha[x] = x;
        d = x;
      }
    } else {
      d = (incoming && alpha[x] == x) ? x : m.alpha(x);
    }
  } while (d != m.root());
  return alpha;
}

}  // namespace

EdgeSet opening_kept_edges(const RotationMap& m, const HalfOrientation& h) {
  auto alpha = opening_walk(m, h);
  EdgeSet kept(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) kept[e] = alpha[m.edge_dart(e)] != m.edge_dart(e);
  return kept;
}

BlossomingMap fractional_open(const RotationMap& m, const HalfOrientation& h) {
  const int n = m.n_darts();
  std::vector<Flow> flow(n);
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e);
    if (h.head[e] == kBioriented) {
      flow[d] = flow[m.alpha(d)] = Flow::Both;
    } else {
      flow[h.head[e]] = Flow::In;
      flow[m.alpha(h.head[e])] = Flow::Out;
    }
  }
  auto alpha = opening_walk(m, h);
  std::vector<Dart> sigma(m.sigma_perm().begin(), m.sigma_perm().end());
  auto b = BlossomingMap::validate_corner(std::move(alpha), std::move(sigma), std::move(flow), m.root());
  if (auto l = corner_labels(b.alpha_perm(), b.sigma_perm(), b.flows(), b.root_corner()))
    return b.with_labels(std::move(*l));
  return b;
}

BlossomingMap open(const RotationMap& m, const Orientation& o) { return fractional_open(m, to_half(o)); }

bool is_well_rooted(const BlossomingMap& b) { return contour_word(b).is_dyck(); }

std::vector<Dart> rootable_stems(const BlossomingMap& b) {
  std::vector<Dart> out;
  for (Dart s : b.stem_tour())
    if (s == b.root() || b.is_leaf(s)) out.push_back(s);
  return out;
}

std::vector<Dart> well_rootable_stems(const BlossomingMap& b) {
  auto stems = b.stem_tour();
  std::vector<int> h(stems.size() + 1, 0);
  for (std::size_t i = 0; i < stems.size(); ++i)
    h[i + 1] = h[i] + ((i > 0 && b.is_bud(stems[i])) ? 1 : -1);
  const int low = *std::min_element(h.begin(), h.end());
  Dart first = -1, second = -1;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    if (first < 0 && h[i] == low + 2 && h[i + 1] == low + 1) first = stems[i];
    if (second < 0 && h[i] == low + 1 && h[i + 1] == low) second = stems[i];
  }
  return {first, second};
}

bool is_well_oriented(const BlossomingMap& b) {
  std::vector<char> seen(b.n_darts(), 0);
  for (Dart x : b.dart_tour()) {
    if (b.is_stem(x) || seen[x]) continue;
    seen[x] = seen[b.alpha(x)] = 1;
    if (b.flow(x) == Flow::Out) return false;
  }
  return true;
}

bool is_well_oriented_reverse_tour(const BlossomingMap& b) {
  // Counterclockwise walk: from c(d) back to c(sigma^-1(alpha d)), leaving through dart d.
  if (!b.is_unicellular()) throw Error(ErrorCode::NotUnicellular, "tour needs a single face");
  std::vector<char> seen(b.n_darts(), 0);
  const Dart start = b.sigma(b.root_corner());
  Dart d = start;
  do {
    if (!b.is_stem(d) && !seen[d]) {
      seen[d] = seen[b.alpha(d)] = 1;
      if (b.flow(d) == Flow::Out) return false;
    }
    d = b.sigma_inv(b.alpha(d));
  } while (d != start);
  return true;
}

BlossomingMap well_orient(const BlossomingMap& b) {
  std::vector<Flow> flow = b.flows();
  std::vector<char> seen(b.n_darts(), 0);
  for (Dart x : b.dart_tour()) {
    if (b.is_stem(x) || seen[x]) continue;
    seen[x] = seen[b.alpha(x)] = 1;
    if (flow[x] == Flow::Both) continue;
    flow[x] = Flow::In;
    flow[b.alpha(x)] = Flow::Out;
  }
  return b.with_flows(std::move(flow));
}

bool in_class_O(const BlossomingMap& b) {
  if (!b.is_unicellular() || !is_well_rooted(b) || !is_well_oriented(b)) return false;
  return corner_labels(b.alpha_perm(), b.sigma_perm(), b.flows(), b.root_corner()).has_value();
}

Rerooted reroot(const BlossomingMap& b, Dart marked) {
  if (marked == b.root()) return Rerooted{b, marked};
  if (marked < 0 || marked >= b.n_darts() || !b.is_leaf(marked))
    throw Error(ErrorCode::MarkNotRootable, "stem " + std::to_string(marked + 1));
  std::vector<Flow> flow = b.flows();
  flow[b.root()] = Flow::In;
  flow[marked] = Flow::Out;
  auto moved = BlossomingMap::validate(b.alpha_perm(), b.sigma_perm(), std::move(flow), marked);
  return Rerooted{compute_labels(well_orient(moved)), b.root()};
}

}  // namespace mapforge
