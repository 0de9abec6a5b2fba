#include "mapforge/orientation.hpp"

#include <deque>

namespace mapforge {

Orientation validate_orientation(const RotationMap& m, std::vector<Dart> heads) {
  if (static_cast<int>(heads.size()) != m.num_edges())
    throw Error(ErrorCode::BadInput, "orientation needs one head per edge");
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e);
    if (heads[e] != d && heads[e] != m.alpha(d))
      throw Error(ErrorCode::BadInput, "head of edge " + std::to_string(e) + " is not one of its darts");
  }
  return Orientation{std::move(heads)};
}

HalfOrientation validate_half_orientation(const RotationMap& m, std::vector<Dart> heads) {
  if (static_cast<int>(heads.size()) != m.num_edges())
    throw Error(ErrorCode::BadInput, "half-orientation needs one entry per edge");
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e);
    if (heads[e] != d && heads[e] != m.alpha(d) && heads[e] != kBioriented)
      throw Error(ErrorCode::BadInput, "bad head for edge " + std::to_string(e));
  }
  return HalfOrientation{std::move(heads)};
}

std::vector<int> vertex_distances(const RotationMap& m) {
  std::vector<int> dist(m.num_vertices(), -1);
  std::deque<int> q{m.root_vertex()};
  dist[m.root_vertex()] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (Dart d : m.vertices()[u]) {
      int w = m.vertex_of(m.alpha(d));
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

Orientation geodesic_orientation(const RotationMap& m) {
  if (!is_bipartite(m)) throw Error(ErrorCode::NotBipartite, "geodesic orientation needs a bipartite map");
  auto dist = vertex_distances(m);
  Orientation o;
  o.head.resize(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e);
    o.head[e] = dist[m.vertex_of(d)] < dist[m.vertex_of(m.alpha(d))] ? d : m.alpha(d);
  }
  return o;
}

Orientation dual_orientation(const RotationMap& m, const Orientation& o) {
  RotationMap dm = dual(m);
  Orientation out;
  out.head.resize(dm.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart x = m.sigma_inv(o.head[e]);
    out.head[dm.edge_of(x)] = x;
  }
  return out;
}

Orientation dual_geodesic_orientation(const RotationMap& m) {
  if (!is_bicolorable(m))
    throw Error(ErrorCode::NotBicolorable, "dual-geodesic orientation needs a bicolorable map");
  RotationMap dm = dual(m);
  Orientation g = geodesic_orientation(dm);
  Orientation o;
  o.head.resize(m.num_edges());
  for (Dart x : g.head) {
    Dart h = m.alpha(m.sigma(x));
    o.head[m.edge_of(h)] = h;
  }
  return o;
}

bool is_bipartite_orientation(const RotationMap& m, const Orientation& o) {
  // Potential phi with phi(head) = phi(tail) - 1 on every edge: propagate along
  // a BFS tree, then check every edge.
  std::vector<long> phi(m.num_vertices(), 0);
  std::vector<char> seen(m.num_vertices(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  auto step = [&](Dart d) { return is_head(o, m, d) ? 1L : -1L; };  // phi(other end) - phi(here)
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (Dart d : m.vertices()[u]) {
      int w = m.vertex_of(m.alpha(d));
      if (!seen[w]) {
        seen[w] = 1;
        phi[w] = phi[u] + step(d);
        q.push_back(w);
      }
    }
  }
  for (Dart d = 0; d < m.n_darts(); ++d)
    if (phi[m.vertex_of(m.alpha(d))] != phi[m.vertex_of(d)] + step(d)) return false;
  return true;
}

bool is_bicolorable_orientation(const RotationMap& m, const Orientation& o) {
  return is_bipartite_orientation(dual(m), dual_orientation(m, o));
}

bool is_clockwise_face(const RotationMap& m, const Orientation& o, int face) {
  for (Dart d : m.faces()[face])
    if (is_head(o, m, m.sigma(d))) return false;
  return true;
}

bool is_counterclockwise_face(const RotationMap& m, const Orientation& o, int face) {
  for (Dart d : m.faces()[face])
    if (!is_head(o, m, m.sigma(d))) return false;
  return true;
}

bool is_sink(const RotationMap& m, const Orientation& o, int vertex) {
  for (Dart d : m.vertices()[vertex])
    if (!is_head(o, m, d)) return false;
  return true;
}

Orientation reverse_all(const Orientation& o, const RotationMap& m) {
  Orientation r = o;
  for (auto& h : r.head) h = m.alpha(h);
  return r;
}

namespace {

Orientation reverse_face(const RotationMap& m, Orientation o, int face) {
  for (Dart d : m.faces()[face]) {
    int e = m.edge_of(m.sigma(d));
    o.head[e] = m.alpha(o.head[e]);
  }
  return o;
}

}  // namespace

Orientation face_flip(const RotationMap& m, const Orientation& o, int face) {
  if (face == m.root_face() || !is_clockwise_face(m, o, face))
    throw Error(ErrorCode::NotFlippable, "face " + std::to_string(face));
  return reverse_face(m, o, face);
}

Orientation face_unflip(const RotationMap& m, const Orientation& o, int face) {
  if (face == m.root_face() || !is_counterclockwise_face(m, o, face))
    throw Error(ErrorCode::NotFlippable, "face " + std::to_string(face));
  return reverse_face(m, o, face);
}

Orientation vertex_push(const RotationMap& m, const Orientation& o, int vertex) {
  if (vertex == m.root_vertex() || !is_sink(m, o, vertex))
    throw Error(ErrorCode::NotPushable, "vertex " + std::to_string(vertex));
  Orientation r = o;
  for (Dart d : m.vertices()[vertex]) r.head[m.edge_of(d)] = m.alpha(d);
  return r;
}

Orientation minimize_by_flips(const RotationMap& m, Orientation o, int* flips) {
  int count = 0;
  for (;;) {
    int target = -1;
    for (int f = 0; f < m.num_faces() && target < 0; ++f)
      if (f != m.root_face() && is_clockwise_face(m, o, f)) target = f;
    if (target < 0) break;
    o = reverse_face(m, std::move(o), target);
    ++count;
  }
  if (flips) *flips = count;
  return o;
}

std::vector<Orientation> all_orientations(const RotationMap& m) {
  const int e = m.num_edges();
  if (e > 24) throw Error(ErrorCode::BoundExceeded, "too many edges for exhaustive orientations");
  std::vector<Orientation> out;
  out.reserve(std::size_t{1} << e);
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    Orientation o;
    o.head.resize(e);
    for (int i = 0; i < e; ++i) {
      Dart d = m.edge_dart(i);
      o.head[i] = (mask >> i & 1u) ? m.alpha(d) : d;
    }
    out.push_back(std::move(o));
  }
  return out;
}

RotationMap double_faces(const RotationMap& m) {
  const int n = m.n_darts();
  std::vector<Dart> a(2 * n), s(2 * n);
  for (Dart d = 0; d < n; ++d) {
    a[2 * d] = 2 * m.alpha(d) + 1;
    a[2 * d + 1] = 2 * m.alpha(d);
    s[2 * d] = 2 * d + 1;
    s[2 * d + 1] = 2 * m.sigma(d);
  }
  return RotationMap::validate(std::move(a), std::move(s), 2 * m.root() + 1);
}

RotationMap double_vertices(const RotationMap& m) {
  const int n = m.n_darts();
  std::vector<Dart> a(2 * n), s(2 * n);
  for (Dart d = 0; d < n; ++d) s[d] = m.sigma(d);
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e), d2 = m.alpha(d);
    Dart x = n + 2 * e, y = n + 2 * e + 1;
    a[d] = x;
    a[x] = d;
    a[d2] = y;
    a[y] = d2;
    s[x] = y;
    s[y] = x;
  }
  return RotationMap::validate(std::move(a), std::move(s), m.root());
}

HalfOrientation geodesic_half_orientation(const RotationMap& m) {
  auto dist = vertex_distances(m);
  HalfOrientation h;
  h.head.resize(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e);
    int a = dist[m.vertex_of(d)], b = dist[m.vertex_of(m.alpha(d))];
    h.head[e] = a < b ? d : (b < a ? m.alpha(d) : kBioriented);
  }
  return h;
}

HalfOrientation dual_geodesic_half_orientation(const RotationMap& m) {
  RotationMap mp = double_faces(m);
  Orientation o = dual_geodesic_orientation(mp);
  HalfOrientation h;
  h.head.resize(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) {
    Dart d = m.edge_dart(e);
    Dart h1 = o.head[mp.edge_of(2 * d)] / 2;
    Dart h2 = o.head[mp.edge_of(2 * d + 1)] / 2;
    h.head[e] = h1 == h2 ? h1 : kBioriented;
  }
  return h;
}

bool is_clockwise_face_half(const RotationMap& m, const HalfOrientation& h, int face) {
  for (Dart d : m.faces()[face])
    if (h.head[m.edge_of(m.sigma(d))] == m.sigma(d)) return false;
  return true;
}

HalfOrientation to_half(const Orientation& o) { return HalfOrientation{o.head}; }

}  // namespace mapforge
