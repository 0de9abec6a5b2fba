#include "mapforge/scheme.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "mapforge/error.hpp"
#include "mapforge/parallel.hpp"
#include "mapforge/surjection.hpp"
#include "mapforge/tour_generator.hpp"

namespace mapforge {

namespace {

int delta(Flow f) { return f == Flow::Out ? 1 : (f == Flow::In ? -1 : 0); }

// Interior darts surviving the removal of interior-degree-1 vertices.
std::vector<char> core_darts(const BlossomingMap& u) {
  if (u.genus() == 0) throw Error(ErrorCode::GenusZero, "planar maps have no scheme");
  const int n = u.n_darts();
  std::vector<char> alive(n, 0);
  std::vector<int> deg(u.num_vertices(), 0);
  for (Dart d = 0; d < n; ++d)
    if (!u.is_stem(d)) {
      alive[d] = 1;
      ++deg[u.vertex_of(d)];
    }
  std::deque<int> q;
  for (int v = 0; v < u.num_vertices(); ++v)
    if (deg[v] == 1) q.push_back(v);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (deg[v] != 1) continue;
    Dart x = -1;
    for (Dart d : u.vertices()[v])
      if (alive[d]) x = d;
    const Dart y = u.alpha(x);
    alive[x] = alive[y] = 0;
    --deg[v];
    const int w = u.vertex_of(y);
    if (--deg[w] == 1) q.push_back(w);
  }
  return alive;
}

// Does the tree hanging from the dead dart d (at a kept vertex) contain vertex target?
bool tree_contains(const BlossomingMap& u, Dart d, int target) {
  std::vector<Dart> stack{u.alpha(d)};
  while (!stack.empty()) {
    Dart entry = stack.back();
    stack.pop_back();
    const int w = u.vertex_of(entry);
    if (w == target) return true;
    for (Dart y : u.vertices()[w])
      if (y != entry && !u.is_stem(y)) stack.push_back(u.alpha(y));
  }
  return false;
}

Step classify(const std::vector<Flow>& side_a, const std::vector<Flow>& side_b) {
  if (side_a.size() == 1) return side_a[0] == Flow::Out ? Step::Up : Step::Down;
  if (side_a.size() == 2) return side_a[0] == Flow::Out ? Step::H1 : Step::H2;
  if (side_b.size() == 2) return side_b[0] == Flow::Out ? Step::H3 : Step::H4;
  throw Error(ErrorCode::BadInput, "degree-2 vertex without two stems");
}

int step_delta(Step s) { return s == Step::Up ? 1 : (s == Step::Down ? -1 : 0); }

}  // namespace

int MotzkinPath::delta() const {
  int d = 0;
  for (Step s : steps) d += step_delta(s);
  return d;
}

ExtendedScheme extended_scheme(const BlossomingMap& u) {
  const auto alive = core_darts(u);
  const int n = u.n_darts();
  std::vector<int> idx(n, -1);
  std::vector<Dart> back;
  for (Dart x : u.dart_tour())
    if (alive[x] && idx[x] == -1) {
      idx[x] = static_cast<int>(back.size());
      back.push_back(x);
    }
  for (Dart d = 0; d < n; ++d)
    if (alive[d] && idx[d] == -1) {
      idx[d] = static_cast<int>(back.size());
      back.push_back(d);
    }
  std::vector<Dart> a(back.size()), s(back.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const Dart d = back[i];
    a[i] = idx[u.alpha(d)];
    Dart y = u.sigma(d);
    while (!alive[y]) y = u.sigma(y);
    s[i] = idx[y];
  }
  return ExtendedScheme{RotationMap::validate(std::move(a), std::move(s), 0), std::move(back)};
}

PrunedMap prune(const BlossomingMap& u) {
  const auto alive = core_darts(u);
  const int n = u.n_darts();
  std::vector<char> kept_vertex(u.num_vertices(), 0);
  for (Dart d = 0; d < n; ++d)
    if (alive[d]) kept_vertex[u.vertex_of(d)] = 1;
  std::vector<int> idx(n, -1);
  std::vector<Dart> back;
  for (Dart d = 0; d < n; ++d)
    if (kept_vertex[u.vertex_of(d)]) {
      idx[d] = static_cast<int>(back.size());
      back.push_back(d);
    }
  const int m = static_cast<int>(back.size());
  const int root_vertex = u.vertex_of(u.root());
  std::vector<Dart> alpha(m), sigma(m);
  std::vector<Flow> flow(m);
  Dart root = kept_vertex[root_vertex] ? idx[u.root()] : -1;
  for (int i = 0; i < m; ++i) {
    const Dart d = back[i];
    sigma[i] = idx[u.sigma(d)];
    if (alive[d]) {
      alpha[i] = idx[u.alpha(d)];
      flow[i] = u.flow(d);
    } else if (u.is_stem(d)) {
      alpha[i] = i;
      flow[i] = u.flow(d);
    } else {
      alpha[i] = i;
      if (root == -1 && tree_contains(u, d, root_vertex)) {
        flow[i] = Flow::Out;
        root = i;
      } else {
        flow[i] = Flow::In;
      }
    }
  }
  PrunedMap p{compute_labels(BlossomingMap::validate(std::move(alpha), std::move(sigma), std::move(flow), root))};
  for (int v = 0; v < p.map.num_vertices(); ++v) {
    switch (p.map.interior_degree(v)) {
      case 2: ++p.v2; break;
      case 3: ++p.v3; break;
      case 4: ++p.v4; break;
      default: throw Error(ErrorCode::BadInput, "pruned vertex of interior degree below 2");
    }
  }
  return p;
}

bool is_pruned(const BlossomingMap& b) {
  for (int v = 0; v < b.num_vertices(); ++v)
    if (b.interior_degree(v) < 2) return false;
  return true;
}

bool is_scheme_rooted(const BlossomingMap& b) {
  return b.root() >= 0 && b.interior_degree(b.vertex_of(b.root())) >= 3;
}

std::vector<Dart> rootable_scheme_stems(const BlossomingMap& b) {
  std::vector<Dart> out;
  for (Dart d : b.stem_tour())
    if ((d == b.root() || b.is_leaf(d)) && b.interior_degree(b.vertex_of(d)) >= 3) out.push_back(d);
  return out;
}

Rerooted reroot_on_scheme(const BlossomingMap& p, Dart marked) {
  const auto ok = rootable_scheme_stems(p);
  if (std::find(ok.begin(), ok.end(), marked) == ok.end())
    throw Error(ErrorCode::MarkNotSchemeStem, "stem " + std::to_string(marked + 1));
  return reroot(p, marked);
}

std::vector<int> offset_labels(const BlossomingMap& scheme) {
  std::vector<int> off(scheme.n_darts(), 0);
  for (const auto& cyc : scheme.vertices()) {
    int cur = 0, lo = 0;
    off[cyc[0]] = 0;
    for (std::size_t i = 1; i < cyc.size(); ++i) {
      cur += delta(scheme.flow(cyc[i]));
      off[cyc[i]] = cur;
      lo = std::min(lo, cur);
    }
    if (cur + delta(scheme.flow(cyc[0])) != 0) throw Error(ErrorCode::BadInput, "vertex is not balanced");
    for (Dart d : cyc) off[d] -= lo;
  }
  return off;
}

MergedScheme merge_branches(const BlossomingMap& r_in) {
  if (!is_scheme_rooted(r_in)) throw Error(ErrorCode::NotSchemeRooted, "root vertex has interior degree below 3");
  const BlossomingMap r = r_in.labels().empty() ? compute_labels(r_in) : r_in;
  const auto& lab = r.labels();
  const int n = r.n_darts();
  std::vector<int> idx(n, -1);
  std::vector<Dart> back;
  for (int v = 0; v < r.num_vertices(); ++v) {
    if (r.interior_degree(v) < 3) continue;
    for (Dart d : r.vertices()[v]) {
      idx[d] = static_cast<int>(back.size());
      back.push_back(d);
    }
  }
  const int m = static_cast<int>(back.size());
  std::vector<Dart> alpha(m), sigma(m);
  std::vector<Flow> flow(m);
  std::vector<Branch> branches;
  for (int i = 0; i < m; ++i) {
    const Dart x = back[i];
    sigma[i] = idx[r.sigma(x)];
    flow[i] = r.flow(x);
    alpha[i] = i;
    if (r.is_stem(x)) continue;
    if (r.flow(x) == Flow::Both) throw Error(ErrorCode::NotSchemeRooted, "bi-oriented scheme edge");
    if (r.flow(x) != Flow::Out) continue;
    MotzkinPath path;
    path.start = lab[r.sigma_inv(x)];
    Dart y = r.alpha(x);
    while (idx[y] == -1) {
      if (r.flow(y) != Flow::In) throw Error(ErrorCode::NotSchemeRooted, "branch is not uniformly oriented");
      std::vector<Flow> side_a, side_b;
      Dart z = r.sigma(y);
      for (; r.is_stem(z); z = r.sigma(z)) side_a.push_back(r.flow(z));
      for (Dart w = r.sigma(z); w != y; w = r.sigma(w)) side_b.push_back(r.flow(w));
      if (r.flow(z) != Flow::Out) throw Error(ErrorCode::NotSchemeRooted, "branch is not uniformly oriented");
      path.steps.push_back(classify(side_a, side_b));
      y = r.alpha(z);
    }
    path.end = lab[y];
    if (path.end - path.start != path.delta())
      throw Error(ErrorCode::InconsistentLabeling, "branch heights do not match its labels");
    branches.push_back(Branch{i, idx[y], std::move(path)});
  }
  for (const auto& b : branches) {
    alpha[b.tail] = b.head;
    alpha[b.head] = b.tail;
  }
  MergedScheme out{LabeledScheme{BlossomingMap::validate(std::move(alpha), std::move(sigma), std::move(flow),
                                                         idx[r.root()]),
                                 {}, {}, {}},
                   std::move(branches)};
  auto& ls = out.scheme;
  ls.labels.resize(m);
  for (int i = 0; i < m; ++i) ls.labels[i] = lab[back[i]];
  ls.vertex_min.assign(ls.map.num_vertices(), 0);
  ls.offsets.resize(m);
  for (int v = 0; v < ls.map.num_vertices(); ++v) {
    int lo = ls.labels[ls.map.vertices()[v][0]];
    for (Dart d : ls.map.vertices()[v]) lo = std::min(lo, ls.labels[d]);
    ls.vertex_min[v] = lo;
    for (Dart d : ls.map.vertices()[v]) ls.offsets[d] = ls.labels[d] - lo;
  }
  if (ls.offsets != offset_labels(ls.map))
    throw Error(ErrorCode::InconsistentLabeling, "offset labels disagree with the flows");
  return out;
}

BlossomingMap expand_branches(const MergedScheme& ms) {
  const BlossomingMap& s = ms.scheme.map;
  std::vector<Dart> alpha(s.alpha_perm()), sigma(s.sigma_perm());
  std::vector<Flow> flow(s.flows());
  for (const auto& br : ms.branches) {
    Dart prev = br.tail;
    for (Step st : br.path.steps) {
      const Dart base = static_cast<Dart>(alpha.size());
      const Dart y = base, z = base + 1, bud = base + 2, leaf = base + 3;
      std::vector<Dart> ring;
      switch (st) {
        case Step::Up: ring = {y, bud, z, leaf}; break;
        case Step::Down: ring = {y, leaf, z, bud}; break;
        case Step::H1: ring = {y, bud, leaf, z}; break;
        case Step::H2: ring = {y, leaf, bud, z}; break;
        case Step::H3: ring = {y, z, bud, leaf}; break;
        case Step::H4: ring = {y, z, leaf, bud}; break;
      }
      alpha.resize(base + 4);
      sigma.resize(base + 4);
      flow.resize(base + 4);
      for (int k = 0; k < 4; ++k) sigma[ring[k]] = ring[(k + 1) % 4];
      alpha[bud] = bud;
      alpha[leaf] = leaf;
      flow[bud] = Flow::Out;
      flow[leaf] = Flow::In;
      flow[y] = Flow::In;
      flow[z] = Flow::Out;
      alpha[prev] = y;
      alpha[y] = prev;
      prev = z;
    }
    alpha[prev] = br.head;
    alpha[br.head] = prev;
  }
  return compute_labels(BlossomingMap::validate(std::move(alpha), std::move(sigma), std::move(flow), s.root()));
}

OffsetGraph offset_graph(const BlossomingMap& scheme) {
  const auto off = offset_labels(scheme);
  OffsetGraph g;
  g.n_vertices = scheme.num_vertices();
  auto end_type = [&](Dart x) { return std::min(off[scheme.sigma_inv(x)], off[x]); };
  for (Dart x = 0; x < scheme.n_darts(); ++x) {
    const Dart y = scheme.alpha(x);
    if (y <= x) continue;
    const int u = scheme.vertex_of(x), v = scheme.vertex_of(y);
    g.edges.push_back({u, v});
    const int tx = end_type(x), ty = end_type(y);
    if (tx != ty) g.arcs.push_back(tx == 0 ? std::make_pair(u, v) : std::make_pair(v, u));
  }
  std::vector<int> indeg(g.n_vertices, 0);
  std::vector<std::vector<int>> out(g.n_vertices);
  for (auto [u, v] : g.arcs) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::vector<int> ready;
  for (int v = 0; v < g.n_vertices; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    const int v = *it;
    ready.erase(it);
    g.order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(g.order.size()) != g.n_vertices)
    throw Error(ErrorCode::CycleDetected, "offset graph has a directed cycle");
  g.rank.assign(g.n_vertices, 0);
  for (int i = 0; i < g.n_vertices; ++i) g.rank[g.order[i]] = i;
  return g;
}

int scheme_v4(const BlossomingMap& scheme) {
  int v4 = 0;
  for (int v = 0; v < scheme.num_vertices(); ++v) v4 += scheme.interior_degree(v) == 4;
  return v4;
}

std::vector<BlossomingMap> enumerate_rooted_schemes(int genus, int jobs) {
  if (genus < 1) throw Error(ErrorCode::GenusZero, "schemes need genus >= 1");
  std::vector<std::pair<std::string, BlossomingMap>> found;
  std::mutex mu;
  for (int v4 = 0; v4 <= 2 * genus - 2; ++v4) {
    TourSpec spec;
    spec.genus = genus;
    spec.n_vertices = 4 * genus - 2 - v4;
    spec.labels = TourSpec::Labels::None;
    spec.max_stems_per_vertex = 1;
    spec.max_stems_root_vertex = 1;
    generate_tours(
        spec,
        [&](const BlossomingMap& b) {
          std::string key = blossoming_encoding(b);
          std::lock_guard<std::mutex> lock(mu);
          found.emplace_back(std::move(key), b);
        },
        jobs);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BlossomingMap> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::string unrooted_key(const BlossomingMap& b) {
  std::vector<int> tags(b.n_darts());
  std::vector<Dart> rootable;
  for (Dart d = 0; d < b.n_darts(); ++d) {
    if (!b.is_stem(d)) {
      tags[d] = 3;
    } else if (d == b.root() || b.is_leaf(d)) {
      tags[d] = 1;
      rootable.push_back(d);
    } else {
      tags[d] = 2;
    }
  }
  std::string best;
  for (Dart r : rootable) {
    std::string e = encode_relabeled(b.alpha_perm(), b.sigma_perm(), tags, r);
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

std::vector<std::vector<int>> group_by_unrooted(const std::vector<BlossomingMap>& schemes) {
  std::map<std::string, int> slot;
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(schemes.size()); ++i) {
    auto [it, fresh] = slot.emplace(unrooted_key(schemes[i]), static_cast<int>(groups.size()));
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

std::string graph_key(const OffsetGraph& g) {
  const int n = g.n_vertices;
  // vertices are first sorted by an invariant; only ties are permuted
  std::vector<std::array<int, 4>> inv(n, {0, 0, 0, 0});
  for (auto [u, v] : g.edges) {
    ++inv[u][0];
    ++inv[v][0];
    if (u == v) ++inv[u][1];
  }
  for (auto [u, v] : g.arcs) {
    ++inv[u][2];
    ++inv[v][3];
  }
  std::vector<int> by_inv(n);
  std::iota(by_inv.begin(), by_inv.end(), 0);
  std::sort(by_inv.begin(), by_inv.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<int> block_start(n);
  for (int i = 0; i < n; ++i) block_start[i] = i > 0 && inv[by_inv[i]] == inv[by_inv[i - 1]] ? block_start[i - 1] : i;

  std::vector<int> best;
  std::vector<int> order = by_inv, perm(n), code;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int k = 0; k < n; ++k) perm[order[k]] = k;
      code.clear();
      std::vector<std::pair<int, int>> e, a;
      for (auto [u, v] : g.edges) e.push_back(std::minmax(perm[u], perm[v]));
      for (auto [u, v] : g.arcs) a.push_back({perm[u], perm[v]});
      std::sort(e.begin(), e.end());
      std::sort(a.begin(), a.end());
      for (auto [u, v] : e) code.insert(code.end(), {u, v});
      code.push_back(-1);
      for (auto [u, v] : a) code.insert(code.end(), {u, v});
      if (best.empty() || code < best) best = code;
      return;
    }
    // choose which vertex of the current block takes position i
    for (int j = i; j < n && block_start[j] == block_start[i]; ++j) {
      std::swap(order[i], order[j]);
      rec(i + 1);
      std::swap(order[i], order[j]);
    }
  };
  rec(0);
  std::string key;
  for (int i = 0; i < n; ++i)
    for (int x : inv[by_inv[i]]) key += std::to_string(x) + ".";
  key += "|";
  for (int x : best) key += std::to_string(x) + ",";
  return key;
}

LaurentRational r_b_s(const OffsetGraph& g) {
  const int n = g.n_vertices;
  OffsetArcs arcs(g.arcs.begin(), g.arcs.end());
  // terms grouped by the sorted list of cut values
  std::map<std::vector<int>, std::map<int, long>> groups;
  for (const auto& o : enumerate_surjections(n)) {
    const int k = image_size(o);
    std::vector<int> cuts;
    int e = offset_exponent(o, arcs);
    for (int i = 1; i < k; ++i) {
      int c = 0;
      for (auto [u, v] : g.edges) c += (o[u] <= i) != (o[v] <= i);
      if (c == 0) throw Error(ErrorCode::BadInput, "scheme graph is disconnected");
      cuts.push_back(c);
      e += c;
    }
    std::sort(cuts.begin(), cuts.end());
    groups[cuts][e] += 1;
  }
  std::map<int, int> max_mult;
  int low = 0;
  bool first = true;
  for (const auto& [cuts, terms] : groups) {
    std::map<int, int> mult;
    for (int c : cuts) ++mult[c];
    for (auto [c, k] : mult) max_mult[c] = std::max(max_mult[c], k);
    for (const auto& [e, cnt] : terms)
      if (cnt != 0) {
        low = first ? e : std::min(low, e);
        first = false;
      }
  }
  Poly den = Poly::constant(1);
  for (auto [c, k] : max_mult) den = den * pow(Poly::constant(1) - Poly::monomial(c), k);
  Poly num;
  for (const auto& [cuts, terms] : groups) {
    std::map<int, int> mult;
    for (int c : cuts) ++mult[c];
    Poly factor = Poly::constant(1);
    for (auto [c, k] : max_mult) factor = factor * pow(Poly::constant(1) - Poly::monomial(c), k - mult[c]);
    Poly sum;
    for (const auto& [e, cnt] : terms) sum = sum + Poly::monomial(e - low, cnt);
    num = num + factor * sum;
  }
  const int ne = static_cast<int>(g.edges.size());
  return LaurentRational(low, std::move(num), std::move(den)) * pow(B_in_D(), ne);
}

LaurentRational r_b_s(const BlossomingMap& scheme) { return r_b_s(offset_graph(scheme)); }

TruncatedSeries r_b_s_by_heights(const OffsetGraph& g, int order) {
  const int n = g.n_vertices;
  const int hmax = order + static_cast<int>(g.arcs.size());
  // weight exponent of an edge: |h_v - h_u| when level, |h_v + 1 - h_u| when offset toward v
  struct Item {
    int u, v, shift;
  };
  std::vector<Item> items;
  std::multiset<std::pair<int, int>> arcset(g.arcs.begin(), g.arcs.end());
  for (auto [u, v] : g.edges) {
    auto it = arcset.find({u, v});
    if (it != arcset.end()) {
      items.push_back({u, v, 1});
      arcset.erase(it);
      continue;
    }
    it = arcset.find({v, u});
    if (it != arcset.end()) {
      items.push_back({v, u, 1});
      arcset.erase(it);
      continue;
    }
    items.push_back({u, v, 0});
  }
  std::vector<BigInt> count(order + 1);
  std::vector<int> h(n, 0);
  // items whose later endpoint is vertex i are charged when i is assigned
  std::vector<std::vector<int>> at(n);
  for (int k = 0; k < static_cast<int>(items.size()); ++k) at[std::max(items[k].u, items[k].v)].push_back(k);
  std::function<void(int, int, bool)> rec = [&](int i, int acc, bool has_zero) {
    if (i == n) {
      if (has_zero) count[acc] += 1;
      return;
    }
    for (int x = 0; x <= hmax; ++x) {
      h[i] = x;
      int a = acc;
      for (int k : at[i]) a += std::abs(h[items[k].v] + items[k].shift - h[items[k].u]);
      if (a <= order) rec(i + 1, a, has_zero || x == 0);
    }
  };
  rec(0, 0, false);
  std::vector<BigRat> c;
  for (const auto& x : count) c.emplace_back(x);
  const TruncatedSeries sum(order, std::move(c));
  return sum * expand_in_D(pow(B_in_D(), static_cast<int>(g.edges.size())), order);
}

MgResult assemble_Mg(int genus, int order, int jobs) {
  const auto census = enumerate_rooted_schemes(genus, jobs);
  if (census.empty()) throw Error(ErrorCode::CensusMissing, "no scheme of genus " + std::to_string(genus));
  MgResult res;
  res.genus = genus;
  res.order = order;
  res.n_rooted_schemes = static_cast<int>(census.size());
  res.n_unrooted_schemes = static_cast<int>(group_by_unrooted(census).size());

  // r_b_s only depends on the graph with its offset arcs
  std::map<std::pair<std::string, int>, long> multiplicity;
  std::map<std::string, OffsetGraph> graphs;
  for (const auto& s : census) {
    OffsetGraph g = offset_graph(s);
    std::string key = graph_key(g);
    ++multiplicity[{key, scheme_v4(s)}];
    graphs.emplace(key, std::move(g));
  }
  std::vector<std::string> keys;
  for (const auto& kv : graphs) keys.push_back(kv.first);
  std::vector<LaurentRational> values(keys.size());
  parallel_tasks(static_cast<int>(keys.size()), jobs, [&](int t) { values[t] = r_b_s(graphs.at(keys[t])); });
  std::map<std::string, LaurentRational> rbs;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!is_symmetric(values[i])) throw Error(ErrorCode::NotSymmetric, "r_b_s for graph " + keys[i]);
    rbs.emplace(keys[i], values[i]);
  }
  res.n_graph_classes = static_cast<int>(keys.size());

  // sum over rooted schemes of 2/(2g - v4) * z^(2g - v4 - 1) * R^b_s, as a function of D
  // terms sharing a denominator are added as polynomials before any gcd work
  struct Bucket {
    Poly den;
    std::vector<std::pair<int, Poly>> parts;  // D^low * num
  };
  std::map<int, std::map<std::string, Bucket>> by_v4;
  for (const auto& [kv, mult] : multiplicity) {
    const LaurentRational& f = rbs.at(kv.first);
    auto& bucket = by_v4[kv.second][f.den().to_string("D")];
    bucket.den = f.den();
    bucket.parts.push_back({f.low(), BigInt(mult) * f.num()});
  }
  LaurentRational total;
  for (const auto& [v4, buckets] : by_v4) {
    LaurentRational sum;
    for (const auto& [name, bucket] : buckets) {
      int low = bucket.parts.front().first;
      for (const auto& part : bucket.parts) low = std::min(low, part.first);
      Poly num;
      for (const auto& [l, p] : bucket.parts) num = num + Poly::monomial(l - low) * p;
      sum = sum + LaurentRational(low, std::move(num), bucket.den);
    }
    const int a = 2 * genus - v4;
    total = total + LaurentRational(0, Poly::constant(2), Poly::constant(a)) * pow(z_in_D(), a - 1) * sum;
  }
  const RationalZ q = rational_in_z(total);

  // M_g = t^(2g-2) T Q(T) with t = T(1 - 3T)
  const Poly t_of_T(std::vector<BigInt>{0, 1, -3});
  res.in_T = make_rational(pow(t_of_T, 2 * genus - 2) * Poly::monomial(1) * q.num, q.den);

  const TruncatedSeries T = series_T(order);
  const TruncatedSeries t = TruncatedSeries::variable(order);
  const TruncatedSeries qz = expand_in_z(total, order);
  const TruncatedSeries m = pow(t, 2 * genus - 2) * T * qz.compose(T);
  res.coefficients = m.integers();
  return res;
}

}  // namespace mapforge
