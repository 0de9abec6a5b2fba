#include "mapforge/tour_generator.hpp"

#include <atomic>
#include <cstdlib>

#include "mapforge/parallel.hpp"

namespace mapforge {

namespace {

enum Kind : std::int8_t { kNone = -1, kBud = 0, kLeaf = 1, kOpen = 2, kClose = 3 };

class TourSearch {
 public:
  explicit TourSearch(const TourSpec& spec) : spec_(spec) {
    n_ = 4 * spec.n_vertices;
    pairs_ = spec.n_vertices - 1 + 2 * spec.genus;
    stems_ = n_ - 2 * pairs_;
    empty_ = pairs_ < 0 || stems_ < 2 || stems_ % 2 != 0;
    alpha_.assign(n_, -1);
    kind_.assign(n_, kNone);
    height_.assign(n_ + 1, 0);
    nxt_.assign(n_, -1);
    prv_.assign(n_, -1);
  }

  // Choice codes: 0 bud, 1 leaf, 2 open, 3 + a close with the open position a.
  std::vector<int> choices_at() const {
    std::vector<int> out;
    const int i = pos_;
    if (i == 0) return {0};
    const int h = height_[i];
    if (buds_ < stems_ / 2) out.push_back(0);
    if (leaves_ < stems_ / 2 && (spec_.labels != TourSpec::Labels::WellRooted || h > 0)) out.push_back(1);
    if (opened_ < pairs_) out.push_back(2);
    for (int a = 0; a < i; ++a) {
      if (kind_[a] != kOpen || alpha_[a] != -1) continue;
      if (spec_.labels != TourSpec::Labels::None && height_[i] != height_[a] - 1) continue;
      out.push_back(3 + a);
    }
    return out;
  }

  bool apply(int code) {
    const int i = pos_;
    Frame f;
    f.links_before = links_.size();
    stack_.push_back(f);
    const int next = (i + 1) % n_;
    bool ok = true;
    if (code == 0 || code == 1) {
      kind_[i] = code == 0 ? kBud : kLeaf;
      alpha_[i] = i;
      (code == 0 ? buds_ : leaves_)++;
      height_[i + 1] = height_[i] + (code == 0 ? 1 : -1);
      ok = link(i, next) && chain_ok(i);
    } else if (code == 2) {
      kind_[i] = kOpen;
      ++opened_;
      height_[i + 1] = height_[i];
      ok = chain_ok(i);
    } else {
      const int a = code - 3;
      kind_[i] = kClose;
      alpha_[i] = a;
      alpha_[a] = i;
      ++closed_;
      height_[i + 1] = height_[i];
      ok = link(a, next) && link(i, (a + 1) % n_) && chain_ok(i) && chain_ok(a);
    }
    ++pos_;
    return ok && feasible();
  }

  void undo(int code) {
    --pos_;
    const int i = pos_;
    Frame f = stack_.back();
    stack_.pop_back();
    while (links_.size() > f.links_before) {
      auto [x, y] = links_.back();
      links_.pop_back();
      nxt_[x] = -1;
      prv_[y] = -1;
    }
    if (code == 0 || code == 1) {
      (code == 0 ? buds_ : leaves_)--;
      alpha_[i] = -1;
    } else if (code == 2) {
      --opened_;
    } else {
      const int a = code - 3;
      alpha_[i] = -1;
      alpha_[a] = -1;
      --closed_;
    }
    kind_[i] = kNone;
  }

  bool complete() const { return pos_ == n_; }

  BlossomingMap build() const {
    std::vector<Dart> alpha(alpha_.begin(), alpha_.end()), sigma(n_);
    std::vector<Flow> flow(n_);
    for (int k = 0; k < n_; ++k) {
      sigma[k] = (alpha[k] + 1) % n_;
      flow[k] = (kind_[k] == kBud || kind_[k] == kClose) ? Flow::Out : Flow::In;
    }
    std::vector<int> labels(n_);
    // corner c(k) is crossed out of at position sigma(k)
    for (int k = 0; k < n_; ++k) labels[k] = height_[sigma[k]];
    return BlossomingMap::validate(std::move(alpha), std::move(sigma), std::move(flow), 0,
                                   spec_.labels == TourSpec::Labels::None ? std::vector<int>{}
                                                                          : std::move(labels));
  }

  int pos() const { return pos_; }
  /// No map can match (no room for a root bud, or negative edge count).
  bool empty() const { return empty_; }

 private:
  struct Frame {
    std::size_t links_before;
  };

  bool link(int x, int y) {
    if (nxt_[x] != -1 || prv_[y] != -1) return false;
    nxt_[x] = y;
    prv_[y] = x;
    links_.push_back({x, y});
    return chain_ok(x);
  }

  // Checks the sigma-chain through x: at most 4 darts, cycles of exactly 4,
  // stem cap, and at most two in / two out darts among decided positions.
  bool chain_ok(int x) const {
    int head = x, steps = 0;
    while (prv_[head] != -1 && prv_[head] != x && steps < 5) {
      head = prv_[head];
      ++steps;
    }
    bool cyclic = prv_[head] == x || (prv_[head] != -1 && steps >= 5);
    if (steps >= 5) return false;
    int len = 0, stems = 0, in = 0, out = 0;
    bool root = false;
    int y = head;
    do {
      ++len;
      if (len > 4) return false;
      root = root || y == 0;
      switch (kind_[y]) {
        case kBud: ++stems; ++out; break;
        case kLeaf: ++stems; ++in; break;
        case kOpen: ++in; break;
        case kClose: ++out; break;
        default: break;
      }
      y = nxt_[y];
    } while (y != -1 && y != head);
    cyclic = y == head;
    if (cyclic && len != 4) return false;
    const int cap = root ? spec_.max_stems_root_vertex : spec_.max_stems_per_vertex;
    return stems <= cap && in <= 2 && out <= 2;
  }

  bool feasible() const {
    const int remaining_stems = stems_ - buds_ - leaves_;
    if (opened_ > pairs_ || remaining_stems < 0) return false;
    if (spec_.labels == TourSpec::Labels::None) return true;
    const int h = height_[pos_];
    for (int a = 0; a < pos_; ++a) {
      if (kind_[a] != kOpen || alpha_[a] != -1) continue;
      if (std::abs(h - (height_[a] - 1)) > remaining_stems) return false;
    }
    if (spec_.labels == TourSpec::Labels::WellRooted && h > stems_ / 2 - leaves_) return false;
    return true;
  }

  TourSpec spec_;
  bool empty_ = false;
  int n_ = 0, pairs_ = 0, stems_ = 0;
  int pos_ = 0, buds_ = 0, leaves_ = 0, opened_ = 0, closed_ = 0;
  std::vector<int> alpha_;
  std::vector<std::int8_t> kind_;
  std::vector<int> height_;
  std::vector<int> nxt_, prv_;
  std::vector<std::pair<int, int>> links_;
  std::vector<Frame> stack_;
};

void dfs(TourSearch& s, const std::function<void(const BlossomingMap&)>* visit, std::int64_t& count) {
  if (s.complete()) {
    ++count;
    if (visit) (*visit)(s.build());
    return;
  }
  for (int c : s.choices_at()) {
    if (s.apply(c)) dfs(s, visit, count);
    s.undo(c);
  }
}

void collect_prefixes(TourSearch& s, int depth, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  if (s.complete() || s.pos() == depth) {
    out.push_back(path);
    return;
  }
  for (int c : s.choices_at()) {
    path.push_back(c);
    if (s.apply(c)) collect_prefixes(s, depth, path, out);
    s.undo(c);
    path.pop_back();
  }
}

}  // namespace

std::int64_t generate_tours(const TourSpec& spec, const std::function<void(const BlossomingMap&)>& visit,
                            int jobs) {
  const std::function<void(const BlossomingMap&)>* v = visit ? &visit : nullptr;
  if (TourSearch(spec).empty()) return 0;
  if (jobs <= 1) {
    TourSearch s(spec);
    std::int64_t count = 0;
    dfs(s, v, count);
    return count;
  }
  std::vector<std::vector<int>> prefixes;
  {
    TourSearch s(spec);
    std::vector<int> path;
    collect_prefixes(s, std::min(6, 4 * spec.n_vertices), path, prefixes);
  }
  std::atomic<std::int64_t> total{0};
  parallel_tasks(static_cast<int>(prefixes.size()), jobs, [&](int t) {
    TourSearch s(spec);
    for (int c : prefixes[t]) s.apply(c);
    std::int64_t count = 0;
    dfs(s, v, count);
    total += count;
  });
  return total.load();
}

std::int64_t count_tours(const TourSpec& spec, int jobs) { return generate_tours(spec, nullptr, jobs); }

TourSpec spec_O(int genus, int n_vertices) {
  TourSpec s;
  s.genus = genus;
  s.n_vertices = n_vertices;
  s.labels = TourSpec::Labels::WellRooted;
  return s;
}

TourSpec spec_U(int genus, int n_leaves) {
  TourSpec s;
  s.genus = genus;
  s.n_vertices = n_leaves + 2 * genus - 1;
  s.labels = TourSpec::Labels::Consistent;
  return s;
}

TourSpec spec_P(int genus, int n_leaves) {
  TourSpec s = spec_U(genus, n_leaves);
  s.max_stems_per_vertex = 2;
  s.max_stems_root_vertex = 2;
  return s;
}

TourSpec spec_R(int genus, int n_leaves) {
  TourSpec s = spec_P(genus, n_leaves);
  s.max_stems_root_vertex = 1;
  return s;
}

}  // namespace mapforge
