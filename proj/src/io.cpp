#include "mapforge/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>

#include "mapforge/error.hpp"

namespace mapforge {

namespace {

std::vector<Dart> darts_from(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) throw Error(ErrorCode::BadInput, std::string("missing ") + field);
  std::vector<Dart> out;
  for (const auto& x : j[field]) {
    if (!x.is_number_integer()) throw Error(ErrorCode::BadInput, std::string(field) + " must hold integers");
    out.push_back(x.get<int>() - 1);
  }
  return out;
}

int int_field(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw Error(ErrorCode::BadInput, std::string("missing integer ") + field);
  return j[field].get<int>();
}

Json one_based(const std::vector<Dart>& v) {
  Json a = Json::array();
  for (Dart d : v) a.push_back(d + 1);
  return a;
}

}  // namespace

Json map_to_json(const RotationMap& m) {
  const auto a = m.alpha_perm();
  const auto s = m.sigma_perm();
  return Json{{"n_darts", m.n_darts()},
              {"alpha", one_based({a.begin(), a.end()})},
              {"sigma", one_based({s.begin(), s.end()})},
              {"root", m.root() + 1}};
}

RotationMap map_from_json(const Json& j) {
  const int n = int_field(j, "n_darts");
  auto alpha = darts_from(j, "alpha");
  auto sigma = darts_from(j, "sigma");
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(sigma.size()) != n)
    throw Error(ErrorCode::BadInput, "n_darts does not match the permutations");
  return RotationMap::validate(std::move(alpha), std::move(sigma), int_field(j, "root") - 1);
}

Json orientation_to_json(const RotationMap& m, const Orientation& o) {
  Json heads = Json::array();
  for (int e = 0; e < m.num_edges(); ++e) heads.push_back(o.head[e] + 1);
  return Json{{"heads", heads}};
}

Orientation orientation_from_json(const RotationMap& m, const Json& j) {
  return validate_orientation(m, darts_from(j, "heads"));
}

Json half_orientation_to_json(const RotationMap& m, const HalfOrientation& h) {
  Json heads = Json::array(), bi = Json::array();
  for (int e = 0; e < m.num_edges(); ++e) {
    if (h.head[e] == kBioriented) {
      heads.push_back(0);
      bi.push_back(e + 1);
    } else {
      heads.push_back(h.head[e] + 1);
    }
  }
  return Json{{"heads", heads}, {"bioriented", bi}};
}

HalfOrientation half_orientation_from_json(const RotationMap& m, const Json& j) {
  auto heads = darts_from(j, "heads");
  if (j.contains("bioriented")) {
    for (const auto& x : j["bioriented"]) {
      const int e = x.get<int>() - 1;
      if (e < 0 || e >= static_cast<int>(heads.size())) throw Error(ErrorCode::BadInput, "bioriented edge out of range");
      heads[e] = kBioriented;
    }
  }
  return validate_half_orientation(m, std::move(heads));
}

Json blossoming_to_json(const BlossomingMap& b) {
  const int n = b.n_darts();
  std::vector<int> idx(n, -1);
  std::vector<Dart> interior;
  for (Dart d = 0; d < n; ++d)
    if (!b.is_stem(d)) {
      idx[d] = static_cast<int>(interior.size());
      interior.push_back(d);
    }
  const int m = static_cast<int>(interior.size());
  std::vector<Dart> order = interior;  // output dart order: interior, then stems
  Json stems = Json::array();
  int root_stem = 0;
  auto add_stem = [&](Dart s, int after) {
    order.push_back(s);
    stems.push_back(Json{{"after_dart", after}, {"dir", b.is_bud(s) ? "bud" : "leaf"}});
    if (s == b.root()) root_stem = static_cast<int>(stems.size());
  };
  if (m == 0) {
    Dart s = b.root();
    do {
      add_stem(s, 0);
      s = b.sigma(s);
    } while (s != b.root());
  } else {
    for (Dart d : interior)
      for (Dart s = b.sigma(d); b.is_stem(s); s = b.sigma(s)) add_stem(s, idx[d] + 1);
  }
  Json j;
  j["n_darts"] = m;
  Json alpha = Json::array(), sigma = Json::array();
  for (Dart d : interior) {
    alpha.push_back(idx[b.alpha(d)] + 1);
    Dart y = b.sigma(d);
    while (b.is_stem(y)) y = b.sigma(y);
    sigma.push_back(idx[y] + 1);
  }
  j["alpha"] = alpha;
  j["sigma"] = sigma;
  j["root"] = m > 0 ? 1 : 0;
  j["stems"] = stems;
  j["root_stem"] = root_stem;
  if (b.root() < 0 || b.root_corner() != b.sigma_inv(b.root())) {
    // rooted on a corner (fractional openings): record it in output dart numbering
    const auto at = std::find(order.begin(), order.end(), b.root_corner());
    j["root_corner"] = static_cast<int>(at - order.begin()) + 1;
  }
  if (!b.labels().empty()) {
    Json labels = Json::array();
    for (Dart d : order) labels.push_back(b.labels()[d]);
    j["labels"] = labels;
  }
  if (m > 0) {
    Json heads = Json::array(), bi = Json::array();
    int e = 0;
    for (Dart d : interior) {
      const Dart y = b.alpha(d);
      if (y < d) continue;
      ++e;
      if (b.flow(d) == Flow::Both) {
        heads.push_back(0);
        bi.push_back(e);
      } else {
        heads.push_back(idx[b.flow(d) == Flow::In ? d : y] + 1);
      }
    }
    j["orientation"] = Json{{"heads", heads}, {"bioriented", bi}};
  }
  return j;
}

BlossomingMap blossoming_from_json(const Json& j) {
  const int m = int_field(j, "n_darts");
  const auto ialpha = darts_from(j, "alpha");
  const auto isigma = darts_from(j, "sigma");
  if (static_cast<int>(ialpha.size()) != m || static_cast<int>(isigma.size()) != m)
    throw Error(ErrorCode::BadInput, "n_darts does not match the permutations");
  if (m > 0) RotationMap::validate(ialpha, isigma, 0);  // interior map must itself be valid
  if (!j.contains("stems") || !j["stems"].is_array()) throw Error(ErrorCode::BadInput, "missing stems");
  const auto& stems = j["stems"];
  const int s = static_cast<int>(stems.size());
  const int n = m + s;
  std::vector<Dart> alpha(n), sigma(n);
  std::vector<Flow> flow(n, Flow::Both);
  std::vector<std::vector<Dart>> after(m + 1);
  for (int k = 0; k < s; ++k) {
    const int a = int_field(stems[k], "after_dart");
    if (a < 0 || a > m || (a == 0) != (m == 0)) throw Error(ErrorCode::BadInput, "stem after_dart out of range");
    const std::string dir = stems[k].value("dir", "");
    if (dir != "bud" && dir != "leaf") throw Error(ErrorCode::BadInput, "stem dir must be bud or leaf");
    flow[m + k] = dir == "bud" ? Flow::Out : Flow::In;
    alpha[m + k] = m + k;
    after[a].push_back(m + k);
  }
  for (Dart d = 0; d < m; ++d) {
    alpha[d] = ialpha[d];
    Dart prev = d;
    for (Dart x : after[d + 1]) {
      sigma[prev] = x;
      prev = x;
    }
    sigma[prev] = isigma[d];
  }
  if (m == 0) {
    for (int k = 0; k < s; ++k) sigma[k] = (k + 1) % s;
  }
  if (m > 0) {
    if (!j.contains("orientation")) throw Error(ErrorCode::BadInput, "missing orientation of interior edges");
    const auto heads = darts_from(j["orientation"], "heads");
    std::vector<int> bi;
    if (j["orientation"].contains("bioriented"))
      for (const auto& x : j["orientation"]["bioriented"]) bi.push_back(x.get<int>() - 1);
    int e = 0;
    for (Dart d = 0; d < m; ++d) {
      const Dart y = alpha[d];
      if (y < d) continue;
      if (e >= static_cast<int>(heads.size())) throw Error(ErrorCode::BadInput, "too few heads");
      const bool both = std::find(bi.begin(), bi.end(), e) != bi.end();
      if (both) {
        flow[d] = flow[y] = Flow::Both;
      } else if (heads[e] == d || heads[e] == y) {
        flow[heads[e]] = Flow::In;
        flow[heads[e] == d ? y : d] = Flow::Out;
      } else {
        throw Error(ErrorCode::BadInput, "head is not a dart of its edge");
      }
      ++e;
    }
    if (e != static_cast<int>(heads.size())) throw Error(ErrorCode::BadInput, "too many heads");
  }
  std::vector<int> labels;
  if (j.contains("labels")) {
    labels = j["labels"].get<std::vector<int>>();
    if (static_cast<int>(labels.size()) != n) throw Error(ErrorCode::BadInput, "one label per dart expected");
  }
  if (j.contains("root_corner")) {
    const int rc = int_field(j, "root_corner");
    if (rc < 1 || rc > n) throw Error(ErrorCode::BadInput, "root_corner out of range");
    return BlossomingMap::validate_corner(std::move(alpha), std::move(sigma), std::move(flow), rc - 1,
                                          std::move(labels));
  }
  const int root_stem = int_field(j, "root_stem");
  if (root_stem < 1 || root_stem > s) throw Error(ErrorCode::BadInput, "root_stem out of range");
  return BlossomingMap::validate(std::move(alpha), std::move(sigma), std::move(flow), m + root_stem - 1,
                                 std::move(labels));
}

Json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.c) a.push_back(bigint_to_json(c));
  return a;
}

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace mapforge
