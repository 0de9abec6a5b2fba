#pragma once

#include <optional>
#include <vector>

#include "mapforge/rotation_map.hpp"

namespace mapforge {

inline constexpr int kDefaultDartBound = 12;

/// All rooted maps with n_edges edges (optionally of one genus), sorted by
/// canonical encoding. alpha is fixed to (0 1)(2 3)..., root to dart 0, and
/// every sigma is tried.
std::vector<RotationMap> enumerate_rooted_maps(std::optional<int> genus, int n_edges, int jobs = 1,
                                               int dart_bound = kDefaultDartBound);

/// All rooted 4-valent bicolorable maps with n_vertices vertices.
std::vector<RotationMap> enumerate_bc4valent(std::optional<int> genus, int n_vertices,
                                             int jobs = 1, int dart_bound = 16);

/// All rooted maps with at most max_edges edges and genus at most max_genus.
std::vector<RotationMap> enumerate_maps_upto(int max_edges, int max_genus, int jobs = 1);

}  // namespace mapforge
