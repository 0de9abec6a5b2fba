#pragma once

#include <cstdint>
#include <functional>

#include "mapforge/blossoming.hpp"

namespace mapforge {

/// Filters for the generator of rooted 4-valent unicellular blossoming maps.
///
/// Darts are numbered by their position in the tour from the root bud, so a
/// map is a fixed-point-carrying involution alpha on positions (stems are
/// fixed points) with sigma(i) = alpha(i) + 1 mod N. Each rooted map appears
/// exactly once. Every interior edge is oriented backward at its first
/// occurrence, which makes the output well-oriented by construction.
struct TourSpec {
  int n_vertices = 1;
  int genus = 0;
  enum class Labels { None, Consistent, WellRooted } labels = Labels::Consistent;
  int max_stems_per_vertex = 4;
  int max_stems_root_vertex = 4;
};

/// Calls visit for every map matching spec. Returns the number of maps.
/// The search is split over `jobs` threads by the choice at the first
/// undecided positions; visit must be thread-safe when jobs > 1.
std::int64_t generate_tours(const TourSpec& spec, const std::function<void(const BlossomingMap&)>& visit,
                            int jobs = 1);

std::int64_t count_tours(const TourSpec& spec, int jobs = 1);

/// Spec for the class O×_g with n vertices (well-rooted, well-labeled, well-oriented).
TourSpec spec_O(int genus, int n_vertices);
/// Spec for U_g with n leaves (rooted on any rootable stem).
TourSpec spec_U(int genus, int n_leaves);
/// Spec for P_g: U maps whose interior degrees are all at least 2.
TourSpec spec_P(int genus, int n_leaves);
/// Spec for R_g: P maps rooted on a vertex of interior degree at least 3.
TourSpec spec_R(int genus, int n_leaves);

}  // namespace mapforge
