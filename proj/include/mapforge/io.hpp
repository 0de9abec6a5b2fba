#pragma once

#include <string>

#include "json.hpp"
#include "mapforge/blossoming.hpp"
#include "mapforge/orientation.hpp"
#include "mapforge/rotation_map.hpp"
#include "mapforge/series.hpp"

namespace mapforge {

using Json = nlohmann::json;

/// {"n_darts", "alpha", "sigma", "root"}, darts 1-based.
Json map_to_json(const RotationMap& m);
RotationMap map_from_json(const Json& j);

/// {"heads": [...]} with one head dart per edge, edges in min-dart order.
/// A half orientation adds "bioriented": [edge indices, 1-based] and writes 0 as their head.
Json orientation_to_json(const RotationMap& m, const Orientation& o);
Orientation orientation_from_json(const RotationMap& m, const Json& j);
Json half_orientation_to_json(const RotationMap& m, const HalfOrientation& h);
HalfOrientation half_orientation_from_json(const RotationMap& m, const Json& j);

/// Interior map in the map format plus "stems": [{"after_dart", "dir"}] and
/// "root_stem" (1-based index into stems). Stems following the same dart are
/// listed in rotation order. A map without interior edges has n_darts 0 and
/// all its stems use after_dart 0. Labels, when present, are indexed by
/// interior darts first and then stems in listing order. The orientation
/// covers interior edges. Maps rooted on a corner rather than a bud (as
/// produced by fractional opening) carry "root_corner" in that same numbering.
Json blossoming_to_json(const BlossomingMap& b);
BlossomingMap blossoming_from_json(const Json& j);

/// Integers that fit in 64 bits are written as numbers, larger ones as strings.
Json bigint_to_json(const BigInt& x);
Json poly_to_json(const Poly& p);  // coefficient list, constant term first

/// Reads a JSON document from a file ("-" for stdin). Throws BadInput.
Json read_json_file(const std::string& path);

}  // namespace mapforge
