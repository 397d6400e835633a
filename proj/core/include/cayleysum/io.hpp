#pragma once

// JSON interchange. Rationals are always strings "p/q" or "p".

#include "cayleysum/cayley.hpp"
#include "cayleysum/construction.hpp"
#include "cayleysum/det_asymptotics.hpp"
#include "cayleysum/hull.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace cayleysum {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
/// Accepts a rational string or a JSON integer.
Rational rational_from_json(const Json& j);

/// { "ambient_dim": D, "points": [["p/q", ...], ...], "labels": [...] }
Json point_set_to_json(const PointSet& points);
PointSet point_set_from_json(const Json& j);

/// { "dims": [ambient, polytope], "num_points": n, "faces": [...], "f_vector": [...] }
Json lattice_to_json(const FaceLattice& lattice);
FaceLattice lattice_from_json(const Json& j);

Json delta_spec_to_json(const DeltaSpec& spec);
DeltaSpec delta_spec_from_json(const Json& j);

Json params_to_json(const ConstructionParams& params);
ConstructionParams params_from_json(const Json& j);

/// { "parts": [point set, ...] }
Json family_to_json(const PartitionedPointSet& family);
PartitionedPointSet family_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace cayleysum
