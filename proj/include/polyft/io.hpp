#pragma once

// JSON interchange for shapes and results, plus the run manifest digest.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "polyft/geom.hpp"
#include "polyft/moments.hpp"
#include "polyft/scatter.hpp"
#include "polyft/xform.hpp"

namespace polyft::io {

using json = nlohmann::json;
using Shape = std::variant<geom::Polygon, geom::Polyhedron>;

/// {"vertices": [[x, y], ...]} or {"vertices": [[x, y, z], ...], "faces": [[i0, i1, ...], ...]}.
/// Polygons are stored unvalidated for simplicity; geometry errors surface as InputError.
Shape parse_shape(const json& j);
Shape parse_shape_text(std::string_view text);

json to_json(const geom::Polygon& p);
json to_json(const geom::Polyhedron& p);

/// {"max_order": n, "moments": [{"a": a, "b": b, "value": v}, ...]}
json to_json(const moments::MomentTable& m);
moments::MomentTable moment_table_from_json(const json& j);

/// {"re": x, "im": y}
json to_json(const xform::FormFactor& v);
xform::FormFactor form_factor_from_json(const json& j);

/// [re, im]
json complex_pair(const std::complex<double>& z);
std::complex<double> complex_from_pair(const json& j);

json to_json(const scatter::PorodFit& f);
scatter::PorodFit porod_fit_from_json(const json& j);

json to_json(const std::vector<scatter::RadialBin>& bins);

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

inline constexpr std::string_view kToolVersion = "0.1.0";

struct RunManifest {
  std::string subcommand;
  json flags = json::object();
  json inputs = json::object();  // path -> digest
  std::string timestamp;         // UTC, excluded from the determinism contract
  json to_json() const;
};

std::string utc_timestamp();

}  // namespace polyft::io
