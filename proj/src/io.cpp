#include "polyft/io.hpp"

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "polyft/error.hpp"

namespace polyft::io {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string("expected a number for ") + what);
  return j.get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Shape parse_shape(const json& j) {
  const json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.empty()) throw InputError("'vertices' must be a non-empty array");
  const std::size_t dim = verts.front().is_array() ? verts.front().size() : 0;
  if (dim != 2 && dim != 3) throw InputError("vertices must be [x, y] or [x, y, z] arrays");
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != dim) throw InputError("all vertices must have the same dimension");
  }
  if (dim == 2) {
    if (j.contains("faces")) throw InputError("'faces' given for 2D vertices");
    std::vector<Vec2> pts;
    for (const auto& v : verts) pts.push_back({number(v[0], "x"), number(v[1], "y")});
    return geom::Polygon(std::move(pts));
  }
  std::vector<Vec3> pts;
  for (const auto& v : verts) pts.push_back({number(v[0], "x"), number(v[1], "y"), number(v[2], "z")});
  const json& faces = field(j, "faces");
  if (!faces.is_array()) throw InputError("'faces' must be an array");
  std::vector<std::vector<std::size_t>> rings;
  for (const auto& f : faces) {
    if (!f.is_array()) throw InputError("each face must be an index array");
    std::vector<std::size_t> ring;
    for (const auto& idx : f) {
      if (!idx.is_number_integer() || idx.get<long long>() < 0) throw InputError("face indices must be non-negative integers");
      ring.push_back(idx.get<std::size_t>());
    }
    rings.push_back(std::move(ring));
  }
  return geom::Polyhedron(std::move(pts), std::move(rings));
}

Shape parse_shape_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_shape(j);
}

json to_json(const geom::Polygon& p) {
  json v = json::array();
  for (const auto& q : p.vertices()) v.push_back({q.x, q.y});
  return {{"vertices", v}};
}

json to_json(const geom::Polyhedron& p) {
  json v = json::array();
  for (const auto& q : p.vertices()) v.push_back({q.x, q.y, q.z});
  json f = json::array();
  for (const auto& face : p.faces()) f.push_back(face.ring);
  return {{"vertices", v}, {"faces", f}};
}

json to_json(const moments::MomentTable& m) {
  json list = json::array();
  for (int k = 0; k <= m.max_order(); ++k) {
    for (int a = k; a >= 0; --a) list.push_back({{"a", a}, {"b", k - a}, {"value", m.at(a, k - a)}});
  }
  return {{"max_order", m.max_order()}, {"moments", list}};
}

moments::MomentTable moment_table_from_json(const json& j) {
  const json& order = field(j, "max_order");
  if (!order.is_number_integer()) throw InputError("'max_order' must be an integer");
  moments::MomentTable m(order.get<int>());
  const json& list = field(j, "moments");
  if (!list.is_array()) throw InputError("'moments' must be an array");
  for (const auto& e : list) {
    m.at(field(e, "a").get<int>(), field(e, "b").get<int>()) = number(field(e, "value"), "value");
  }
  return m;
}

json to_json(const xform::FormFactor& v) { return {{"re", v.real()}, {"im", v.imag()}}; }

xform::FormFactor form_factor_from_json(const json& j) {
  return {number(field(j, "re"), "re"), number(field(j, "im"), "im")};
}

json complex_pair(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("complex values are [re, im] pairs");
  return {number(j[0], "re"), number(j[1], "im")};
}

json to_json(const scatter::PorodFit& f) {
  return {{"k_range", {f.k_min, f.k_max}},
          {"slope", f.slope},
          {"intercept", f.intercept},
          {"slope_stderr", f.slope_stderr},
          {"dimension", f.dimension},
          {"expected_slope", -(f.dimension + 1)},
          {"k", f.k},
          {"intensity", f.intensity}};
}

scatter::PorodFit porod_fit_from_json(const json& j) {
  scatter::PorodFit f;
  const json& range = field(j, "k_range");
  if (!range.is_array() || range.size() != 2) throw InputError("'k_range' must be [k_min, k_max]");
  f.k_min = number(range[0], "k_min");
  f.k_max = number(range[1], "k_max");
  f.slope = number(field(j, "slope"), "slope");
  f.intercept = number(field(j, "intercept"), "intercept");
  f.slope_stderr = number(field(j, "slope_stderr"), "slope_stderr");
  f.dimension = field(j, "dimension").get<int>();
  f.k = field(j, "k").get<std::vector<double>>();
  f.intensity = field(j, "intensity").get<std::vector<double>>();
  return f;
}

json to_json(const std::vector<scatter::RadialBin>& bins) {
  json out = json::array();
  for (const auto& b : bins) out.push_back({{"k", b.k}, {"mean", b.mean}, {"count", b.count}});
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

json RunManifest::to_json() const {
  return {{"subcommand", subcommand},
          {"flags", flags},
          {"inputs", inputs},
          {"tool_version", std::string(kToolVersion)},
          {"timestamp", timestamp}};
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

}  // namespace polyft::io
