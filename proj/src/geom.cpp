#include "polyft/geom.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <map>
#include <numbers>
#include <utility>

#include "polyft/error.hpp"

namespace polyft::geom {

namespace {

double bbox_diagonal(std::span<const Vec2> v) {
  Vec2 lo = v[0], hi = v[0];
  for (const auto& p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return norm(hi - lo);
}

// Distance from p to segment [a, b].
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

// Signed distance of p from the line through a, b (positive on the left).
double side(const Vec2& a, const Vec2& b, const Vec2& p) {
  return cross(b - a, p - a) / norm(b - a);
}

bool segments_meet(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2, double tol) {
  const double d1 = side(p1, p2, q1);
  const double d2 = side(p1, p2, q2);
  const double d3 = side(q1, q2, p1);
  const double d4 = side(q1, q2, p2);
  const bool straddle_q = (d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol);
  const bool straddle_p = (d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol);
  if (straddle_q && straddle_p) return true;
  return point_segment_distance(q1, p1, p2) <= tol || point_segment_distance(q2, p1, p2) <= tol ||
         point_segment_distance(p1, q1, q2) <= tol || point_segment_distance(p2, q1, q2) <= tol;
}

}  // namespace

ValidityReport validate_simple(std::span<const Vec2> v) {
  ValidityReport r;
  const std::size_t n = v.size();
  if (n < 3) {
    r.ok = false;
    r.defect = "polygon needs at least 3 vertices";
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) {
      r.ok = false;
      r.defect = "duplicate vertex " + std::to_string(i) + " and " + std::to_string((i + 1) % n);
      r.first = i;
      r.second = (i + 1) % n;
      return r;
    }
  }
  const double tol = 1e-12 * bbox_diagonal(v);
  // Adjacent edges share a vertex; they only conflict when the second doubles back
  // along the first.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v[i], b = v[(i + 1) % n], c = v[(i + 2) % n];
    const Vec2 l0 = b - a, l1 = c - b;
    if (std::abs(cross(l0, l1)) <= tol * std::max(norm(l0), norm(l1)) && dot(l0, l1) < 0.0) {
      r.ok = false;
      r.defect = "edges " + std::to_string(i) + " and " + std::to_string((i + 1) % n) + " overlap";
      r.first = i;
      r.second = (i + 1) % n;
      return r;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_meet(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], tol)) {
        r.ok = false;
        r.defect = "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
        r.first = i;
        r.second = j;
        return r;
      }
    }
  }
  return r;
}

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw InputError("polygon needs at least 3 vertices");
  for (const auto& p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InputError("polygon vertex is not finite");
  }
  report_ = validate_simple(vertices_);
  if (!report_.ok && report_.defect.starts_with("duplicate")) throw InputError(report_.defect);

  lo_ = hi_ = vertices_[0];
  for (const auto& p : vertices_) {
    lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
    hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      diameter_ = std::max(diameter_, norm(vertices_[i] - vertices_[j]));

  if (signed_area(*this) == 0.0) {
    bool collinear = true;
    for (std::size_t i = 2; i < vertices_.size() && collinear; ++i)
      collinear = cross(vertices_[1] - vertices_[0], vertices_[i] - vertices_[0]) == 0.0;
    if (report_.ok || collinear) throw InputError("polygon has zero area");
  }
}

const Vec2& Polygon::at_cyclic(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

void Polygon::require_simple() const {
  if (!report_.ok) throw InputError("polygon is not simple: " + report_.defect);
}

Polygon Polygon::reversed() const {
  std::vector<Vec2> v(vertices_.rbegin(), vertices_.rend());
  return Polygon(std::move(v));
}

Polygon Polygon::translated(const Vec2& d) const {
  std::vector<Vec2> v = vertices_;
  for (auto& p : v) p += d;
  return Polygon(std::move(v));
}

double signed_area(const Polygon& poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * s;
}

double perimeter(const Polygon& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) s += norm(poly.edge(i));
  return s;
}

Vec2 edge_closure(const Polygon& poly) {
  Vec2 s;
  for (std::size_t i = 0; i < poly.size(); ++i) s += poly.edge(i);
  return s;
}

TurningResult turning_number(const Polygon& poly) {
  const std::size_t n = poly.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly.edge(i);
    const Vec2 b = poly.edge((i + 1) % n);
    if (norm(a) == 0.0 || norm(b) == 0.0) throw InputError("zero-length edge in turning_number");
    total += std::atan2(cross(a, b), dot(a, b));
  }
  return {static_cast<int>(std::lround(total / (2.0 * std::numbers::pi))), total};
}

namespace {

// sqrt(det[t_i . t_j]) as the product of modified Gram-Schmidt residual norms, which equals
// the Gram determinant's square root without squaring the condition number.
template <class V>
double gram_volume(std::initializer_list<V> vectors) {
  std::array<V, 3> q{};
  std::size_t k = 0;
  double vol = 1.0;
  for (V r : vectors) {
    for (std::size_t j = 0; j < k; ++j) r -= q[j] * dot(q[j], r);
    const double len = norm(r);
    if (len == 0.0) return 0.0;
    vol *= len;
    q[k++] = r * (1.0 / len);
  }
  return vol;
}

}  // namespace

double gram_area_element(const Vec2& t1, const Vec2& t2) { return gram_volume({t1, t2}); }

double gram_area_element(const Vec3& t1, const Vec3& t2) { return gram_volume({t1, t2}); }

double triple_product_volume(const Vec3& a1, const Vec3& a2, const Vec3& a3) {
  return std::abs(dot(a1, cross(a2, a3)));
}

double parallelepiped_volume(const Vec3& a1, const Vec3& a2, const Vec3& a3) {
  const double gram = gram_volume({a1, a2, a3});
  const double levi = triple_product_volume(a1, a2, a3);
  // Both forms carry absolute rounding of order eps * |a1| |a2| |a3|.
  const double floor = 1e-13 * norm(a1) * norm(a2) * norm(a3);
  if (std::abs(gram - levi) > 1e-12 * levi + floor) throw ToleranceError("Gram and triple-product volumes disagree");
  return gram;
}

Polyhedron::Polyhedron(std::vector<Vec3> vertices, std::vector<std::vector<std::size_t>> faces)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 4) throw InputError("polyhedron needs at least 4 vertices");
  if (faces.size() < 4) throw InputError("polyhedron needs at least 4 faces");
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      diameter_ = std::max(diameter_, norm(vertices_[i] - vertices_[j]));
  if (!(diameter_ > 0.0) || !std::isfinite(diameter_)) throw InputError("degenerate polyhedron vertices");

  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto& ring = faces[f];
    if (ring.size() < 3) throw InputError("face " + std::to_string(f) + " has fewer than 3 vertices");
    for (auto idx : ring)
      if (idx >= vertices_.size()) throw InputError("face " + std::to_string(f) + " has out-of-range index");
    Face face;
    Vec3 newell, center;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const Vec3& a = vertices_[ring[k]];
      const Vec3& b = vertices_[ring[(k + 1) % ring.size()]];
      newell += cross(a, b);
      center += a;
      if (ring[k] == ring[(k + 1) % ring.size()]) throw InputError("face " + std::to_string(f) + " repeats a vertex");
      ++directed[{ring[k], ring[(k + 1) % ring.size()]}];
    }
    center *= 1.0 / static_cast<double>(ring.size());
    const double twice_area = norm(newell);
    if (!(twice_area > 0.0)) throw InputError("face " + std::to_string(f) + " is degenerate");
    face.normal = newell * (1.0 / twice_area);
    face.area = 0.5 * twice_area;
    face.center = center;
    for (auto idx : ring) {
      if (std::abs(dot(vertices_[idx] - center, face.normal)) > 1e-9 * diameter_)
        throw InputError("face " + std::to_string(f) + " is not planar");
    }
    face.ring = std::move(ring);
    faces_.push_back(std::move(face));
  }
  for (const auto& [edge, count] : directed) {
    if (count != 1) throw InputError("surface not closed: edge traversed twice in the same direction");
    auto it = directed.find({edge.second, edge.first});
    if (it == directed.end() || it->second != 1)
      throw InputError("surface not closed: edge " + std::to_string(edge.first) + "-" +
                       std::to_string(edge.second) + " has no opposite");
  }

  // Signed fan decomposition into tetrahedra about the vertex average; moments are
  // accumulated in coordinates relative to that point.
  Vec3 ref;
  for (const auto& v : vertices_) ref += v;
  ref *= 1.0 / static_cast<double>(vertices_.size());
  double vol = 0.0;
  Vec3 first;
  std::array<double, 9> second{};
  for (const auto& face : faces_) {
    const Vec3 p0 = vertices_[face.ring[0]] - ref;
    for (std::size_t k = 1; k + 1 < face.ring.size(); ++k) {
      const Vec3 p1 = vertices_[face.ring[k]] - ref;
      const Vec3 p2 = vertices_[face.ring[k + 1]] - ref;
      const double v6 = dot(p0, cross(p1, p2));
      const double v = v6 / 6.0;
      vol += v;
      const Vec3 s = p0 + p1 + p2;
      first += s * (v / 4.0);
      const std::array<Vec3, 3> pts{p0, p1, p2};
      const double sa[3] = {s.x, s.y, s.z};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          double acc = sa[i] * sa[j];
          for (const auto& p : pts) {
            const double pa[3] = {p.x, p.y, p.z};
            acc += pa[i] * pa[j];
          }
          second[static_cast<std::size_t>(3 * i + j)] += v / 20.0 * acc;
        }
      }
    }
  }
  if (!(vol > 0.0)) throw InputError("polyhedron volume is not positive (faces wound inward?)");
  volume_ = vol;
  const Vec3 c = first * (1.0 / vol);
  centroid_ = ref + c;
  const double ca[3] = {c.x, c.y, c.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      second_[static_cast<std::size_t>(3 * i + j)] = second[static_cast<std::size_t>(3 * i + j)] - vol * ca[i] * ca[j];
}

double Polyhedron::surface_area() const {
  double s = 0.0;
  for (const auto& f : faces_) s += f.area;
  return s;
}

Polyhedron Polyhedron::translated(const Vec3& d) const {
  std::vector<Vec3> v(vertices_.begin(), vertices_.end());
  for (auto& p : v) p += d;
  std::vector<std::vector<std::size_t>> rings;
  for (const auto& f : faces_) rings.push_back(f.ring);
  return Polyhedron(std::move(v), std::move(rings));
}

double polyhedron_volume(const Polyhedron& p) {
  double s = 0.0;
  for (const auto& f : p.faces()) s += dot(f.center, f.normal) * f.area;
  return s / 3.0;
}

Vec3 area_normal_sum(const Polyhedron& p) {
  Vec3 s;
  for (const auto& f : p.faces()) s += f.normal * f.area;
  return s;
}

Polyhedron make_box(const Vec3& lo, const Vec3& hi) {
  std::vector<Vec3> v{{lo.x, lo.y, lo.z}, {hi.x, lo.y, lo.z}, {hi.x, hi.y, lo.z}, {lo.x, hi.y, lo.z},
                      {lo.x, lo.y, hi.z}, {hi.x, lo.y, hi.z}, {hi.x, hi.y, hi.z}, {lo.x, hi.y, hi.z}};
  std::vector<std::vector<std::size_t>> f{{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                          {2, 3, 7, 6}, {1, 2, 6, 5}, {0, 4, 7, 3}};
  return Polyhedron(std::move(v), std::move(f));
}

Polyhedron make_tetrahedron(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  std::vector<Vec3> v{a, b, c, d};
  std::vector<std::vector<std::size_t>> f{{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
  if (dot(b - a, cross(c - a, d - a)) < 0.0) {
    for (auto& ring : f) std::swap(ring[1], ring[2]);
  }
  return Polyhedron(std::move(v), std::move(f));
}

SampledCurve::SampledCurve(std::vector<Vec2> points) : points_(std::move(points)) {
  if (points_.size() < 8) throw InputError("sampled curve needs at least 8 points");
  if (points_.front() == points_.back()) throw InputError("sampled curve must not repeat its first point");
}

SampledCurve sample_circle(double radius, std::size_t n, Vec2 center) {
  std::vector<Vec2> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts[i] = center + Vec2{radius * std::cos(t), radius * std::sin(t)};
  }
  return SampledCurve(std::move(pts));
}

Polygon regular_polygon(std::size_t n, double radius, Vec2 center) {
  std::vector<Vec2> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts[i] = center + Vec2{radius * std::cos(t), radius * std::sin(t)};
  }
  return Polygon(std::move(pts));
}

}  // namespace polyft::geom
