#pragma once

// Core 2D/3D shape types and purely geometric identities: signed area, edge
// closure, turning number, Gram determinants, polyhedron volume.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyft/vec.hpp"

namespace polyft::geom {

/// Outcome of a simplicity check. `ok == false` carries the first defect found.
struct ValidityReport {
  bool ok = true;
  std::string defect;
  /// Offending vertex or edge indices (0-based). Edge i runs from vertex i to vertex i+1.
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Checks that consecutive vertices are distinct and no two non-adjacent edges meet.
/// Adjacent edges may touch at their shared vertex only (a fold-back spike is a defect).
/// Intersection tolerance is 1e-12 of the bounding-box diagonal.
ValidityReport validate_simple(std::span<const Vec2> vertices);

/// Ordered 2D vertex ring with an implicit closing edge from the last vertex to the first.
///
/// Construction rejects fewer than three vertices, coincident consecutive vertices and
/// zero-area rings (simple, or all vertices collinear).
/// Self-intersecting rings are accepted but flagged; operations that need a simple
/// polygon call `require_simple()`.
class Polygon {
 public:
  explicit Polygon(std::vector<Vec2> vertices);

  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& operator[](std::size_t i) const { return vertices_[i]; }
  /// Vertex with cyclic wraparound.
  const Vec2& at_cyclic(std::ptrdiff_t i) const;
  /// Directed edge l_n = v_{n+1} - v_n.
  Vec2 edge(std::size_t n) const { return at_cyclic(static_cast<std::ptrdiff_t>(n) + 1) - vertices_[n]; }
  /// Edge midpoint c_n = (v_{n+1} + v_n) / 2.
  Vec2 midpoint(std::size_t n) const { return 0.5 * (at_cyclic(static_cast<std::ptrdiff_t>(n) + 1) + vertices_[n]); }

  bool is_simple() const { return report_.ok; }
  const ValidityReport& validity() const { return report_; }
  /// Throws InputError with the defect description when the ring self-intersects.
  void require_simple() const;

  /// Largest vertex-to-vertex distance.
  double diameter() const { return diameter_; }
  Vec2 bbox_min() const { return lo_; }
  Vec2 bbox_max() const { return hi_; }
  Vec2 bbox_center() const { return 0.5 * (lo_ + hi_); }

  Polygon reversed() const;
  Polygon translated(const Vec2& d) const;

 private:
  std::vector<Vec2> vertices_;
  ValidityReport report_;
  double diameter_ = 0.0;
  Vec2 lo_, hi_;
};

double signed_area(const Polygon& poly);
double perimeter(const Polygon& poly);
/// Sum of directed edges; zero up to rounding for every closed ring.
Vec2 edge_closure(const Polygon& poly);

struct TurningResult {
  int winding = 0;
  /// Sum of signed exterior angles, radians.
  double total_angle = 0.0;
};

/// Total rotation of the edge direction over one circuit, and its integer winding.
/// +1 for simple counterclockwise polygons, -1 for clockwise.
TurningResult turning_number(const Polygon& poly);

/// Area of the parallelogram spanned by t1 and t2: sqrt(det[t_i . t_j]), evaluated as a
/// product of Gram-Schmidt residual norms.
double gram_area_element(const Vec2& t1, const Vec2& t2);
double gram_area_element(const Vec3& t1, const Vec3& t2);

/// Volume of the parallelepiped spanned by three vectors from the Gram determinant, in the
/// same factored form. Cross-checked against the triple product; throws ToleranceError when
/// they differ by more than 1e-12 relative plus 1e-13 |a1| |a2| |a3|.
double parallelepiped_volume(const Vec3& a1, const Vec3& a2, const Vec3& a3);
/// |a1 . (a2 x a3)|.
double triple_product_volume(const Vec3& a1, const Vec3& a2, const Vec3& a3);

struct Face {
  std::vector<std::size_t> ring;
  /// Unit outward normal.
  Vec3 normal;
  double area = 0.0;
  /// Vertex average; lies in the face plane.
  Vec3 center;
};

/// Closed polyhedral surface whose faces are planar polygons wound counterclockwise
/// when seen from outside.
///
/// Construction enforces: valid indices, planar faces (1e-9 * diameter), every undirected
/// edge shared by exactly two faces with opposite traversal, positive enclosed volume.
class Polyhedron {
 public:
  Polyhedron(std::vector<Vec3> vertices, std::vector<std::vector<std::size_t>> faces);

  std::span<const Vec3> vertices() const { return vertices_; }
  std::span<const Face> faces() const { return faces_; }
  double diameter() const { return diameter_; }
  double volume() const { return volume_; }
  Vec3 centroid() const { return centroid_; }
  /// Second moments about the centroid, row-major 3x3: integral of (x-c)_i (x-c)_j dV.
  const std::array<double, 9>& central_second_moments() const { return second_; }
  double surface_area() const;

  Polyhedron translated(const Vec3& d) const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  double diameter_ = 0.0;
  double volume_ = 0.0;
  Vec3 centroid_;
  std::array<double, 9> second_{};
};

/// (1/3) sum over faces of (center . normal) * area.
double polyhedron_volume(const Polyhedron& p);
/// Sum of area-weighted outward normals; vanishes for every closed surface.
Vec3 area_normal_sum(const Polyhedron& p);

/// Axis-aligned box [lo, hi] as a six-face polyhedron.
Polyhedron make_box(const Vec3& lo, const Vec3& hi);
Polyhedron make_tetrahedron(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// Points sampled in order along a closed curve, first point not repeated at the end.
class SampledCurve {
 public:
  explicit SampledCurve(std::vector<Vec2> points);
  std::span<const Vec2> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Vec2> points_;
};

/// Circle of radius r sampled at n equally spaced angles, counterclockwise.
SampledCurve sample_circle(double radius, std::size_t n, Vec2 center = {});
/// Regular n-gon with circumradius r, counterclockwise, first vertex on the +x axis.
Polygon regular_polygon(std::size_t n, double radius = 1.0, Vec2 center = {});

}  // namespace polyft::geom
