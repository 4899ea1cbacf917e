#pragma once

// Closed-form Fourier transforms of shape indicator functions,
//   phi(b) = integral over V of exp(i b . x) dx,
// for polygons (edge sum), disks, rectangles, spheres and polyhedra (face reduction).
// All functions are pure; values are unnormalized (phi(0) is the area or volume).

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "polyft/geom.hpp"
#include "polyft/vec.hpp"

namespace polyft::xform {

using FormFactor = std::complex<double>;

/// Planar wavevector with its magnitude/direction split and perpendicular.
class Wavevector2 {
 public:
  constexpr Wavevector2() = default;
  constexpr Wavevector2(double b1, double b2) : v_{b1, b2} {}
  constexpr explicit Wavevector2(const Vec2& v) : v_(v) {}

  constexpr const Vec2& vec() const { return v_; }
  double magnitude() const { return norm(v_); }
  /// Unit direction; zero vector for b = 0.
  Vec2 direction() const;
  /// Rotation of b by +90 degrees, (-b2, b1). Orthogonal to b with equal length.
  constexpr Vec2 perp() const { return {-v_.y, v_.x}; }
  constexpr Wavevector2 operator-() const { return Wavevector2(-v_); }

 private:
  Vec2 v_;
};

class Wavevector3 {
 public:
  constexpr Wavevector3() = default;
  constexpr Wavevector3(double b1, double b2, double b3) : v_{b1, b2, b3} {}
  constexpr explicit Wavevector3(const Vec3& v) : v_(v) {}

  constexpr const Vec3& vec() const { return v_; }
  double magnitude() const { return norm(v_); }
  constexpr Wavevector3 operator-() const { return Wavevector3(-v_); }

 private:
  Vec3 v_;
};

/// Below this value of |b| * diameter the polygon and polyhedron transforms switch to
/// their moment series.
inline constexpr double kSeriesSwitch = 1e-3;
/// Highest total moment order used by the small-|b| polygon series.
inline constexpr int kSeriesOrder = 8;

/// Analytic transform of a simple polygon. Uses the midpoint-sinc form of the edge sum,
/// which has no singularity when b is orthogonal to an edge. Orientation-signed: a clockwise
/// ring yields the negated transform. Throws InputError for non-simple polygons.
FormFactor polygon_form_factor(const geom::Polygon& poly, const Wavevector2& beta);

/// Same formula without the simplicity check. The result has no geometric guarantee
/// for self-intersecting rings.
FormFactor polygon_form_factor_unchecked(const geom::Polygon& poly, const Wavevector2& beta);

/// Edge-sum branch only, regardless of |b| (b != 0). Exposed for branch-continuity tests.
FormFactor polygon_edge_sum(const geom::Polygon& poly, const Wavevector2& beta);
/// Moment-series branch only, truncated at total order `order`.
FormFactor polygon_moment_series(const geom::Polygon& poly, const Wavevector2& beta, int order = kSeriesOrder);

/// Polygon transform precomputed for repeated evaluation; batch calls run the vectorized
/// edge kernel. Results match polygon_form_factor exactly.
class PolygonTransform {
 public:
  explicit PolygonTransform(const geom::Polygon& poly, bool allow_nonsimple = false);
  FormFactor operator()(const Wavevector2& beta) const;
  /// out[i] = phi(bx[i], by[i]).
  void evaluate(std::span<const double> bx, std::span<const double> by, std::span<FormFactor> out) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// pi R^2 * 2 J1(|b| R) / (|b| R) for a disk of radius R centred at the origin.
/// For a disk centred at x0 multiply by exp(i b . x0).
FormFactor disk_form_factor(double radius, const Wavevector2& beta);

/// (2 a1)(2 a2) sinc(b1 a1) sinc(b2 a2) for the rectangle [-a1, a1] x [-a2, a2].
FormFactor rect_form_factor(double a1, double a2, const Wavevector2& beta);

/// 4 pi (sin kR - kR cos kR) / k^3 for a ball of radius R centred at the origin.
FormFactor sphere_form_factor(double radius, const Wavevector3& beta);

/// Transform of a closed polyhedron by the divergence-theorem face reduction:
///   phi = sum_f (b . n_f) / (i |b|^2) * integral over face f of exp(i b . x) dA,
/// each face integral being a planar polygon transform in the face frame
/// (u = first edge direction, w = n x u). Below kSeriesSwitch uses
/// exp(i b . c) * (V - b^T C b / 2) with C the central second moments.
FormFactor polyhedron_form_factor(const geom::Polyhedron& p, const Wavevector3& beta);

/// polyhedron_form_factor with the face frames and face transforms built once.
class PolyhedronTransform {
 public:
  explicit PolyhedronTransform(const geom::Polyhedron& p);
  FormFactor operator()(const Wavevector3& beta) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// In-plane polygon of a face in its (u, w) frame, origin at the face's first vertex.
struct FaceFrame {
  Vec3 origin;
  Vec3 u;
  Vec3 w;
  geom::Polygon polygon;
};
FaceFrame face_frame(const geom::Polyhedron& p, std::size_t face);

/// Worst relative gap |phi(t b_hat) - S_order(t)| / |area| over
/// t in {1e-2, 2e-2, 5e-2} / diameter, where S_order is the moment series truncated at
/// `order` (<= 8).
double series_consistency(const geom::Polygon& poly, const Vec2& beta_hat, int order);
/// Same gap at a single t.
double series_discrepancy(const geom::Polygon& poly, const Vec2& beta_hat, int order, double t);

}  // namespace polyft::xform
