#pragma once

// Independent ground truth for the analytic paths: exact monomial integration over an
// ear-clipped triangulation, and brute-force Gauss quadrature of plane waves over
// triangles and tetrahedra. Nothing here calls into xform or moments.

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "polyft/geom.hpp"
#include "polyft/vec.hpp"

namespace polyft::oracle {

struct Triangle {
  Vec2 a, b, c;
  double signed_area() const { return 0.5 * cross(b - a, c - a); }
};

struct Triangulation {
  std::vector<Triangle> triangles;  // counterclockwise
  /// +1 when the source ring was counterclockwise, -1 when clockwise.
  int orientation = 1;
  /// Sum of triangle areas (non-negative).
  double area() const;
};

/// Ear-clipping decomposition into N - 2 triangles. Clockwise input is reversed first.
/// Near-collinear vertices (|cross| <= 1e-12 * scale^2) are tolerated. Throws InputError
/// for non-simple rings.
Triangulation triangulate(const geom::Polygon& poly);

/// Exact integral of x^a y^b over a triangle (a + b <= 20) through the affine map to the
/// reference triangle and the moments p! q! / (p + q + 2)!.
double monomial_integral_triangle(const Triangle& tri, int a, int b);

/// Integral of x^a y^b over the polygon region (orientation independent).
double monomial_integral(const Triangulation& tri, int a, int b);

/// Collapsed tensor Gauss-Legendre rule with `nodes` points per axis, summed over the
/// triangulation (region integral, orientation independent).
double integrate(const Triangulation& tri, const std::function<double(const Vec2&)>& f, int nodes);

struct QuadratureResult {
  std::complex<double> value;
  std::complex<double> previous;  // estimate at the preceding order
  int nodes = 0;                  // per-axis nodes of the final level on the coarsest element
};

/// Brute-force transform of a polygon: per-triangle tensor Gauss-Legendre with
/// ceil(|b| * longest_edge / 2) + 8 nodes per axis, raised by 4 until consecutive orders
/// agree to 1e-9 of the area. Signed by ring orientation, like the analytic transform.
/// Requires |b| * diameter <= 200; throws RegimeError beyond, ToleranceError if the
/// target is not met.
QuadratureResult quad_form_factor(const geom::Polygon& poly, const Vec2& beta);

/// Same for a polyhedron, using tetrahedra fanned from each face triangle to the
/// centroid (valid for polyhedra star-shaped about their centroid).
QuadratureResult quad_form_factor(const geom::Polyhedron& p, const Vec3& beta);

/// Exact integral of z^k = (x + i y)^k over the region (k <= 20), by binomial expansion
/// into monomial integrals.
std::complex<double> z_power_integral(const Triangulation& tri, int k);

/// Disk of radius R centred at the origin: Gauss-Legendre in r, trapezoid in angle (spectral
/// for periodic integrands), orders raised until consecutive levels agree to 1e-12 of the area.
QuadratureResult quad_disk_form_factor(double radius, double beta);

/// Ball of radius R: Gauss-Legendre on the radial integral of 4 pi r^2 sin(k r) / (k r),
/// escalated like the disk rule.
QuadratureResult quad_sphere_form_factor(double radius, double k);

}  // namespace polyft::oracle
