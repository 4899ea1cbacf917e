#pragma once

// Numerical checks of smooth-curve identities: sampled-curve area, planar Stokes law and
// the isoperimetric ratio.

#include <functional>
#include <string>
#include <vector>

#include "polyft/geom.hpp"

namespace polyft::identities {

/// Field F and its scalar curl dF_y/dx - dF_x/dy. Callables must be safe to call
/// concurrently. The constructor compares the curl against central differences at 10
/// seeded points in [-1, 1]^2 and throws InputError beyond 1e-5 (absolute, or relative
/// when |curl| > 1).
class VectorField2D {
 public:
  using Field = std::function<Vec2(const Vec2&)>;
  using Curl = std::function<double(const Vec2&)>;

  VectorField2D(std::string name, Field field, Curl curl);

  const std::string& name() const { return name_; }
  Vec2 operator()(const Vec2& p) const { return field_(p); }
  double curl(const Vec2& p) const { return curl_(p); }
  /// Total polynomial degree when known (0 otherwise); sets the area quadrature order.
  int degree = 0;

 private:
  std::string name_;
  Field field_;
  Curl curl_;
};

/// Eight polynomial fields of degree <= 6.
std::vector<VectorField2D> builtin_fields();

/// Shoelace area of the polygonal interpolant (orientation-signed).
double curve_area(const geom::SampledCurve& curve);

struct StokesResult {
  double lhs = 0.0;  // integral of the curl over the region, signed by orientation
  double rhs = 0.0;  // circulation, 16-node Gauss-Legendre per edge
  double abs_gap = 0.0;
};

/// Throws InputError for non-simple polygons.
StokesResult stokes_check(const VectorField2D& field, const geom::Polygon& poly);

/// 4 pi A / L^2. Throws InputError for zero perimeter and ToleranceError if Q > 1 + 1e-12.
double isoperimetric_ratio(const geom::Polygon& poly);
double isoperimetric_ratio(const geom::SampledCurve& curve);

}  // namespace polyft::identities
