#include "polyft/identities.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "polyft/error.hpp"
#include "polyft/oracle.hpp"
#include "polyft/quadrature.hpp"

namespace polyft::identities {

namespace {

constexpr double kCurlTol = 1e-5;
constexpr int kLineNodes = 16;

double fd_curl(const VectorField2D::Field& f, const Vec2& p) {
  const double h = 1e-5;
  const double dfy_dx = (f({p.x + h, p.y}).y - f({p.x - h, p.y}).y) / (2.0 * h);
  const double dfx_dy = (f({p.x, p.y + h}).x - f({p.x, p.y - h}).x) / (2.0 * h);
  return dfy_dx - dfx_dy;
}

double ratio(double area, double perimeter) {
  if (!(perimeter > 0.0)) throw InputError("isoperimetric ratio needs a positive perimeter");
  const double q = 4.0 * std::numbers::pi * std::abs(area) / (perimeter * perimeter);
  if (q > 1.0 + 1e-12) throw ToleranceError("isoperimetric ratio exceeds 1: " + std::to_string(q));
  return q;
}

}  // namespace

VectorField2D::VectorField2D(std::string name, Field field, Curl curl)
    : name_(std::move(name)), field_(std::move(field)), curl_(std::move(curl)) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const Vec2 p{u(rng), u(rng)};
    const double a = curl_(p);
    const double fd = fd_curl(field_, p);
    if (std::abs(a - fd) > kCurlTol * std::max(1.0, std::abs(a))) {
      throw InputError("curl of field '" + name_ + "' disagrees with finite differences");
    }
  }
}

std::vector<VectorField2D> builtin_fields() {
  std::vector<VectorField2D> out;
  const auto add = [&](const char* name, int degree, VectorField2D::Field f, VectorField2D::Curl c) {
    out.emplace_back(name, std::move(f), std::move(c));
    out.back().degree = degree;
  };
  add("rotation", 1, [](const Vec2& p) { return Vec2{-p.y, p.x}; }, [](const Vec2&) { return 2.0; });
  add("constant", 0, [](const Vec2&) { return Vec2{1.5, -0.7}; }, [](const Vec2&) { return 0.0; });
  add("shear_x2", 2, [](const Vec2& p) { return Vec2{0.0, p.x * p.x}; }, [](const Vec2& p) { return 2.0 * p.x; });
  add("mixed_cubic", 4, [](const Vec2& p) { return Vec2{p.x * p.x * p.y, p.x * p.y * p.y * p.y}; },
      [](const Vec2& p) { return p.y * p.y * p.y - p.x * p.x; });
  add("swap_cubic", 3, [](const Vec2& p) { return Vec2{p.y * p.y * p.y, p.x * p.x * p.x}; },
      [](const Vec2& p) { return 3.0 * p.x * p.x - 3.0 * p.y * p.y; });
  add("quintic", 5,
      [](const Vec2& p) { return Vec2{-p.x * p.x * std::pow(p.y, 3), std::pow(p.x, 4) * p.y}; },
      [](const Vec2& p) { return 4.0 * std::pow(p.x, 3) * p.y + 3.0 * p.x * p.x * p.y * p.y; });
  add("swap_sextic", 6, [](const Vec2& p) { return Vec2{std::pow(p.y, 6), std::pow(p.x, 6)}; },
      [](const Vec2& p) { return 6.0 * std::pow(p.x, 5) - 6.0 * std::pow(p.y, 5); });
  add("mixed_sextic", 6,
      [](const Vec2& p) { return Vec2{std::pow(p.x * p.y, 3), -std::pow(p.x, 5) * p.y}; },
      [](const Vec2& p) { return -5.0 * std::pow(p.x, 4) * p.y - 3.0 * std::pow(p.x, 3) * p.y * p.y; });
  return out;
}

double curve_area(const geom::SampledCurve& curve) {
  const auto pts = curve.points();
  double s = 0.0;
  for (std::size_t n = 0; n < pts.size(); ++n) s += cross(pts[n], pts[(n + 1) % pts.size()]);
  return 0.5 * s;
}

StokesResult stokes_check(const VectorField2D& field, const geom::Polygon& poly) {
  const oracle::Triangulation tri = oracle::triangulate(poly);
  const auto curl = [&](const Vec2& p) { return field.curl(p); };
  // The collapsed rule with n nodes integrates degree 2n - 2 exactly; confirm with n + 4.
  const int n = std::max(4, field.degree / 2 + 3);
  const double coarse = oracle::integrate(tri, curl, n);
  const double fine = oracle::integrate(tri, curl, n + 4);
  if (std::abs(fine - coarse) > 1e-12 * (1.0 + std::abs(fine))) {
    throw ToleranceError("area quadrature of the curl did not converge for field '" + field.name() + "'");
  }
  StokesResult r;
  r.lhs = fine * tri.orientation;

  const quad::GaussRule g = quad::gauss_legendre_unit(kLineNodes);
  double circ = 0.0;
  for (std::size_t e = 0; e < poly.size(); ++e) {
    const Vec2 a = poly[e];
    const Vec2 l = poly.edge(e);
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * dot(field(a + g.nodes[i] * l), l);
    circ += s;
  }
  r.rhs = circ;
  r.abs_gap = std::abs(r.lhs - r.rhs);
  return r;
}

double isoperimetric_ratio(const geom::Polygon& poly) {
  poly.require_simple();
  return ratio(geom::signed_area(poly), geom::perimeter(poly));
}

double isoperimetric_ratio(const geom::SampledCurve& curve) {
  const auto pts = curve.points();
  double len = 0.0;
  for (std::size_t n = 0; n < pts.size(); ++n) len += norm(pts[(n + 1) % pts.size()] - pts[n]);
  return ratio(curve_area(curve), len);
}

}  // namespace polyft::identities
