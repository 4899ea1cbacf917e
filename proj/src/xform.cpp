#include "polyft/xform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "polyft/bessel.hpp"
#include "polyft/error.hpp"
#include "polyft/moments.hpp"
#include "polyft/simd/edge_sum.hpp"
#include "polyft/simd/sincos.hpp"

namespace polyft::xform {

namespace {

FormFactor expi(double phase) {
  double s, c;
  simd::sincos(phase, s, c);
  return {c, s};
}

// sum_{n <= order} (i^n / n!) sum_p C(n, p) b1^p b2^(n-p) M(x^p y^(n-p)), times exp(i b . x0)
// where the table holds moments about x0.
FormFactor series_about(const moments::MomentTable& m, const Vec2& x0, const Vec2& b, int order) {
  std::array<double, 17> p1{}, p2{};
  p1[0] = p2[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    p1[static_cast<std::size_t>(k)] = p1[static_cast<std::size_t>(k - 1)] * b.x;
    p2[static_cast<std::size_t>(k)] = p2[static_cast<std::size_t>(k - 1)] * b.y;
  }
  double re = 0.0, im = 0.0;
  double inv_fact = 1.0;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) inv_fact /= n;
    double s = 0.0;
    for (int p = 0; p <= n; ++p) {
      s += moments::binomial(n, p) * p1[static_cast<std::size_t>(p)] * p2[static_cast<std::size_t>(n - p)] *
           m.at(p, n - p);
    }
    s *= inv_fact;
    switch (n % 4) {
      case 0: re += s; break;
      case 1: im += s; break;
      case 2: re -= s; break;
      default: im -= s; break;
    }
  }
  return FormFactor(re, im) * expi(dot(b, x0));
}

struct SeriesData {
  Vec2 center;
  moments::MomentTable table;
};

SeriesData series_data(const geom::Polygon& poly, int order) {
  const Vec2 c = poly.bbox_center();
  return {c, moments::signed_moments_from_vertices(poly.translated(-c), order)};
}

FormFactor edge_sum_single(const simd::EdgeTable& edges, const Vec2& b) {
  double re = 0.0, im = 0.0;
  simd::edge_sum(edges, std::span<const double>(&b.x, 1), std::span<const double>(&b.y, 1),
                 std::span<double>(&re, 1), std::span<double>(&im, 1));
  return {re, im};
}

}  // namespace

Vec2 Wavevector2::direction() const {
  const double m = magnitude();
  return m > 0.0 ? v_ * (1.0 / m) : Vec2{};
}

FormFactor polygon_edge_sum(const geom::Polygon& poly, const Wavevector2& beta) {
  if (beta.vec() == Vec2{}) throw InputError("edge sum is undefined at b = 0");
  return edge_sum_single(simd::EdgeTable(poly), beta.vec());
}

FormFactor polygon_moment_series(const geom::Polygon& poly, const Wavevector2& beta, int order) {
  if (order < 0 || order > 16) throw InputError("series order must lie in [0, 16]");
  const SeriesData d = series_data(poly, order);
  return series_about(d.table, d.center, beta.vec(), order);
}

FormFactor polygon_form_factor_unchecked(const geom::Polygon& poly, const Wavevector2& beta) {
  const Vec2& b = beta.vec();
  if (b == Vec2{}) return {geom::signed_area(poly), 0.0};
  if (beta.magnitude() * poly.diameter() < kSeriesSwitch) return polygon_moment_series(poly, beta, kSeriesOrder);
  return edge_sum_single(simd::EdgeTable(poly), b);
}

FormFactor polygon_form_factor(const geom::Polygon& poly, const Wavevector2& beta) {
  poly.require_simple();
  return polygon_form_factor_unchecked(poly, beta);
}

struct PolygonTransform::Impl {
  simd::EdgeTable edges;
  SeriesData series;
  double area;
  double diameter;
};

PolygonTransform::PolygonTransform(const geom::Polygon& poly, bool allow_nonsimple) {
  if (!allow_nonsimple) poly.require_simple();
  impl_ = std::make_shared<const Impl>(
      Impl{simd::EdgeTable(poly), series_data(poly, kSeriesOrder), geom::signed_area(poly), poly.diameter()});
}

FormFactor PolygonTransform::operator()(const Wavevector2& beta) const {
  FormFactor out;
  evaluate(std::span<const double>(&beta.vec().x, 1), std::span<const double>(&beta.vec().y, 1),
           std::span<FormFactor>(&out, 1));
  return out;
}

void PolygonTransform::evaluate(std::span<const double> bx, std::span<const double> by,
                                std::span<FormFactor> out) const {
  if (bx.size() != by.size() || out.size() != bx.size()) throw InputError("batch spans differ in length");
  const Impl& im = *impl_;
  std::vector<double> lx, ly, rr, ri;
  std::vector<std::size_t> slot;
  lx.reserve(bx.size());
  ly.reserve(bx.size());
  slot.reserve(bx.size());
  for (std::size_t i = 0; i < bx.size(); ++i) {
    const Vec2 b{bx[i], by[i]};
    if (b == Vec2{}) {
      out[i] = {im.area, 0.0};
    } else if (norm(b) * im.diameter < kSeriesSwitch) {
      out[i] = series_about(im.series.table, im.series.center, b, kSeriesOrder);
    } else {
      lx.push_back(b.x);
      ly.push_back(b.y);
      slot.push_back(i);
    }
  }
  rr.resize(lx.size());
  ri.resize(lx.size());
  simd::edge_sum(im.edges, lx, ly, rr, ri);
  for (std::size_t j = 0; j < slot.size(); ++j) out[slot[j]] = {rr[j], ri[j]};
}

FormFactor disk_form_factor(double radius, const Wavevector2& beta) {
  if (!(radius > 0.0)) throw InputError("disk radius must be positive");
  return {std::numbers::pi * radius * radius * special::jinc(beta.magnitude() * radius), 0.0};
}

FormFactor rect_form_factor(double a1, double a2, const Wavevector2& beta) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw InputError("rectangle half-widths must be positive");
  return {4.0 * a1 * a2 * simd::sinc(beta.vec().x * a1) * simd::sinc(beta.vec().y * a2), 0.0};
}

FormFactor sphere_form_factor(double radius, const Wavevector3& beta) {
  if (!(radius > 0.0)) throw InputError("sphere radius must be positive");
  const double k = beta.magnitude();
  const double x = k * radius;
  const double vol = 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
  if (x < 1e-2) {
    const double x2 = x * x;
    return {vol * (1.0 - x2 / 10.0 + x2 * x2 / 280.0), 0.0};
  }
  return {4.0 * std::numbers::pi * (std::sin(x) - x * std::cos(x)) / (k * k * k), 0.0};
}

FaceFrame face_frame(const geom::Polyhedron& p, std::size_t face) {
  const geom::Face& f = p.faces()[face];
  const auto verts = p.vertices();
  const Vec3 origin = verts[f.ring[0]];
  const Vec3 e = verts[f.ring[1]] - origin;
  const double len = norm(e);
  if (!(len > 0.0)) throw InputError("degenerate face: zero-length first edge");
  const Vec3 u = e * (1.0 / len);
  const Vec3 w = cross(f.normal, u);
  std::vector<Vec2> pts;
  pts.reserve(f.ring.size());
  for (auto idx : f.ring) {
    const Vec3 d = verts[idx] - origin;
    pts.push_back({dot(d, u), dot(d, w)});
  }
  return {origin, u, w, geom::Polygon(std::move(pts))};
}

FormFactor polyhedron_form_factor(const geom::Polyhedron& p, const Wavevector3& beta) {
  return PolyhedronTransform(p)(beta);
}

struct PolyhedronTransform::Impl {
  struct FaceData {
    Vec3 origin, u, w, normal;
    PolygonTransform transform;
  };
  std::vector<FaceData> faces;
  double volume;
  double diameter;
  Vec3 centroid;
  std::array<double, 9> second;
};

PolyhedronTransform::PolyhedronTransform(const geom::Polyhedron& p) {
  auto impl = std::make_shared<Impl>();
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    FaceFrame fr = face_frame(p, f);
    impl->faces.push_back({fr.origin, fr.u, fr.w, p.faces()[f].normal, PolygonTransform(fr.polygon)});
  }
  impl->volume = p.volume();
  impl->diameter = p.diameter();
  impl->centroid = p.centroid();
  impl->second = p.central_second_moments();
  impl_ = std::move(impl);
}

FormFactor PolyhedronTransform::operator()(const Wavevector3& beta) const {
  const Impl& im = *impl_;
  const Vec3& b = beta.vec();
  const double k = beta.magnitude();
  if (k * im.diameter < kSeriesSwitch) {
    const double bv[3] = {b.x, b.y, b.z};
    double quad = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) quad += bv[i] * bv[j] * im.second[static_cast<std::size_t>(3 * i + j)];
    return FormFactor(im.volume - 0.5 * quad, 0.0) * expi(dot(b, im.centroid));
  }
  const double k2 = k * k;
  FormFactor sum{0.0, 0.0};
  for (const auto& f : im.faces) {
    const double bn = dot(b, f.normal);
    if (bn == 0.0) continue;
    const FormFactor face = f.transform(Wavevector2(dot(b, f.u), dot(b, f.w))) * expi(dot(b, f.origin));
    sum += bn * face;
  }
  // sum / (i k^2)
  return FormFactor(sum.imag() / k2, -sum.real() / k2);
}

double series_discrepancy(const geom::Polygon& poly, const Vec2& beta_hat, int order, double t) {
  if (order < 0 || order > 8) throw InputError("series order must lie in [0, 8]");
  const double len = norm(beta_hat);
  if (std::abs(len - 1.0) > 1e-12) throw InputError("series direction must be a unit vector");
  const moments::MomentTable m = moments::signed_moments_from_vertices(poly, order);
  const Vec2 b = beta_hat * t;
  const FormFactor phi = polygon_form_factor(poly, Wavevector2(b));
  // Origin-centred series, independent of the transform's own small-b branch.
  const FormFactor s = series_about(m, Vec2{}, b, order);
  return std::abs(phi - s) / std::abs(m.at(0, 0));
}

double series_consistency(const geom::Polygon& poly, const Vec2& beta_hat, int order) {
  double worst = 0.0;
  for (double f : {1e-2, 2e-2, 5e-2}) {
    worst = std::max(worst, series_discrepancy(poly, beta_hat, order, f / poly.diameter()));
  }
  return worst;
}

}  // namespace polyft::xform
