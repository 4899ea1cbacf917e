#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyft/error.hpp"
#include "polyft/identities.hpp"
#include "polyft/moments.hpp"
#include "polyft/random_shapes.hpp"

using namespace polyft;
using geom::Polygon;
using identities::VectorField2D;

namespace {
constexpr double kPi = std::numbers::pi;
const Polygon kSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}  // namespace

TEST_CASE("curve area of a sampled circle, a square and a reversed curve") {
  CHECK(std::abs(identities::curve_area(geom::sample_circle(1.0, 1024)) - kPi) < 2e-5);
  const geom::SampledCurve sq({{0, 0}, {0.5, 0}, {1, 0}, {1, 0.5}, {1, 1}, {0.5, 1}, {0, 1}, {0, 0.5}});
  CHECK(identities::curve_area(sq) == doctest::Approx(1.0).epsilon(1e-15));
  const auto circle = geom::sample_circle(2.0, 64);
  auto pts = std::vector<Vec2>(circle.points().begin(), circle.points().end());
  const double fwd = identities::curve_area(geom::SampledCurve(pts));
  std::reverse(pts.begin(), pts.end());
  CHECK(identities::curve_area(geom::SampledCurve(pts)) == doctest::Approx(-fwd));
}

TEST_CASE("curve area converges at second order") {
  double prev = 0.0;
  for (std::size_t n = 64; n <= 4096; n *= 2) {
    const double err = std::abs(identities::curve_area(geom::sample_circle(1.0, n)) - kPi);
    if (prev > 0.0) CHECK(prev / err >= 3.9);
    prev = err;
  }
}

TEST_CASE("stokes on the unit square with a rotation field") {
  const VectorField2D rot("rotation", [](const Vec2& p) { return Vec2{-p.y, p.x}; }, [](const Vec2&) { return 2.0; });
  const auto r = identities::stokes_check(rot, kSquare);
  CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-14));
  const auto rev = identities::stokes_check(rot, kSquare.reversed());
  CHECK(rev.lhs == doctest::Approx(-2.0));
  CHECK(rev.rhs == doctest::Approx(-2.0));
}

TEST_CASE("stokes with a constant field is zero") {
  const VectorField2D c("constant", [](const Vec2&) { return Vec2{3, -1}; }, [](const Vec2&) { return 0.0; });
  const auto r = identities::stokes_check(c, kSquare);
  CHECK(std::abs(r.lhs) < 1e-15);
  CHECK(std::abs(r.rhs) < 1e-14);
}

TEST_CASE("stokes with F = (0, x^2) on the reference triangle") {
  const Polygon tri({{0, 0}, {1, 0}, {0, 1}});
  const VectorField2D f("x2", [](const Vec2& p) { return Vec2{0, p.x * p.x}; }, [](const Vec2& p) { return 2 * p.x; });
  const auto r = identities::stokes_check(f, tri);
  const auto fm = moments::first_moments(tri);
  CHECK(r.lhs == doctest::Approx(2.0 * fm.area * fm.centroid.x).epsilon(1e-14));
  CHECK(r.lhs == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.abs_gap < 1e-10);
}

TEST_CASE("builtin fields pass stokes on random polygons") {
  random_shapes::Rng rng(401);
  const auto fields = identities::builtin_fields();
  CHECK(fields.size() == 8);
  for (int i = 0; i < 5; ++i) {
    const auto p = random_shapes::random_polygon(rng);
    for (const auto& f : fields) {
      const auto r = identities::stokes_check(f, p);
      CHECK(r.abs_gap < 1e-8 * (1 + std::abs(r.lhs)));
    }
  }
}

TEST_CASE("a wrong curl is caught at construction") {
  CHECK_THROWS_AS(VectorField2D("bad", [](const Vec2& p) { return Vec2{-p.y, p.x}; }, [](const Vec2&) { return 1.0; }),
                  InputError);
}

TEST_CASE("isoperimetric ratios") {
  CHECK(identities::isoperimetric_ratio(kSquare) == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK(identities::isoperimetric_ratio(geom::regular_polygon(6)) == doctest::Approx(kPi * std::sqrt(3.0) / 6.0).epsilon(1e-14));
  CHECK(std::abs(identities::isoperimetric_ratio(geom::sample_circle(1.0, 4096)) - 1.0) < 1e-5);
  CHECK(identities::isoperimetric_ratio(kSquare.reversed()) == doctest::Approx(kPi / 4.0));
}

TEST_CASE("regular polygon ratios increase towards one") {
  double prev = 0.0;
  for (int n = 3; n <= 64; ++n) {
    const double q = identities::isoperimetric_ratio(geom::regular_polygon(static_cast<std::size_t>(n), 2.5));
    CHECK(q > prev);
    CHECK(std::abs(q - (kPi / n) / std::tan(kPi / n)) < 1e-12);
    prev = q;
  }
}
