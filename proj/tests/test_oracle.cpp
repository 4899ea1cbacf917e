#include <doctest.h>

#include <cmath>

#include "polyft/error.hpp"
#include "polyft/moments.hpp"
#include "polyft/oracle.hpp"
#include "polyft/random_shapes.hpp"
#include "polyft/xform.hpp"

using namespace polyft;
using geom::Polygon;

TEST_CASE("triangulations of a quad, a square and an L-shape") {
  const auto quad = oracle::triangulate(Polygon({{0, 0}, {2, 0}, {2.5, 1}, {0.2, 1.4}}));
  CHECK(quad.triangles.size() == 2);
  CHECK(quad.area() == doctest::Approx(geom::signed_area(Polygon({{0, 0}, {2, 0}, {2.5, 1}, {0.2, 1.4}}))));
  const auto sq = oracle::triangulate(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  REQUIRE(sq.triangles.size() == 2);
  for (const auto& t : sq.triangles) CHECK(t.signed_area() == doctest::Approx(0.5));
  const auto l = oracle::triangulate(Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}));
  CHECK(l.triangles.size() == 4);
  CHECK(l.area() == doctest::Approx(3.0).epsilon(1e-15));
  for (const auto& t : l.triangles) CHECK(t.signed_area() > 0.0);
}

TEST_CASE("clockwise rings are triangulated counterclockwise and flagged") {
  const auto t = oracle::triangulate(Polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
  CHECK(t.orientation == -1);
  for (const auto& tri : t.triangles) CHECK(tri.signed_area() > 0.0);
}

TEST_CASE("collinear vertices are tolerated") {
  const auto t = oracle::triangulate(Polygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}));
  CHECK(t.triangles.size() == 3);
  CHECK(t.area() == doctest::Approx(2.0));
}

TEST_CASE("non-simple rings are refused") {
  CHECK_THROWS_AS(oracle::triangulate(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}})), InputError);
}

TEST_CASE("monomial integrals over triangles") {
  const oracle::Triangle ref{{0, 0}, {1, 0}, {0, 1}};
  CHECK(oracle::monomial_integral_triangle(ref, 0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(oracle::monomial_integral_triangle(ref, 1, 1) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
  const oracle::Triangle moved{{3, 4}, {4, 4.5}, {3.2, 5}};
  const double area = moved.signed_area();
  const double cx = (3 + 4 + 3.2) / 3.0;
  CHECK(oracle::monomial_integral_triangle(moved, 1, 0) == doctest::Approx(area * cx).epsilon(1e-14));
  // clockwise vertex order integrates the same region
  const oracle::Triangle cw{{0, 0}, {0, 1}, {1, 0}};
  CHECK(oracle::monomial_integral_triangle(cw, 2, 1) == doctest::Approx(oracle::monomial_integral_triangle(ref, 2, 1)));
  CHECK_THROWS_AS(oracle::monomial_integral_triangle(ref, 15, 6), InputError);
}

TEST_CASE("monomial integrals are translation covariant like the moment table") {
  random_shapes::Rng rng(301);
  const auto p = random_shapes::random_polygon(rng);
  const Vec2 d{0.4, -0.9};
  const auto base = oracle::triangulate(p);
  const auto moved = oracle::triangulate(p.translated(d));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      double expect = 0.0;
      for (int s = 0; s <= a; ++s)
        for (int t = 0; t <= b; ++t)
          expect += moments::binomial(a, s) * moments::binomial(b, t) * std::pow(d.x, a - s) * std::pow(d.y, b - t) *
                    oracle::monomial_integral(base, s, t);
      CHECK(oracle::monomial_integral(moved, a, b) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("quadrature transform examples") {
  const Polygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto zero = oracle::quad_form_factor(sq, Vec2{0, 0});
  CHECK(std::abs(zero.value - 1.0) < 1e-14);
  const Polygon centred({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
  const auto q = oracle::quad_form_factor(centred, Vec2{3, 0});
  CHECK(q.value.real() == doctest::Approx(2.0 * std::sin(1.5) / 3.0).epsilon(1e-12));
  CHECK(std::abs(q.value.imag()) < 1e-12);
  CHECK(q.value.real() == doctest::Approx(0.66499666).epsilon(1e-7));
}

TEST_CASE("quadrature matches the analytic transform on a random pentagon") {
  random_shapes::Rng rng(302);
  const auto p = random_shapes::star_polygon(rng, 5);
  const auto q = oracle::quad_form_factor(p, Vec2{7, -4});
  CHECK(std::abs(q.value - xform::polygon_form_factor(p, xform::Wavevector2(7, -4))) < 1e-8);
  CHECK(std::abs(q.value - q.previous) <= 1e-9 * std::abs(geom::signed_area(p)));
}

TEST_CASE("quadrature refuses oversized phase spans") {
  const Polygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK_THROWS_AS(oracle::quad_form_factor(sq, Vec2{150, 0}), RegimeError);
  CHECK_THROWS_AS(oracle::quad_form_factor(geom::make_box({0, 0, 0}, {1, 1, 1}), Vec3{200, 0, 0}), RegimeError);
}

TEST_CASE("3D quadrature at zero returns the volume") {
  const auto tet = geom::make_tetrahedron({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
  CHECK(std::abs(oracle::quad_form_factor(tet, Vec3{}).value - 1.0 / 6.0) < 1e-15);
}

TEST_CASE("z power integrals") {
  const auto t = oracle::triangulate(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const auto z1 = oracle::z_power_integral(t, 1);
  CHECK(z1.real() == doctest::Approx(0.5));
  CHECK(z1.imag() == doctest::Approx(0.5));
  const auto z2 = oracle::z_power_integral(t, 2);  // x^2 - y^2 + 2 i x y
  CHECK(std::abs(z2.real()) < 1e-15);
  CHECK(z2.imag() == doctest::Approx(0.5));
}

TEST_CASE("disk and sphere quadrature at zero") {
  CHECK(oracle::quad_disk_form_factor(2.0, 0.0).value.real() == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-13));
  CHECK(oracle::quad_sphere_form_factor(1.0, 0.0).value.real() == doctest::Approx(4.0 / 3.0 * std::numbers::pi).epsilon(1e-13));
}
