#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyft/bessel.hpp"
#include "polyft/error.hpp"
#include "polyft/oracle.hpp"
#include "polyft/random_shapes.hpp"
#include "polyft/xform.hpp"

using namespace polyft;
using geom::Polygon;
using xform::FormFactor;
using xform::Wavevector2;
using xform::Wavevector3;

namespace {
constexpr double kPi = std::numbers::pi;
const Polygon kUnitSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const Polygon kCenteredSquare({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
}  // namespace

TEST_CASE("wavevector perpendicular is orthogonal with equal length") {
  const Wavevector2 b(3.0, -4.0);
  CHECK(dot(b.perp(), b.vec()) == 0.0);
  CHECK(norm(b.perp()) == b.magnitude());
  CHECK(norm(b.direction()) == doctest::Approx(1.0));
  CHECK(Wavevector2().direction() == Vec2{});
}

TEST_CASE("centred square matches the sinc product") {
  for (const Vec2 b : {Vec2{0.3, 0.0}, Vec2{2.0, 5.0}, Vec2{-7.0, 1.0}, Vec2{0.0, 11.0}}) {
    const FormFactor got = xform::polygon_form_factor(kCenteredSquare, Wavevector2(b));
    const FormFactor ref = xform::rect_form_factor(0.5, 0.5, Wavevector2(b));
    CHECK(std::abs(got - ref) <= 1e-12 * std::abs(ref));
  }
}

TEST_CASE("zero wavevector returns the signed area") {
  CHECK(xform::polygon_form_factor(kUnitSquare, Wavevector2(0, 0)) == FormFactor(1.0, 0.0));
  CHECK(xform::polygon_form_factor(kUnitSquare.reversed(), Wavevector2(0, 0)) == FormFactor(-1.0, 0.0));
  const FormFactor tiny = xform::polygon_form_factor(kUnitSquare, Wavevector2(1e-9, 2e-9));
  CHECK(std::abs(tiny - FormFactor(1.0, 0.0)) < 1e-8);
}

TEST_CASE("unit square at one full period vanishes") {
  CHECK(std::abs(xform::polygon_form_factor(kUnitSquare, Wavevector2(2 * kPi, 0.0))) < 1e-12);
}

TEST_CASE("non-simple polygons need the unchecked entry point") {
  const Polygon bowtie({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(xform::polygon_form_factor(bowtie, Wavevector2(1, 2)), InputError);
  CHECK_THROWS_AS(xform::PolygonTransform{bowtie}, InputError);
  CHECK_NOTHROW(xform::polygon_form_factor_unchecked(bowtie, Wavevector2(1, 2)));
  CHECK_NOTHROW(xform::PolygonTransform(bowtie, true));
}

TEST_CASE("translation multiplies by a phase and the magnitude is bounded by the area") {
  random_shapes::Rng rng(101);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_shapes::random_polygon(rng);
    const Vec2 d{0.7, -1.3};
    const Wavevector2 b(3.0 + i * 0.2, -2.0 + i * 0.1);
    const FormFactor f = xform::polygon_form_factor(p, b);
    const FormFactor moved = xform::polygon_form_factor(p.translated(d), b);
    const FormFactor phase(std::cos(dot(b.vec(), d)), std::sin(dot(b.vec(), d)));
    const double area = geom::signed_area(p);
    CHECK(std::abs(moved - f * phase) <= 1e-12 * area);
    CHECK(std::abs(f) <= area * (1 + 1e-14));
  }
}

TEST_CASE("batch evaluation matches single evaluation exactly") {
  random_shapes::Rng rng(102);
  const auto p = random_shapes::random_polygon(rng);
  const xform::PolygonTransform t(p);
  std::vector<double> bx{0.0, 1e-6, -3.0, 17.5, 0.25, 40.0, 2.0}, by{0.0, 0.0, 4.0, -2.0, 0.0, 1.0, -9.0};
  std::vector<FormFactor> out(bx.size());
  t.evaluate(bx, by, out);
  for (std::size_t i = 0; i < bx.size(); ++i) {
    CHECK(out[i] == xform::polygon_form_factor(p, Wavevector2(bx[i], by[i])));
  }
  std::vector<FormFactor> short_out(2);
  CHECK_THROWS_AS(t.evaluate(bx, by, short_out), InputError);
}

TEST_CASE("disk transform") {
  const double r = 1.7;
  CHECK(xform::disk_form_factor(r, Wavevector2(0, 0)).real() == doctest::Approx(kPi * r * r));
  const double zero = special::bessel_j1_zero(1) / r;
  CHECK(std::abs(xform::disk_form_factor(r, Wavevector2(zero, 0.0))) < 1e-6 * kPi * r * r);
  const FormFactor q = oracle::quad_disk_form_factor(1.0, 5.0).value;
  CHECK(std::abs(xform::disk_form_factor(1.0, Wavevector2(5.0, 0.0)) - q) < 1e-6);
  CHECK_THROWS_AS(xform::disk_form_factor(0.0, Wavevector2(1, 1)), InputError);
}

TEST_CASE("rectangle transform") {
  CHECK(xform::rect_form_factor(1.0, 2.0, Wavevector2(0, 0)).real() == 8.0);
  CHECK(std::abs(xform::rect_form_factor(1.0, 2.0, Wavevector2(kPi, 0.37))) < 1e-15);
  const double ref = 8.0 * std::sin(1.0) * std::sin(2.0) / 2.0;
  CHECK(xform::rect_form_factor(1.0, 2.0, Wavevector2(1, 1)).real() == doctest::Approx(ref).epsilon(1e-15));
  const Polygon rect({{-1, -2}, {1, -2}, {1, 2}, {-1, 2}});
  CHECK(std::abs(xform::polygon_form_factor(rect, Wavevector2(1, 1)) - ref) < 1e-12 * ref);
}

TEST_CASE("cube transform along an axis is a sinc") {
  const auto cube = geom::make_box({-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5});
  CHECK(std::abs(xform::polyhedron_form_factor(cube, Wavevector3(1e-7, 0, 0)) - 1.0) < 1e-12);
  CHECK(xform::polyhedron_form_factor(cube, Wavevector3(0, 0, 0)) == FormFactor(1.0, 0.0));
  for (double b : {0.5, 3.0, 2 * kPi, 17.0}) {
    const double ref = std::sin(b / 2) / (b / 2);
    CHECK(std::abs(xform::polyhedron_form_factor(cube, Wavevector3(b, 0, 0)) - ref) < 1e-13);
  }
}

TEST_CASE("tetrahedron transform matches 3D quadrature") {
  const auto tet = geom::make_tetrahedron({0.1, 0.0, 0.2}, {1.2, 0.1, 0.0}, {0.3, 0.9, 0.1}, {0.2, 0.4, 1.1});
  random_shapes::Rng rng(103);
  for (int i = 0; i < 5; ++i) {
    const Vec3 b = random_shapes::random_vec3(rng, -11.0, 11.0);
    const FormFactor ref = oracle::quad_form_factor(tet, b).value;
    CHECK(std::abs(xform::polyhedron_form_factor(tet, Wavevector3(b)) - ref) <= 1e-6 * std::abs(ref));
  }
}

TEST_CASE("polyhedron transform is translation covariant across the series switch") {
  const auto box = geom::make_box({0, 0, 0}, {1, 2, 0.5});
  const Vec3 d{3, -1, 2};
  const auto moved = box.translated(d);
  for (double s : {1e-5, 1e-2, 3.0}) {
    const Vec3 b{0.3 * s, -0.5 * s, 0.8 * s};
    const FormFactor f = xform::polyhedron_form_factor(box, Wavevector3(b));
    const FormFactor phase(std::cos(dot(b, d)), std::sin(dot(b, d)));
    CHECK(std::abs(xform::polyhedron_form_factor(moved, Wavevector3(b)) - f * phase) < 1e-10);
  }
}

TEST_CASE("face frames are orthonormal and preserve face area") {
  const auto p = geom::make_box({0, 0, 0}, {1, 2, 3});
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    const auto fr = xform::face_frame(p, f);
    CHECK(dot(fr.u, fr.w) == doctest::Approx(0.0));
    CHECK(norm(fr.u) == doctest::Approx(1.0));
    CHECK(norm(fr.w) == doctest::Approx(1.0));
    CHECK(geom::signed_area(fr.polygon) == doctest::Approx(p.faces()[f].area));
  }
}

TEST_CASE("sphere transform") {
  const double r = 1.3;
  const double vol = 4.0 / 3.0 * kPi * r * r * r;
  CHECK(xform::sphere_form_factor(r, Wavevector3(0, 0, 0)).real() == doctest::Approx(vol));
  // small-k series and closed form agree at the switch
  const double k = 1e-2 / r;
  const double closed = 4 * kPi * (std::sin(k * r) - k * r * std::cos(k * r)) / (k * k * k);
  CHECK(xform::sphere_form_factor(r, Wavevector3(k, 0, 0)).real() == doctest::Approx(closed).epsilon(1e-9));
  CHECK(std::abs(xform::sphere_form_factor(r, Wavevector3(7, 0, 0)).real() - oracle::quad_sphere_form_factor(r, 7).value.real()) <
        1e-12 * vol);
}

TEST_CASE("series consistency examples") {
  CHECK(xform::series_consistency(kUnitSquare, {1.0, 0.0}, 6) < 1e-10);
  const Polygon tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(xform::series_discrepancy(tri, {0.6, 0.8}, 4, 1e-2) < 1e-8);
  // order 0 compares against the area alone
  const double t = 1e-2 / kUnitSquare.diameter();
  const FormFactor phi = xform::polygon_form_factor(kUnitSquare, Wavevector2(t, 0.0));
  CHECK(xform::series_discrepancy(kUnitSquare, {1.0, 0.0}, 0, t) == doctest::Approx(std::abs(phi - 1.0)));
  CHECK_THROWS_AS(xform::series_consistency(kUnitSquare, {1.0, 0.0}, 9), InputError);
  CHECK_THROWS_AS(xform::series_consistency(kUnitSquare, {2.0, 0.0}, 4), InputError);
}

TEST_CASE("discrepancy shrinks like t^(order+1)") {
  const Polygon tri({{0, 0}, {1, 0}, {0.2, 0.9}});
  const double d1 = xform::series_discrepancy(tri, {0.6, 0.8}, 3, 0.2);
  const double d2 = xform::series_discrepancy(tri, {0.6, 0.8}, 3, 0.1);
  CHECK(d1 / d2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("Bessel J1 against reference values and zeros") {
  CHECK(special::bessel_j1(0.0) == 0.0);
  CHECK(special::bessel_j1(1.0) == doctest::Approx(0.44005058574493355).epsilon(1e-13));
  CHECK(special::bessel_j1(10.0) == doctest::Approx(0.04347274616886141).epsilon(1e-11));
  CHECK(special::bessel_j1(25.0) == doctest::Approx(-0.1253502495802898).epsilon(1e-11));
  CHECK(special::bessel_j1(-2.0) == doctest::Approx(-0.5767248077568734).epsilon(1e-13));
  CHECK(special::bessel_j1_zero(1) == doctest::Approx(3.8317059702075125).epsilon(1e-13));
  CHECK(special::bessel_j1_zero(2) == doctest::Approx(7.0155866698156188).epsilon(1e-13));
  CHECK(special::jinc(0.0) == 1.0);
}
