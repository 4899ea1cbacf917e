#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyft/error.hpp"
#include "polyft/geom.hpp"
#include "polyft/random_shapes.hpp"

using namespace polyft;
using geom::Polygon;

namespace {
const Polygon kSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("validate_simple accepts the unit square") {
  CHECK(geom::validate_simple(kSquare.vertices()).ok);
}

TEST_CASE("validate_simple reports crossing edges of a bowtie") {
  const std::vector<Vec2> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  const auto r = geom::validate_simple(bowtie);
  CHECK_FALSE(r.ok);
  CHECK(r.first == 0);
  CHECK(r.second == 2);
  CHECK(r.defect.find("intersect") != std::string::npos);
}

TEST_CASE("validate_simple reports a repeated vertex") {
  const std::vector<Vec2> tri{{0, 0}, {0, 0}, {1, 0}};
  const auto r = geom::validate_simple(tri);
  CHECK_FALSE(r.ok);
  CHECK(r.defect.find("duplicate") != std::string::npos);
}

TEST_CASE("validate_simple flags a fold-back spike and a touching vertex") {
  CHECK_FALSE(geom::validate_simple(std::vector<Vec2>{{0, 0}, {2, 0}, {1, 0}, {1, 1}}).ok);
  // vertex 4 lies on edge 0
  CHECK_FALSE(geom::validate_simple(std::vector<Vec2>{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 0}, {0, 1}}).ok);
}

TEST_CASE("polygon construction rejects malformed rings") {
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Polygon({{0, 0}, {0, 0}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}}), InputError);
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, NAN}, {2, 1}}), InputError);
  const Polygon bowtie({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  CHECK_FALSE(bowtie.is_simple());
  CHECK_THROWS_AS(bowtie.require_simple(), InputError);
}

TEST_CASE("signed area follows orientation") {
  CHECK(geom::signed_area(kSquare) == 1.0);
  CHECK(geom::signed_area(kSquare.reversed()) == -1.0);
  CHECK(geom::signed_area(Polygon({{0, 0}, {1, 0}, {0, 1}})) == 0.5);
}

TEST_CASE("edge closure vanishes") {
  CHECK(geom::edge_closure(kSquare) == Vec2{0, 0});
  random_shapes::Rng rng(7);
  const auto p = random_shapes::star_polygon(rng, 20);
  CHECK(norm(geom::edge_closure(p)) <= 1e-15 * p.diameter());
}

TEST_CASE("turning number of squares and a random 50-gon") {
  CHECK(geom::turning_number(kSquare).winding == 1);
  CHECK(geom::turning_number(kSquare.reversed()).winding == -1);
  random_shapes::Rng rng(8);
  const auto p = random_shapes::star_polygon(rng, 50);
  const auto t = geom::turning_number(p);
  CHECK(t.winding == 1);
  CHECK(std::abs(t.total_angle - 2 * std::numbers::pi) < 1e-9);
}

TEST_CASE("turning number of a doubly wound ring is two") {
  std::vector<Vec2> v;
  for (int i = 0; i < 10; ++i) {
    const double t = 4 * std::numbers::pi * i / 10.0 + 0.1;
    v.push_back({std::cos(t) * (1 + 0.01 * i), std::sin(t) * (1 + 0.01 * i)});
  }
  CHECK(geom::turning_number(Polygon(v)).winding == 2);
}

TEST_CASE("gram area element") {
  CHECK(geom::gram_area_element(Vec2{1, 0}, Vec2{0, 1}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(geom::gram_area_element(Vec3{1, 0, 0}, Vec3{1, 1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(geom::gram_area_element(Vec2{2, 0}, Vec2{3, 0}) == 0.0);
}

TEST_CASE("parallelepiped volume") {
  CHECK(geom::parallelepiped_volume({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(geom::parallelepiped_volume({1, 0, 0}, {1, 1, 0}, {1, 1, 1}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(geom::parallelepiped_volume({1, 0, 0}, {1, 1, 0}, {2, 1, 0}) == doctest::Approx(0.0));
}

TEST_CASE("polyhedron volumes") {
  CHECK(geom::polyhedron_volume(geom::make_box({0, 0, 0}, {1, 1, 1})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(geom::polyhedron_volume(geom::make_tetrahedron({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1})) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(geom::polyhedron_volume(geom::make_box({0, 0, 0}, {2, 3, 4})) == doctest::Approx(24.0).epsilon(1e-15));
}

TEST_CASE("polyhedron construction rejects open or inverted surfaces") {
  const std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(geom::Polyhedron(v, {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}}), InputError);
  CHECK_THROWS_AS(geom::Polyhedron(v, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}), InputError);
  CHECK_THROWS_AS(geom::Polyhedron(v, {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 9}}), InputError);
}

TEST_CASE("non-planar faces are rejected") {
  std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {1, 1, 0.1}, {0, 1, 0}, {0.5, 0.5, 1}};
  CHECK_THROWS_AS(geom::Polyhedron(v, {{0, 3, 2, 1}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}}), InputError);
}

TEST_CASE("box centroid and central second moments") {
  const auto b = geom::make_box({1, 2, 3}, {3, 3, 7});
  CHECK(b.centroid().x == doctest::Approx(2.0));
  CHECK(b.centroid().y == doctest::Approx(2.5));
  CHECK(b.centroid().z == doctest::Approx(5.0));
  const auto& c = b.central_second_moments();
  const double vol = 8.0;
  CHECK(c[0] == doctest::Approx(vol * 4.0 / 12.0));
  CHECK(c[4] == doctest::Approx(vol * 1.0 / 12.0));
  CHECK(c[8] == doctest::Approx(vol * 16.0 / 12.0));
  CHECK(std::abs(c[1]) < 1e-14);
}

TEST_CASE("sampled curves need eight distinct-ended points") {
  CHECK_THROWS_AS(geom::SampledCurve({{0, 0}, {1, 0}, {1, 1}}), InputError);
  CHECK_NOTHROW(geom::sample_circle(1.0, 8));
}
