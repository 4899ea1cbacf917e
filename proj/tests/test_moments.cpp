#include <doctest.h>

#include <cmath>

#include "polyft/error.hpp"
#include "polyft/moments.hpp"
#include "polyft/random_shapes.hpp"

using namespace polyft;
using geom::Polygon;
using moments::ComplexPolygon;

namespace {
const Polygon kSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const Polygon kTriangle({{0, 0}, {1, 0}, {0, 1}});
}  // namespace

TEST_CASE("unit square moments") {
  const auto m = moments::moments_from_vertices(kSquare, 4);
  CHECK(m.area() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.at(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.at(2, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m.at(1, 1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(m.at(2, 2) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK(m.at(0, 4) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("triangle mixed moment") {
  CHECK(moments::moments_from_vertices(kTriangle, 2).at(1, 1) == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("moments describe the region regardless of orientation") {
  const auto a = moments::moments_from_vertices(kTriangle, 5);
  const auto b = moments::moments_from_vertices(kTriangle.reversed(), 5);
  for (std::size_t i = 0; i < a.values().size(); ++i) CHECK(a.values()[i] == doctest::Approx(b.values()[i]));
  const auto s = moments::signed_moments_from_vertices(kTriangle.reversed(), 2);
  CHECK(s.area() == doctest::Approx(-0.5));
}

TEST_CASE("moment table lookups outside the table throw") {
  const auto m = moments::moments_from_vertices(kSquare, 2);
  CHECK_THROWS_AS(m.at(2, 1), InputError);
  CHECK_THROWS_AS(m.at(-1, 0), InputError);
  CHECK_THROWS_AS(moments::moments_from_vertices(kSquare, 17), InputError);
  CHECK_THROWS_AS(moments::moments_from_vertices(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), 2), InputError);
}

TEST_CASE("normalized moments stay inside the bounding box") {
  random_shapes::Rng rng(201);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_shapes::random_polygon(rng);
    const auto m = moments::moments_from_vertices(p, 6);
    for (int k = 1; k <= 6; ++k) {
      // even powers of centred coordinates are bounded by the half-extent
      const double mean = m.at(k, 0) / m.area();
      const double lo = p.bbox_min().x, hi = p.bbox_max().x;
      const double bound = std::max(std::pow(std::abs(lo), k), std::pow(std::abs(hi), k));
      CHECK(std::abs(mean) <= bound * (1 + 1e-12));
    }
  }
}

TEST_CASE("first moments") {
  const auto sq = moments::first_moments(kSquare);
  CHECK(sq.area == doctest::Approx(1.0));
  CHECK(sq.centroid.x == doctest::Approx(0.5));
  CHECK(sq.centroid.y == doctest::Approx(0.5));
  const auto tri = moments::first_moments(kTriangle);
  CHECK(tri.centroid.x == doctest::Approx(1.0 / 3.0));
  CHECK(tri.centroid.y == doctest::Approx(1.0 / 3.0));
  const auto moved = moments::first_moments(kSquare.translated({10, 20}));
  CHECK(moved.centroid.x == doctest::Approx(10.5).epsilon(1e-14));
  CHECK(moved.centroid.y == doctest::Approx(20.5).epsilon(1e-14));
}

TEST_CASE("centroid from the moment table equals first_moments") {
  random_shapes::Rng rng(202);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_shapes::random_polygon(rng);
    const auto f = moments::first_moments(p);
    const auto m = moments::moments_from_vertices(p, 1);
    CHECK(std::abs(m.at(1, 0) / m.area() - f.centroid.x) < 1e-12);
    CHECK(std::abs(m.at(0, 1) / m.area() - f.centroid.y) < 1e-12);
  }
}

TEST_CASE("davis sum of affine, quadratic and cubic h") {
  const ComplexPolygon sq(kSquare);
  CHECK(std::abs(moments::davis_sum(sq, std::vector<std::complex<double>>{{3, 1}, {-2, 5}})) < 1e-14);
  const auto two = moments::davis_sum(sq, std::vector<std::complex<double>>{0, 0, 1});
  CHECK(two.real() == doctest::Approx(2.0));
  CHECK(std::abs(two.imag()) < 1e-14);
  const auto three = moments::davis_sum(sq, std::vector<std::complex<double>>{0, 0, 0, 1});
  CHECK(three.real() == doctest::Approx(3.0));
  CHECK(three.imag() == doctest::Approx(3.0));
}

TEST_CASE("davis sum is invariant under relabelling and negated by reversal") {
  random_shapes::Rng rng(203);
  const auto p = random_shapes::random_polygon(rng);
  std::vector<Vec2> rotated(p.vertices().begin() + 1, p.vertices().end());
  rotated.push_back(p[0]);
  const std::vector<std::complex<double>> h{{0.2, 0}, {1, -1}, {0.5, 0.3}, {-0.7, 0.1}, {0.05, 0.9}};
  const auto a = moments::davis_sum(ComplexPolygon(p), h);
  const auto b = moments::davis_sum(ComplexPolygon(Polygon(rotated)), h);
  const auto c = moments::davis_sum(ComplexPolygon(p.reversed()), h);
  CHECK(std::abs(a - b) < 1e-13 * std::abs(a));
  CHECK(std::abs(a + c) < 1e-13 * std::abs(a));
}

TEST_CASE("davis sum limits") {
  const ComplexPolygon sq(kSquare);
  CHECK_THROWS_AS(moments::davis_sum(sq, moments::Polynomial(34, 1.0)), InputError);
  CHECK(sq(-1) == std::complex<double>(0, 1));
  CHECK(sq(4) == std::complex<double>(0, 0));
}

TEST_CASE("complex moments") {
  const auto tau_sq = moments::complex_moments(ComplexPolygon(kSquare), 3);
  REQUIRE(tau_sq.size() == 2);
  CHECK(tau_sq[0].real() == doctest::Approx(2.0));
  const auto tau = moments::complex_moments(ComplexPolygon(kTriangle), 3);
  CHECK(tau[1].real() == doctest::Approx(1.0));
  CHECK(tau[1].imag() == doctest::Approx(1.0));
}

TEST_CASE("complex moments equal binomial sums of real moments") {
  random_shapes::Rng rng(204);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_shapes::random_polygon(rng);
    const auto m = moments::moments_from_vertices(p, 8);
    const auto tau = moments::complex_moments(ComplexPolygon(p), 10);
    const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int k = 2; k <= 10; ++k) {
      std::complex<double> ref{0, 0};
      for (int j = 0; j <= k - 2; ++j) ref += moments::binomial(k - 2, j) * ipow[j % 4] * m.at(k - 2 - j, j);
      ref *= static_cast<double>(k * (k - 1));
      CHECK(std::abs(tau[static_cast<std::size_t>(k - 2)] - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("horner and binomial") {
  const std::vector<std::complex<double>> c{{1, 0}, {2, 0}, {3, 0}};
  CHECK(moments::horner(c, {2, 0}) == std::complex<double>(17, 0));
  CHECK(moments::binomial(10, 3) == 120.0);
  CHECK(moments::binomial(4, -1) == 0.0);
  CHECK(moments::binomial(4, 5) == 0.0);
}
