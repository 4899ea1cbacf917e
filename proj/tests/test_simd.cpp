#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "polyft/geom.hpp"
#include "polyft/random_shapes.hpp"
#include "polyft/simd/edge_sum.hpp"
#include "polyft/simd/sincos.hpp"

using namespace polyft;

namespace {

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::vector<double> sincos_arguments() {
  std::vector<double> xs = {0.0, -0.0, 1e-300, -1e-300, 1e-8, std::numbers::pi / 4, std::numbers::pi / 2,
                            std::numbers::pi, -std::numbers::pi, 2 * std::numbers::pi, 1e5, 9.99e5, 1e6, -1e6,
                            1.5e6, 1e12, std::numeric_limits<double>::denorm_min()};
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> small(-50.0, 50.0), expo(-10.0, 6.5);
  for (int i = 0; i < 20000; ++i) xs.push_back(small(rng));
  for (int i = 0; i < 5000; ++i) xs.push_back((i % 2 ? -1.0 : 1.0) * std::pow(10.0, expo(rng)));
  for (int k = -64; k <= 64; ++k) xs.push_back(k * std::numbers::pi / 4);
  return xs;
}

}  // namespace

TEST_CASE("scalar sincos tracks the standard library") {
  for (double x : sincos_arguments()) {
    double s, c;
    simd::sincos(x, s, c);
    CHECK(std::abs(s - std::sin(x)) <= 4e-16 * std::max(1.0, std::abs(x) * 1e-6));
    CHECK(std::abs(c - std::cos(x)) <= 4e-16 * std::max(1.0, std::abs(x) * 1e-6));
  }
}

TEST_CASE("scalar sincos symmetry is exact") {
  for (double x : sincos_arguments()) {
    double s1, c1, s2, c2;
    simd::sincos(x, s1, c1);
    simd::sincos(-x, s2, c2);
    CHECK(bits(s1) == bits(-s2));
    CHECK(bits(c1) == bits(c2));
  }
  double s, c;
  simd::sincos(-0.0, s, c);
  CHECK(std::signbit(s));
  CHECK(c == 1.0);
}

TEST_CASE("sinc series and direct branches agree at the cutoff") {
  const double x = simd::kSincSeriesCutoff;
  CHECK(simd::sinc(std::nextafter(x, 0.0)) == doctest::Approx(std::sin(x) / x).epsilon(1e-15));
  CHECK(simd::sinc(0.0) == 1.0);
  CHECK(simd::sinc(1.5) == doctest::Approx(2.0 * std::sin(1.5) / 3.0).epsilon(1e-15));
}

TEST_CASE("isa name reflects the dispatch") {
  const auto isa = simd::active_isa();
  CHECK((simd::isa_name(isa) == "avx2" || simd::isa_name(isa) == "scalar"));
}

#if defined(POLYFT_HAVE_AVX2)

TEST_CASE("vector sincos matches scalar bit for bit") {
  if (!__builtin_cpu_supports("avx2")) return;
  const auto xs = sincos_arguments();
  std::vector<double> s(xs.size()), c(xs.size());
  simd::sincos_avx2(xs, s, c);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double rs, rc;
    simd::sincos(xs[i], rs, rc);
    INFO("x = " << xs[i]);
    CHECK(bits(s[i]) == bits(rs));
    CHECK(bits(c[i]) == bits(rc));
  }
}

TEST_CASE("vector edge sum matches scalar bit for bit including tails") {
  if (!__builtin_cpu_supports("avx2")) return;
  random_shapes::Rng rng(2024);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto poly = random_shapes::random_polygon(rng);
    const simd::EdgeTable edges(poly);
    const std::size_t n = 1 + static_cast<std::size_t>(trial) * 3;  // exercises remainders 0..3
    std::vector<double> bx(n), by(n);
    for (std::size_t i = 0; i < n; ++i) {
      bx[i] = u(rng);
      by[i] = (i % 5 == 0) ? 0.0 : u(rng);
    }
    std::vector<double> r1(n), i1(n), r2(n), i2(n);
    simd::edge_sum_scalar(edges, bx, by, r1, i1);
    simd::edge_sum_avx2(edges, bx, by, r2, i2);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(bits(r1[i]) == bits(r2[i]));
      CHECK(bits(i1[i]) == bits(i2[i]));
    }
  }
}

#endif

TEST_CASE("dispatched edge sum equals the scalar reference") {
  random_shapes::Rng rng(99);
  const auto poly = random_shapes::random_polygon(rng);
  const simd::EdgeTable edges(poly);
  std::vector<double> bx = {0.3, -1.2, 5.0, 17.5, -3.3, 0.01, 8.0}, by = {0.1, 0.7, -2.0, 4.0, 0.0, 0.02, -8.0};
  std::vector<double> r1(bx.size()), i1(bx.size()), r2(bx.size()), i2(bx.size());
  simd::edge_sum_scalar(edges, bx, by, r1, i1);
  simd::edge_sum(edges, bx, by, r2, i2);
  for (std::size_t i = 0; i < bx.size(); ++i) {
    CHECK(bits(r1[i]) == bits(r2[i]));
    CHECK(bits(i1[i]) == bits(i2[i]));
  }
}
