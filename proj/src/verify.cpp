#include "polyft/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "polyft/error.hpp"
#include "polyft/geom.hpp"
#include "polyft/identities.hpp"
#include "polyft/moments.hpp"
#include "polyft/oracle.hpp"
#include "polyft/random_shapes.hpp"
#include "polyft/scatter.hpp"
#include "polyft/simd/edge_sum.hpp"
#include "polyft/xform.hpp"

namespace polyft::verify {

namespace {

using random_shapes::Rng;
using xform::FormFactor;
using xform::Wavevector2;
using xform::Wavevector3;
constexpr double kPi = std::numbers::pi;

Check timed(std::string suite, std::string name, double tolerance, const std::function<double(std::string&)>& body) {
  Check c;
  c.suite = std::move(suite);
  c.name = std::move(name);
  c.tolerance = tolerance;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.metric = body(c.detail);
    c.passed = c.metric <= tolerance;
  } catch (const std::exception& e) {
    c.passed = false;
    c.metric = std::numeric_limits<double>::infinity();
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::string fmt(const char* label, double v) {
  std::ostringstream s;
  s << label << v;
  return s.str();
}

Vec2 random_beta(Rng& rng, double max_span, double diameter) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double t = 2.0 * kPi * u(rng);
  const double mag = u(rng) * max_span / diameter;
  return {mag * std::cos(t), mag * std::sin(t)};
}

Vec2 rotate(const Vec2& v, double t) {
  return {std::cos(t) * v.x - std::sin(t) * v.y, std::sin(t) * v.x + std::cos(t) * v.y};
}

geom::Polygon map_polygon(const geom::Polygon& p, const std::function<Vec2(const Vec2&)>& f) {
  std::vector<Vec2> v;
  for (const auto& q : p.vertices()) v.push_back(f(q));
  return geom::Polygon(std::move(v));
}

double slope_band(const scatter::PorodFit& f, double expected, std::string& detail) {
  std::ostringstream s;
  s << "slope " << f.slope << " +- " << f.slope_stderr << ", expected " << expected;
  detail = s.str();
  return std::abs(f.slope - expected);
}

}  // namespace

// ---- geom ----

Check area_invariance(int polygons, std::uint64_t seed) {
  return timed("geom", "area_invariance", 1e-12, [&](std::string&) {
    Rng rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const double a = geom::signed_area(p);
      const Vec2 d{5.0 * u(rng), 5.0 * u(rng)};
      const double t = kPi * u(rng);
      const double lambda = 1.5 + u(rng);
      const double moved = geom::signed_area(map_polygon(p, [&](const Vec2& q) { return rotate(q + d, t); }));
      const double scaled = geom::signed_area(map_polygon(p, [&](const Vec2& q) { return lambda * q; }));
      worst = std::max({worst, std::abs(moved - a) / std::abs(a), std::abs(scaled - lambda * lambda * a) / std::abs(scaled)});
    }
    return worst;
  });
}

Check reversal_symmetry(int polygons, std::uint64_t seed) {
  return timed("geom", "reversal_negates_area_and_turning", 1e-15, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const auto r = p.reversed();
      if (geom::turning_number(p).winding != -geom::turning_number(r).winding) return 1.0;
      worst = std::max(worst, std::abs(geom::signed_area(p) + geom::signed_area(r)) / std::abs(geom::signed_area(p)));
    }
    return worst;
  });
}

Check umlaufsatz(int polygons, std::uint64_t seed) {
  return timed("geom", "umlaufsatz", 1e-9, [&](std::string& detail) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng, 24);
      const auto fwd = geom::turning_number(p);
      const auto rev = geom::turning_number(p.reversed());
      if (fwd.winding != 1 || rev.winding != -1) {
        detail = "winding " + std::to_string(fwd.winding) + "/" + std::to_string(rev.winding) + " at polygon " + std::to_string(i);
        return std::numeric_limits<double>::infinity();
      }
      worst = std::max({worst, std::abs(fwd.total_angle - 2.0 * kPi), std::abs(rev.total_angle + 2.0 * kPi)});
    }
    detail = "all windings +1 forward, -1 reversed";
    return worst;
  });
}

Check edge_closure(int polygons, std::uint64_t seed) {
  return timed("geom", "edge_closure", 1e-15, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      worst = std::max(worst, norm(geom::edge_closure(p)) / p.diameter());
    }
    return worst;
  });
}

Check face_normal_closure(int random_polyhedra, std::uint64_t seed) {
  return timed("geom", "face_normal_closure", 1e-12, [&](std::string& detail) {
    Rng rng(seed);
    std::vector<geom::Polyhedron> shapes;
    shapes.push_back(geom::make_box({0, 0, 0}, {1, 1, 1}));
    shapes.push_back(geom::make_tetrahedron({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
    for (int i = 0; i < random_polyhedra; ++i) {
      shapes.push_back(random_shapes::convex_polyhedron(rng, std::uniform_int_distribution<std::size_t>(6, 20)(rng)));
    }
    double worst = 0.0;
    for (const auto& p : shapes) worst = std::max(worst, norm(geom::area_normal_sum(p)) / p.surface_area());
    detail = std::to_string(shapes.size()) + " polyhedra";
    return worst;
  });
}

Check polyhedron_volumes() {
  return timed("geom", "polyhedron_volumes", 1e-14, [&](std::string&) {
    const double cube = geom::polyhedron_volume(geom::make_box({0, 0, 0}, {1, 1, 1}));
    const double tet = geom::polyhedron_volume(geom::make_tetrahedron({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
    const double box = geom::polyhedron_volume(geom::make_box({0, 0, 0}, {2, 3, 4}));
    return std::max({std::abs(cube - 1.0), std::abs(tet - 1.0 / 6.0) * 6.0, std::abs(box - 24.0) / 24.0});
  });
}

Check gram_vs_triple(int triples, std::uint64_t seed) {
  return timed("geom", "gram_vs_triple_product", 1e-12, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < triples; ++i) {
      const Vec3 a = random_shapes::random_vec3(rng), b = random_shapes::random_vec3(rng), c = random_shapes::random_vec3(rng);
      const double t = geom::triple_product_volume(a, b, c);
      worst = std::max(worst, std::abs(geom::parallelepiped_volume(a, b, c) - t) / t);
    }
    return worst;
  });
}

// ---- xform ----

Check polygon_vs_quadrature(int polygons, int betas, std::uint64_t seed) {
  return timed("xform", "polygon_vs_quadrature", 1e-8, [&](std::string& detail) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const double area = std::abs(geom::signed_area(p));
      const xform::PolygonTransform t(p);
      for (int j = 0; j < betas; ++j) {
        const Vec2 b = random_beta(rng, 50.0, p.diameter());
        const FormFactor q = oracle::quad_form_factor(p, b).value;
        worst = std::max(worst, std::abs(t(Wavevector2(b)) - q) / area);
      }
    }
    detail = std::to_string(polygons * betas) + " evaluations, |b| * diameter <= 50";
    return worst;
  });
}

Check rect_vs_sinc(int grid) {
  return timed("xform", "rect_vs_sinc_product", 1e-12, [&](std::string& detail) {
    const double a1 = 1.3, a2 = 0.7;
    const geom::Polygon rect({{-a1, -a2}, {a1, -a2}, {a1, a2}, {-a1, a2}});
    double worst = 0.0;
    int aligned = 0;
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const Wavevector2 b(0.6 * (i - grid / 2), 0.6 * (j - grid / 2));
        if (b.vec().x == 0.0 || b.vec().y == 0.0) ++aligned;
        const FormFactor ref = xform::rect_form_factor(a1, a2, b);
        const FormFactor got = xform::polygon_form_factor(rect, b);
        worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
      }
    }
    detail = std::to_string(aligned) + " of " + std::to_string(grid * grid) + " wavevectors orthogonal to an edge";
    return worst;
  });
}

Check disk_vs_quadrature(int magnitudes) {
  return timed("xform", "disk_vs_quadrature", 1e-6, [&](std::string&) {
    const double r = 1.0;
    double worst = 0.0;
    for (int i = 0; i < magnitudes; ++i) {
      const double b = 20.0 / r * i / (magnitudes - 1);
      const FormFactor ref = oracle::quad_disk_form_factor(r, b).value;
      worst = std::max(worst, std::abs(xform::disk_form_factor(r, Wavevector2(b, 0.0)) - ref) / std::abs(ref));
    }
    return worst;
  });
}

Check conjugate_symmetry(int polygons, std::uint64_t seed) {
  return timed("xform", "conjugate_symmetry", 1e-13, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const Wavevector2 b(random_beta(rng, 50.0, p.diameter()));
      const FormFactor plus = xform::polygon_form_factor(p, b);
      const FormFactor minus = xform::polygon_form_factor(p, -b);
      worst = std::max(worst, std::abs(minus - std::conj(plus)) / std::abs(geom::signed_area(p)));
    }
    return worst;
  });
}

Check branch_continuity(int polygons, std::uint64_t seed) {
  return timed("xform", "series_edge_sum_continuity", 1e-9, [&](std::string& detail) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const Vec2 dir = random_beta(rng, 1.0, 1.0);
      for (double span : {5e-4, 1e-3, 2e-3, 5e-3}) {
        const Wavevector2 b(dir * (span / (p.diameter() * norm(dir))));
        const FormFactor a = xform::polygon_edge_sum(p, b);
        const FormFactor s = xform::polygon_moment_series(p, b);
        worst = std::max(worst, std::abs(a - s) / std::abs(geom::signed_area(p)));
      }
    }
    detail = "|b| * diameter in [5e-4, 5e-3]";
    return worst;
  });
}

Check series_consistency(int polygons, int order, std::uint64_t seed) {
  return timed("xform", "series_consistency_order_" + std::to_string(order), 1e-8, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const Vec2 d = random_beta(rng, 1.0, 1.0);
      const Vec2 hat = d * (1.0 / norm(d));
      worst = std::max(worst, xform::series_discrepancy(p, hat, order, 1e-2 / p.diameter()));
    }
    return worst;
  });
}

Check polyhedron_vs_quadrature(int polyhedra, int betas, std::uint64_t seed) {
  return timed("xform", "polyhedron_vs_quadrature", 1e-8, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    std::vector<geom::Polyhedron> shapes{geom::make_box({-0.5, -0.2, 0.1}, {0.7, 0.4, 0.9}),
                                         geom::make_tetrahedron({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1})};
    for (int i = 0; i < polyhedra; ++i) shapes.push_back(random_shapes::convex_polyhedron(rng, 10));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& p : shapes) {
      const xform::PolyhedronTransform t(p);
      for (int j = 0; j < betas; ++j) {
        Vec3 d = random_shapes::random_vec3(rng);
        d = d * (u(rng) * 20.0 / (p.diameter() * norm(d)));
        worst = std::max(worst, std::abs(t(Wavevector3(d)) - oracle::quad_form_factor(p, d).value) / p.volume());
      }
    }
    return worst;
  });
}

Check cube_closed_form(int betas, std::uint64_t seed) {
  return timed("xform", "box_closed_form", 1e-12, [&](std::string&) {
    Rng rng(seed);
    const Vec3 h{0.5, 0.8, 0.3};
    const xform::PolyhedronTransform t(geom::make_box(-h, h));
    const double vol = 8.0 * h.x * h.y * h.z;
    const auto sinc = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
    double worst = 0.0;
    for (int j = 0; j < betas; ++j) {
      const Vec3 b = random_shapes::random_vec3(rng, -15.0, 15.0);
      const double ref = vol * sinc(b.x * h.x) * sinc(b.y * h.y) * sinc(b.z * h.z);
      worst = std::max(worst, std::abs(t(Wavevector3(b)) - ref) / vol);
    }
    return worst;
  });
}

Check sphere_vs_quadrature(int magnitudes) {
  return timed("xform", "sphere_vs_quadrature", 1e-10, [&](std::string&) {
    double worst = 0.0;
    const double r = 1.3;
    const double vol = 4.0 / 3.0 * kPi * r * r * r;
    for (int i = 0; i < magnitudes; ++i) {
      const double k = 40.0 * i / (magnitudes - 1);
      const double ref = oracle::quad_sphere_form_factor(r, k).value.real();
      worst = std::max(worst, std::abs(xform::sphere_form_factor(r, Wavevector3(0.0, 0.0, k)) - ref) / vol);
    }
    return worst;
  });
}

// ---- moments ----

Check moments_vs_oracle(int polygons, int max_order, std::uint64_t seed) {
  return timed("moments", "moments_vs_triangulation", 1e-10, [&](std::string& detail) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      auto p = random_shapes::random_polygon(rng);
      if (i % 2) p = p.reversed();
      const auto m = moments::moments_from_vertices(p, max_order);
      const auto tri = oracle::triangulate(p);
      const double scale_a = std::abs(geom::signed_area(p));
      for (int k = 0; k <= max_order; ++k) {
        const double scale = scale_a * std::pow(p.diameter(), k);
        for (int a = 0; a <= k; ++a) {
          worst = std::max(worst, std::abs(m.at(a, k - a) - oracle::monomial_integral(tri, a, k - a)) / scale);
        }
      }
    }
    detail = "error / (area * diameter^(a+b)), a + b <= " + std::to_string(max_order);
    return worst;
  });
}

Check moment_translation(int polygons, std::uint64_t seed) {
  return timed("moments", "binomial_shift", 1e-10, [&](std::string&) {
    Rng rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    constexpr int order = 6;
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const Vec2 d{u(rng), u(rng)};
      const auto m = moments::moments_from_vertices(p, order);
      const auto shifted = moments::moments_from_vertices(p.translated(d), order);
      const double scale = std::abs(geom::signed_area(p)) * std::pow(p.diameter() + norm(d) + norm(p.bbox_center()), order);
      for (int k = 0; k <= order; ++k) {
        for (int a = 0; a <= k; ++a) {
          const int b = k - a;
          double expect = 0.0;
          for (int s = 0; s <= a; ++s) {
            for (int t = 0; t <= b; ++t) {
              expect += moments::binomial(a, s) * moments::binomial(b, t) * std::pow(d.x, a - s) *
                        std::pow(d.y, b - t) * m.at(s, t);
            }
          }
          worst = std::max(worst, std::abs(shifted.at(a, b) - expect) / scale);
        }
      }
    }
    return worst;
  });
}

Check first_moment_agreement(int polygons, std::uint64_t seed) {
  return timed("moments", "first_moments_vs_table", 1e-13, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const auto f = moments::first_moments(p);
      const auto m = moments::moments_from_vertices(p, 1);
      worst = std::max({worst, std::abs(f.area - m.at(0, 0)) / f.area,
                        std::abs(f.centroid.x * f.area - m.at(1, 0)) / (f.area * p.diameter()),
                        std::abs(f.centroid.y * f.area - m.at(0, 1)) / (f.area * p.diameter())});
    }
    return worst;
  });
}

Check davis_vs_oracle(int polygons, int max_degree, std::uint64_t seed) {
  return timed("moments", "davis_vs_oracle", 1e-8, [&](std::string& detail) {
    Rng rng(seed);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      auto p = random_shapes::random_polygon(rng);
      if (i % 2) p = p.reversed();
      const auto tri = oracle::triangulate(p);
      const int degree = std::uniform_int_distribution<int>(2, max_degree)(rng);
      moments::Polynomial h(static_cast<std::size_t>(degree + 1));
      for (auto& c : h) c = {g(rng), g(rng)};
      std::complex<double> ref{0.0, 0.0};
      for (int k = 2; k <= degree; ++k) {
        ref += h[static_cast<std::size_t>(k)] * static_cast<double>(k * (k - 1)) * oracle::z_power_integral(tri, k - 2);
      }
      ref *= static_cast<double>(tri.orientation);
      const auto got = moments::davis_sum(moments::ComplexPolygon(p), h);
      worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
    }
    detail = "relative to |integral of h''|, degree <= " + std::to_string(max_degree);
    return worst;
  });
}

Check complex_moment_relation(int polygons, std::uint64_t seed) {
  return timed("moments", "complex_moments_vs_oracle", 1e-10, [&](std::string&) {
    Rng rng(seed);
    constexpr int k_max = 10;
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const auto tri = oracle::triangulate(p);
      const auto tau = moments::complex_moments(moments::ComplexPolygon(p), k_max);
      for (int k = 2; k <= k_max; ++k) {
        const auto ref = static_cast<double>(k * (k - 1)) * oracle::z_power_integral(tri, k - 2);
        const double scale = k * (k - 1) * tri.area() * std::pow(p.diameter() + norm(p.bbox_center()), k - 2);
        worst = std::max(worst, std::abs(tau[static_cast<std::size_t>(k - 2)] - ref) / scale);
      }
    }
    return worst;
  });
}

// ---- identities ----

Check stokes(int polygons, std::uint64_t seed) {
  return timed("identities", "stokes", 1e-8, [&](std::string& detail) {
    Rng rng(seed);
    const auto fields = identities::builtin_fields();
    std::vector<geom::Polygon> polys;
    for (int i = 0; i < polygons; ++i) {
      auto p = random_shapes::random_polygon(rng);
      polys.push_back(i % 2 ? p.reversed() : p);
    }
    double worst = 0.0;
    for (const auto& f : fields) {
      for (const auto& p : polys) {
        const auto r = identities::stokes_check(f, p);
        worst = std::max(worst, r.abs_gap / (1.0 + std::abs(r.lhs)));
      }
    }
    detail = std::to_string(fields.size()) + " fields x " + std::to_string(polygons) + " polygons, gap / (1 + |lhs|)";
    return worst;
  });
}

Check isoperimetric_random(int polygons, std::uint64_t seed) {
  return timed("identities", "isoperimetric_random", 1.0, [&](std::string& detail) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) worst = std::max(worst, identities::isoperimetric_ratio(random_shapes::random_polygon(rng, 24)));
    detail = "largest Q";
    return worst;
  });
}

Check isoperimetric_regular(int max_n) {
  return timed("identities", "isoperimetric_regular", 1e-12, [&](std::string& detail) {
    double prev = 0.0, worst = 0.0;
    for (int n = 3; n <= max_n; ++n) {
      const double q = identities::isoperimetric_ratio(geom::regular_polygon(static_cast<std::size_t>(n)));
      const double expect = (kPi / n) / std::tan(kPi / n);
      if (!(q > prev)) {
        detail = "not increasing at N = " + std::to_string(n);
        return std::numeric_limits<double>::infinity();
      }
      prev = q;
      worst = std::max(worst, std::abs(q - expect));
    }
    detail = "monotone for N = 3.." + std::to_string(max_n);
    return worst;
  });
}

Check curve_area_convergence() {
  return timed("identities", "curve_area_second_order", 0.0, [&](std::string& detail) {
    double prev_err = 0.0, worst_margin = -std::numeric_limits<double>::infinity();
    double err_1024 = 0.0;
    for (std::size_t n = 64; n <= 4096; n *= 2) {
      const double err = std::abs(identities::curve_area(geom::sample_circle(1.0, n)) - kPi);
      if (n == 1024) err_1024 = err;
      if (prev_err > 0.0) worst_margin = std::max(worst_margin, 3.9 - prev_err / err);
      prev_err = err;
    }
    detail = fmt("error at N = 1024: ", err_1024) + fmt(", worst 3.9 - ratio: ", worst_margin);
    // Pass when every doubling gains >= 3.9x and the N = 1024 error is below 2e-5.
    return std::max(worst_margin, err_1024 - 2e-5);
  });
}

// ---- oracle ----

Check triangulation_area(int polygons, std::uint64_t seed) {
  return timed("oracle", "triangulation_area", 1e-12, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng, 24);
      const auto tri = oracle::triangulate(p);
      if (tri.triangles.size() != p.size() - 2) return 1.0;
      worst = std::max(worst, std::abs(tri.area() * tri.orientation - geom::signed_area(p)) / std::abs(geom::signed_area(p)));
    }
    return worst;
  });
}

Check quadrature_at_zero(int polygons, std::uint64_t seed) {
  return timed("oracle", "quadrature_at_zero", 1e-12, [&](std::string&) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const double a = geom::signed_area(p);
      worst = std::max(worst, std::abs(oracle::quad_form_factor(p, Vec2{}).value - a) / std::abs(a));
    }
    const auto cube = geom::make_box({0, 0, 0}, {1, 1, 1});
    worst = std::max(worst, std::abs(oracle::quad_form_factor(cube, Vec3{}).value - 1.0));
    return worst;
  });
}

// ---- simd ----

Check simd_equivalence(int polygons, int betas, std::uint64_t seed) {
  return timed("simd", "vector_kernel_matches_scalar", 0.0, [&](std::string& detail) {
    const simd::Isa isa = simd::active_isa();
    detail = std::string("active kernel: ") + std::string(simd::isa_name(isa));
    Rng rng(seed);
    double mismatches = 0.0;
    std::uniform_real_distribution<double> u(-60.0, 60.0);
    for (int i = 0; i < polygons; ++i) {
      const auto p = random_shapes::random_polygon(rng);
      const simd::EdgeTable edges(p);
      std::vector<double> bx(static_cast<std::size_t>(betas)), by(bx.size());
      for (std::size_t j = 0; j < bx.size(); ++j) {
        bx[j] = u(rng);
        by[j] = j % 7 == 0 ? 0.0 : u(rng);
      }
      std::vector<double> r1(bx.size()), i1(bx.size()), r2(bx.size()), i2(bx.size());
      simd::edge_sum_scalar(edges, bx, by, r1, i1);
      simd::edge_sum(edges, bx, by, r2, i2);
      for (std::size_t j = 0; j < bx.size(); ++j) {
        if (r1[j] != r2[j] || i1[j] != i2[j]) mismatches += 1.0;
      }
    }
    return mismatches;
  });
}

// ---- scatter ----

Check render_pure_map(int pixels, std::uint64_t seed) {
  return timed("scatter", "render_is_pixel_map", 0.0, [&](std::string& detail) {
    const geom::Polygon tri({{-0.3, -0.2}, {0.5, -0.1}, {0.0, 0.45}});
    scatter::DiffractionConfig cfg{0.5, 100.0, 400.0, 256, tri};
    const auto grid = scatter::render_pattern(cfg);
    Rng rng(seed);
    std::uniform_int_distribution<int> pick(0, cfg.resolution - 1);
    double mismatches = 0.0;
    for (int n = 0; n < pixels; ++n) {
      const int i = pick(rng), j = pick(rng);
      const double direct = std::norm(xform::polygon_form_factor(tri, Wavevector2(grid.beta(i, j))));
      if (direct != grid.at(i, j)) mismatches += 1.0;
    }
    const double area = geom::signed_area(tri);
    scatter::DiffractionConfig odd = cfg;
    odd.resolution = 255;
    const auto g2 = scatter::render_pattern(odd);
    const double centre = g2.at(127, 127);
    detail = fmt("centre pixel / area^2 - 1 = ", centre / (area * area) - 1.0);
    if (std::abs(centre / (area * area) - 1.0) > 1e-12) mismatches += 1.0;
    return mismatches;
  });
}

Check airy_rings(int resolution) {
  return timed("scatter", "airy_dark_rings", 1e-3, [&](std::string& detail) {
    const double r = 1.0;
    scatter::DiffractionConfig cfg{0.5, 1000.0, 2000.0, resolution, scatter::DiskAperture{r}};
    const auto grid = scatter::render_pattern(cfg);
    const auto rings = scatter::dark_rings(cfg, grid, 2);
    if (rings.size() < 2) {
      detail = "fewer than two rings found";
      return std::numeric_limits<double>::infinity();
    }
    std::ostringstream s;
    s.precision(10);
    s << "b R = " << rings[0] * r << ", " << rings[1] * r;
    detail = s.str();
    return std::max(std::abs(rings[0] * r - 3.8317059702075123), std::abs(rings[1] * r - 7.0155866698156188));
  });
}

Check energy_concentration(int resolution) {
  return timed("scatter", "energy_concentration", 0.05, [&](std::string& detail) {
    scatter::DiffractionConfig cfg{0.5, 1000.0, 2000.0, resolution, scatter::DiskAperture{1.0}};
    const auto energy = [](const scatter::IntensityGrid& g) {
      double s = 0.0;
      for (double v : g.values) s += v;
      return s * g.pitch * g.pitch;
    };
    const double e1 = energy(scatter::render_pattern(cfg));
    cfg.extent *= 2.0;
    const double e2 = energy(scatter::render_pattern(cfg));
    detail = fmt("captured energy ratio ", e2 / e1);
    return std::abs(e2 - e1) / e1;
  });
}

Check porod_sphere(int samples) {
  return timed("scatter", "porod_sphere", 0.1, [&](std::string& detail) {
    return slope_band(scatter::porod_slope(scatter::SphereShape{1.0}, 30.0, 300.0, samples, 1), -4.0, detail);
  });
}

Check porod_disk(int samples) {
  return timed("scatter", "porod_disk", 0.15, [&](std::string& detail) {
    return slope_band(scatter::porod_slope(scatter::DiskShape{1.0}, 30.0, 300.0, samples, 1), -3.0, detail);
  });
}

Check porod_cube(int samples, int directions) {
  return timed("scatter", "porod_cube_orientation_averaged", 0.3, [&](std::string& detail) {
    const auto cube = geom::make_box({-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5});
    return slope_band(scatter::porod_slope(cube, 30.0, 300.0, samples, directions), -4.0, detail);
  });
}

Check porod_rescaling(int samples) {
  return timed("scatter", "porod_sphere_rescaling", 0.0, [&](std::string& detail) {
    const auto a = scatter::porod_slope(scatter::SphereShape{1.0}, 30.0, 300.0, samples, 1);
    const auto b = scatter::porod_slope(scatter::SphereShape{2.5}, 12.0, 120.0, samples, 1);
    std::ostringstream s;
    s << "slopes " << a.slope << " and " << b.slope;
    detail = s.str();
    return std::abs(a.slope - b.slope) - (a.slope_stderr + b.slope_stderr);
  });
}

std::vector<std::string> suite_names() { return {"geom", "xform", "moments", "identities", "oracle", "simd", "scatter"}; }

std::vector<Check> run_suite(std::string_view name) {
  if (name == "all") {
    std::vector<Check> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "geom") {
    return {area_invariance(200), reversal_symmetry(200), umlaufsatz(1000), edge_closure(1000),
            face_normal_closure(20), polyhedron_volumes(), gram_vs_triple(1000)};
  }
  if (name == "xform") {
    return {polygon_vs_quadrature(20, 10), rect_vs_sinc(64),         disk_vs_quadrature(50),
            conjugate_symmetry(100),       branch_continuity(100),   series_consistency(20, 6),
            polyhedron_vs_quadrature(3, 3), cube_closed_form(200),   sphere_vs_quadrature(40)};
  }
  if (name == "moments") {
    return {moments_vs_oracle(30, 8), moment_translation(20), first_moment_agreement(100), davis_vs_oracle(50, 8),
            complex_moment_relation(20)};
  }
  if (name == "identities") {
    return {stokes(20), isoperimetric_random(2000), isoperimetric_regular(64), curve_area_convergence()};
  }
  if (name == "oracle") return {triangulation_area(1000), quadrature_at_zero(20)};
  if (name == "simd") return {simd_equivalence(50, 257)};
  if (name == "scatter") {
    return {render_pure_map(100), airy_rings(512), energy_concentration(256), porod_sphere(50), porod_disk(50),
            porod_rescaling(50)};
  }
  throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace polyft::verify
