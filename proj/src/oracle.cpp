#include "polyft/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numbers>
#include <string>

#include "polyft/error.hpp"
#include "polyft/quadrature.hpp"

namespace polyft::oracle {

namespace {

constexpr double kQuadTarget = 1e-9;
constexpr int kMaxLevels = 10;
constexpr double kMaxPhaseSpan = 200.0;

bool in_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c, double tol) {
  return cross(b - a, p - a) >= -tol && cross(c - b, p - b) >= -tol && cross(a - c, p - c) >= -tol;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Coefficients of (c0 + c1 u + c2 w)^n as a map (j, k) -> coefficient of u^j w^k.
std::vector<std::vector<double>> trinomial_powers(double c0, double c1, double c2, int n) {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(n + 1),
                                       std::vector<double>(static_cast<std::size_t>(n + 1), 0.0));
  std::vector<double> p0(static_cast<std::size_t>(n + 1)), p1(static_cast<std::size_t>(n + 1)),
      p2(static_cast<std::size_t>(n + 1));
  p0[0] = p1[0] = p2[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    p0[static_cast<std::size_t>(i)] = p0[static_cast<std::size_t>(i - 1)] * c0;
    p1[static_cast<std::size_t>(i)] = p1[static_cast<std::size_t>(i - 1)] * c1;
    p2[static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(i - 1)] * c2;
  }
  const double fn = factorial(n);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; j + k <= n; ++k) {
      const int i = n - j - k;
      out[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          fn / (factorial(i) * factorial(j) * factorial(k)) * p0[static_cast<std::size_t>(i)] *
          p1[static_cast<std::size_t>(j)] * p2[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

std::complex<double> expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

double Triangulation::area() const {
  double s = 0.0;
  for (const auto& t : triangles) s += t.signed_area();
  return s;
}

Triangulation triangulate(const geom::Polygon& poly) {
  poly.require_simple();
  std::vector<Vec2> v(poly.vertices().begin(), poly.vertices().end());
  Triangulation out;
  if (geom::signed_area(poly) < 0.0) {
    std::reverse(v.begin(), v.end());
    out.orientation = -1;
  }
  const double scale = poly.diameter();
  const double tol = 1e-12 * scale * scale;

  std::list<std::size_t> ring;
  for (std::size_t i = 0; i < v.size(); ++i) ring.push_back(i);
  const auto next = [&](std::list<std::size_t>::iterator it) {
    return ++it == ring.end() ? ring.begin() : it;
  };
  const auto prev = [&](std::list<std::size_t>::iterator it) {
    return it == ring.begin() ? std::prev(ring.end()) : std::prev(it);
  };

  while (ring.size() > 3) {
    bool clipped = false;
    for (auto it = ring.begin(); it != ring.end(); ++it) {
      const Vec2& a = v[*prev(it)];
      const Vec2& b = v[*it];
      const Vec2& c = v[*next(it)];
      if (cross(b - a, c - b) <= tol) continue;  // reflex or collinear
      bool empty = true;
      for (auto jt = ring.begin(); jt != ring.end(); ++jt) {
        if (jt == it || jt == prev(it) || jt == next(it)) continue;
        const Vec2& p = v[*jt];
        if (p == a || p == b || p == c) continue;
        if (in_triangle(p, a, b, c, tol)) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      out.triangles.push_back({a, b, c});
      ring.erase(it);
      clipped = true;
      break;
    }
    if (!clipped) {
      // Only collinear vertices remain clippable; drop one as a zero-area triangle.
      for (auto it = ring.begin(); it != ring.end(); ++it) {
        const Vec2& a = v[*prev(it)];
        const Vec2& b = v[*it];
        const Vec2& c = v[*next(it)];
        if (std::abs(cross(b - a, c - b)) <= tol) {
          out.triangles.push_back({a, b, c});
          ring.erase(it);
          clipped = true;
          break;
        }
      }
    }
    if (!clipped) throw InputError("ear clipping failed; polygon is not simple");
  }
  auto it = ring.begin();
  const Vec2 a = v[*it++];
  const Vec2 b = v[*it++];
  const Vec2 c = v[*it];
  out.triangles.push_back({a, b, c});
  return out;
}

double monomial_integral_triangle(const Triangle& tri, int a, int b) {
  if (a < 0 || b < 0 || a + b > 20) throw InputError("monomial exponents must satisfy a, b >= 0, a + b <= 20");
  const Vec2 e1 = tri.b - tri.a;
  const Vec2 e2 = tri.c - tri.a;
  const double jac = std::abs(cross(e1, e2));
  const auto xs = trinomial_powers(tri.a.x, e1.x, e2.x, a);
  const auto ys = trinomial_powers(tri.a.y, e1.y, e2.y, b);
  double sum = 0.0;
  for (int j1 = 0; j1 <= a; ++j1) {
    for (int k1 = 0; j1 + k1 <= a; ++k1) {
      const double cx = xs[static_cast<std::size_t>(j1)][static_cast<std::size_t>(k1)];
      if (cx == 0.0) continue;
      for (int j2 = 0; j2 <= b; ++j2) {
        for (int k2 = 0; j2 + k2 <= b; ++k2) {
          const double cy = ys[static_cast<std::size_t>(j2)][static_cast<std::size_t>(k2)];
          const int p = j1 + j2, q = k1 + k2;
          sum += cx * cy * factorial(p) * factorial(q) / factorial(p + q + 2);
        }
      }
    }
  }
  return jac * sum;
}

double monomial_integral(const Triangulation& tri, int a, int b) {
  double s = 0.0;
  for (const auto& t : tri.triangles) s += monomial_integral_triangle(t, a, b);
  return s;
}

double integrate(const Triangulation& tri, const std::function<double(const Vec2&)>& f, int nodes) {
  const quad::GaussRule g = quad::gauss_legendre_unit(nodes);
  double total = 0.0;
  for (const auto& t : tri.triangles) {
    const Vec2 e1 = t.b - t.a, e2 = t.c - t.a;
    const double jac = std::abs(cross(e1, e2));
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const double u = g.nodes[i];
      for (std::size_t j = 0; j < g.nodes.size(); ++j) {
        const double w = g.nodes[j] * (1.0 - u);
        s += g.weights[i] * g.weights[j] * (1.0 - u) * f(t.a + u * e1 + w * e2);
      }
    }
    total += jac * s;
  }
  return total;
}

QuadratureResult quad_form_factor(const geom::Polygon& poly, const Vec2& beta) {
  const double k = norm(beta);
  if (k * poly.diameter() > kMaxPhaseSpan) {
    throw RegimeError("quadrature oracle needs |b| * diameter <= 200");
  }
  const Triangulation tri = triangulate(poly);
  const double area = tri.area();

  std::vector<int> base;
  for (const auto& t : tri.triangles) {
    const double edge = std::max({norm(t.b - t.a), norm(t.c - t.b), norm(t.a - t.c)});
    base.push_back(static_cast<int>(std::ceil(k * edge / 2.0)) + 8);
  }
  const auto level_value = [&](int level) {
    std::complex<double> total{0.0, 0.0};
    for (std::size_t ti = 0; ti < tri.triangles.size(); ++ti) {
      const auto& t = tri.triangles[ti];
      const quad::GaussRule g = quad::gauss_legendre_unit(base[ti] + 4 * level);
      const Vec2 e1 = t.b - t.a, e2 = t.c - t.a;
      const double jac = std::abs(cross(e1, e2));
      std::complex<double> s{0.0, 0.0};
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double u = g.nodes[i];
        for (std::size_t j = 0; j < g.nodes.size(); ++j) {
          const Vec2 x = t.a + u * e1 + (g.nodes[j] * (1.0 - u)) * e2;
          s += (g.weights[i] * g.weights[j] * (1.0 - u)) * expi(dot(beta, x));
        }
      }
      total += jac * s;
    }
    return total * static_cast<double>(tri.orientation);
  };

  std::complex<double> prev = level_value(0);
  for (int level = 1; level <= kMaxLevels; ++level) {
    const std::complex<double> cur = level_value(level);
    if (std::abs(cur - prev) <= kQuadTarget * area) {
      return {cur, prev, *std::min_element(base.begin(), base.end()) + 4 * level};
    }
    prev = cur;
  }
  throw ToleranceError("quadrature oracle did not converge; last estimates differ by " +
                       std::to_string(std::abs(prev - level_value(kMaxLevels - 1))));
}

QuadratureResult quad_form_factor(const geom::Polyhedron& p, const Vec3& beta) {
  const double k = norm(beta);
  if (k * p.diameter() > kMaxPhaseSpan) {
    throw RegimeError("quadrature oracle needs |b| * diameter <= 200");
  }
  struct Tet {
    Vec3 p0, e1, e2, e3;
    double jac;
    int base;
  };
  std::vector<Tet> tets;
  const Vec3 apex = p.centroid();
  const auto verts = p.vertices();
  for (const auto& face : p.faces()) {
    // Triangulate the face in its own plane so non-convex faces are handled.
    const Vec3 origin = verts[face.ring[0]];
    const Vec3 u = (verts[face.ring[1]] - origin) * (1.0 / norm(verts[face.ring[1]] - origin));
    const Vec3 w = cross(face.normal, u);
    std::vector<Vec2> flat;
    for (auto idx : face.ring) {
      const Vec3 d = verts[idx] - origin;
      flat.push_back({dot(d, u), dot(d, w)});
    }
    const Triangulation ft = triangulate(geom::Polygon(std::move(flat)));
    const auto lift = [&](const Vec2& q) { return origin + q.x * u + q.y * w; };
    for (const auto& t : ft.triangles) {
      const Vec3 a = lift(t.a), b = lift(t.b), c = lift(t.c);
      Tet tet{apex, a - apex, b - apex, c - apex, 0.0, 0};
      tet.jac = dot(tet.e1, cross(tet.e2, tet.e3));
      const double edge = std::max({norm(tet.e1), norm(tet.e2), norm(tet.e3), norm(b - a), norm(c - b), norm(a - c)});
      tet.base = static_cast<int>(std::ceil(k * edge / 2.0)) + 8;
      if (tet.jac < 0.0) throw InputError("polyhedron is not star-shaped about its centroid");
      tets.push_back(tet);
    }
  }
  const double vol = p.volume();
  const auto level_value = [&](int level) {
    std::complex<double> total{0.0, 0.0};
    for (const auto& t : tets) {
      const quad::GaussRule g = quad::gauss_legendre_unit(t.base + 4 * level);
      std::complex<double> s{0.0, 0.0};
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double x1 = g.nodes[i];
        for (std::size_t j = 0; j < g.nodes.size(); ++j) {
          const double x2 = g.nodes[j] * (1.0 - x1);
          for (std::size_t l = 0; l < g.nodes.size(); ++l) {
            const double x3 = g.nodes[l] * (1.0 - x1) * (1.0 - g.nodes[j]);
            const Vec3 x = t.p0 + x1 * t.e1 + x2 * t.e2 + x3 * t.e3;
            const double wt = g.weights[i] * g.weights[j] * g.weights[l] * (1.0 - x1) * (1.0 - x1) * (1.0 - g.nodes[j]);
            s += wt * expi(dot(beta, x));
          }
        }
      }
      total += t.jac * s;
    }
    return total;
  };
  std::complex<double> prev = level_value(0);
  for (int level = 1; level <= kMaxLevels; ++level) {
    const std::complex<double> cur = level_value(level);
    if (std::abs(cur - prev) <= kQuadTarget * vol) {
      int coarsest = tets.front().base;
      for (const auto& t : tets) coarsest = std::min(coarsest, t.base);
      return {cur, prev, coarsest + 4 * level};
    }
    prev = cur;
  }
  throw ToleranceError("3D quadrature oracle did not converge");
}

std::complex<double> z_power_integral(const Triangulation& tri, int k) {
  if (k < 0 || k > 20) throw InputError("z power must lie in [0, 20]");
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> s{0.0, 0.0};
  for (int j = 0; j <= k; ++j) {
    const double c = factorial(k) / (factorial(j) * factorial(k - j));
    s += c * ipow[j % 4] * monomial_integral(tri, k - j, j);
  }
  return s;
}

QuadratureResult quad_disk_form_factor(double radius, double beta) {
  if (!(radius > 0.0)) throw InputError("disk radius must be positive");
  const double kr = std::abs(beta) * radius;
  if (kr > kMaxPhaseSpan) throw RegimeError("disk quadrature needs |b| * R <= 200");
  const double area = std::numbers::pi * radius * radius;
  const auto level_value = [&](int level) {
    const int nr = static_cast<int>(std::ceil(kr / 2.0)) + 12 + 4 * level;
    const int nt = static_cast<int>(std::ceil(kr)) + 24 + 8 * level;
    const quad::GaussRule g = quad::gauss_legendre_unit(nr);
    double total = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const double r = radius * g.nodes[i];
      double ring = 0.0;
      for (int t = 0; t < nt; ++t) ring += std::cos(beta * r * std::cos(2.0 * std::numbers::pi * t / nt));
      total += g.weights[i] * r * ring * (2.0 * std::numbers::pi / nt);
    }
    return std::complex<double>(total * radius, 0.0);
  };
  std::complex<double> prev = level_value(0);
  for (int level = 1; level <= kMaxLevels; ++level) {
    const std::complex<double> cur = level_value(level);
    if (std::abs(cur - prev) <= 1e-12 * area) return {cur, prev, 12 + 4 * level};
    prev = cur;
  }
  throw ToleranceError("disk quadrature did not converge");
}

QuadratureResult quad_sphere_form_factor(double radius, double k) {
  if (!(radius > 0.0)) throw InputError("sphere radius must be positive");
  const double kr = std::abs(k) * radius;
  if (kr > kMaxPhaseSpan) throw RegimeError("sphere quadrature needs |k| * R <= 200");
  const double vol = 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
  const auto level_value = [&](int level) {
    const quad::GaussRule g = quad::gauss_legendre_unit(static_cast<int>(std::ceil(kr / 2.0)) + 12 + 4 * level);
    double total = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const double r = radius * g.nodes[i];
      const double x = k * r;
      const double s = x == 0.0 ? 1.0 : std::sin(x) / x;
      total += g.weights[i] * 4.0 * std::numbers::pi * r * r * s;
    }
    return std::complex<double>(total * radius, 0.0);
  };
  std::complex<double> prev = level_value(0);
  for (int level = 1; level <= kMaxLevels; ++level) {
    const std::complex<double> cur = level_value(level);
    if (std::abs(cur - prev) <= 1e-12 * vol) return {cur, prev, 12 + 4 * level};
    prev = cur;
  }
  throw ToleranceError("sphere quadrature did not converge");
}

}  // namespace polyft::oracle
