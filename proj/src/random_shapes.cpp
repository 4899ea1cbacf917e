#include "polyft/random_shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyft/error.hpp"

namespace polyft::random_shapes {

geom::Polygon star_polygon(Rng& rng, std::size_t n, double r_min, double r_max, Vec2 center) {
  if (n < 3) throw InputError("star polygon needs at least 3 vertices");
  std::uniform_real_distribution<double> jitter(0.1, 0.9);
  std::uniform_real_distribution<double> radius(r_min, r_max);
  const double slot = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double phase = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  std::vector<Vec2> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = phase + slot * (static_cast<double>(i) + jitter(rng));
    const double r = radius(rng);
    v.push_back(center + Vec2{r * std::cos(t), r * std::sin(t)});
  }
  return geom::Polygon(std::move(v));
}

geom::Polygon random_polygon(Rng& rng, std::size_t max_n, double offset) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
  std::uniform_real_distribution<double> off(-offset, offset);
  const Vec2 c{off(rng), off(rng)};
  return star_polygon(rng, n, 0.4, 1.0, c);
}

Vec3 random_vec3(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double x = u(rng), y = u(rng), z = u(rng);
  return {x, y, z};
}

geom::Polyhedron convex_polyhedron(Rng& rng, std::size_t n) {
  if (n < 4 || n > 24) throw InputError("convex polyhedron needs 4..24 points");
  std::normal_distribution<double> g;
  std::vector<Vec3> pts;
  while (pts.size() < n) {
    const Vec3 p{g(rng), g(rng), g(rng)};
    const double len = norm(p);
    if (len < 1e-3) continue;
    pts.push_back(p * (1.0 / len));
  }
  Vec3 mean{};
  for (const auto& p : pts) mean += p * (1.0 / static_cast<double>(n));

  // Brute-force hull: a triple is a face when every other point lies strictly behind it.
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (norm(nrm) < 1e-9) continue;
        bool front = false, back = false;
        for (std::size_t m = 0; m < n && !(front && back); ++m) {
          if (m == i || m == j || m == k) continue;
          const double s = dot(nrm, pts[m] - pts[i]);
          if (s > 1e-12) front = true;
          if (s < -1e-12) back = true;
        }
        if (front && back) continue;
        if (!front && !back) continue;  // coplanar set; regenerate below
        if (dot(nrm, pts[i] - mean) > 0.0) {
          faces.push_back({i, j, k});
        } else {
          faces.push_back({i, k, j});
        }
      }
    }
  }
  // Four or more coplanar hull points would yield overlapping triangles; resample.
  if (faces.size() != 2 * n - 4) return convex_polyhedron(rng, n);
  return geom::Polyhedron(std::move(pts), std::move(faces));
}

}  // namespace polyft::random_shapes
