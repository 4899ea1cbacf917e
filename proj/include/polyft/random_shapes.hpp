#pragma once

// Seeded random shape generators shared by the verify suites and the tests.

#include <cstdint>
#include <random>

#include "polyft/geom.hpp"

namespace polyft::random_shapes {

using Rng = std::mt19937_64;

/// Star-shaped simple polygon about `center`: n sorted jittered angles, radii in
/// [r_min, r_max]. Counterclockwise.
geom::Polygon star_polygon(Rng& rng, std::size_t n, double r_min = 0.4, double r_max = 1.0, Vec2 center = {});

/// Star polygon with 3..max_n vertices and a random offset of up to `offset` from the origin.
geom::Polygon random_polygon(Rng& rng, std::size_t max_n = 12, double offset = 0.5);

/// Convex hull of n random points on the unit sphere (n in [4, 24]), triangular faces,
/// outward orientation.
geom::Polyhedron convex_polyhedron(Rng& rng, std::size_t n);

Vec3 random_vec3(Rng& rng, double lo = -1.0, double hi = 1.0);

}  // namespace polyft::random_shapes
