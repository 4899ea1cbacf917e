#pragma once

// Fraunhofer diffraction on a detector grid and Porod exponent fits.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "polyft/geom.hpp"
#include "polyft/xform.hpp"

namespace polyft::scatter {

struct DiskAperture {
  double radius = 1.0;
};
struct RectAperture {
  double a1 = 1.0;  // half-widths
  double a2 = 1.0;
};
using Aperture = std::variant<geom::Polygon, DiskAperture, RectAperture>;

double aperture_diameter(const Aperture& ap);

struct DiffractionConfig {
  double wavelength = 0.0;
  double distance = 0.0;  // aperture to screen
  double extent = 0.0;    // detector half-width; the grid spans [-extent, extent]^2
  int resolution = 0;     // pixels per axis
  Aperture aperture = DiskAperture{};
  /// Evaluate self-intersecting polygon apertures anyway (no geometric guarantee).
  bool allow_nonsimple = false;

  /// Throws InputError for non-positive lengths or resolution.
  void validate() const;
  double wavenumber() const;
  /// k / L, so that b = beta_scale() * x.
  double beta_scale() const { return wavenumber() / distance; }
  /// False when the distance is below 100 aperture diameters.
  bool far_field() const;
};

/// values[j * resolution + i] is pixel (i, j); column i has x = -extent + (i + 0.5) * pitch,
/// row j has y likewise. With an even resolution no pixel centre sits on b = 0.
struct IntensityGrid {
  int resolution = 0;
  double extent = 0.0;
  double pitch = 0.0;
  double beta_scale = 0.0;
  std::vector<double> values;
  std::vector<std::string> warnings;

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * static_cast<std::size_t>(resolution) + static_cast<std::size_t>(i)]; }
  double coord(int i) const { return -extent + (i + 0.5) * pitch; }
  Vec2 beta(int i, int j) const { return {beta_scale * coord(i), beta_scale * coord(j)}; }
};

/// Aperture amplitude at a single b; the map render_pattern applies per pixel.
xform::FormFactor amplitude(const Aperture& ap, const Vec2& beta, bool allow_nonsimple = false);

/// I = |phi(b)|^2 at every pixel, b = (k / L) x. Bit-identical for identical configs.
IntensityGrid render_pattern(const DiffractionConfig& cfg);

struct RadialBin {
  double k = 0.0;  // shell centre in |b|
  double mean = 0.0;
  std::size_t count = 0;
};

/// Pixels binned by |b| into floor(sqrt(2) * resolution / 2) equal shells out to the
/// grid corner. Empty shells are omitted.
std::vector<RadialBin> radial_average(const IntensityGrid& grid);

/// Intensity minima of the rendered pattern along `direction`: shells of the radial
/// average bracket each local minimum, then bisection on the sign of dI/d|b| refines it
/// on the pixel map. Returns up to `count` values of |b|, innermost first.
std::vector<double> dark_rings(const DiffractionConfig& cfg, const IntensityGrid& grid, std::size_t count,
                               Vec2 direction = {1.0, 0.0});

enum class ToneMap { Linear, Log };

/// '#'-prefixed metadata lines, then one row of comma-separated values per grid row j.
void write_csv(const IntensityGrid& grid, std::ostream& out);
/// Binary 16-bit PGM (P5, maxval 65535, big-endian). The top image row is the largest y.
/// Log mapping: 65535 (log I - log I_min) / (log I_max - log I_min) with I clamped at
/// 1e-12 I_max.
void write_pgm(const IntensityGrid& grid, std::ostream& out, ToneMap map);

struct DiskShape {
  double radius = 1.0;
};
struct SphereShape {
  double radius = 1.0;
};
using PorodShape = std::variant<geom::Polygon, geom::Polyhedron, DiskShape, SphereShape>;

struct PorodFit {
  double k_min = 0.0;
  double k_max = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  int dimension = 0;
  std::vector<double> k;          // window centres
  std::vector<double> intensity;  // window means
};

/// Window sub-samples per fitted point.
inline constexpr int kPorodSubsamples = 128;

/// Least-squares slope of log I against log k over `samples` log-spaced k in
/// [k_min, k_max]. Each point is the arithmetic mean of I over a window of width
/// 2 pi / diameter (one oscillation period of the sphere and disk), sampled at
/// kPorodSubsamples points. Anisotropic shapes are averaged over `directions` directions
/// (Fibonacci sphere in 3D, equal angles in 2D), re-rotated for each sub-sample by a
/// low-discrepancy sequence so that no direction set is reused across the window.
/// Throws RegimeError when k_min * diameter < 20 and InputError when samples < 50,
/// k_min >= k_max, or directions < 16 for a polygon or polyhedron.
PorodFit porod_slope(const PorodShape& shape, double k_min, double k_max, int samples, int directions);

/// Same fit along one fixed direction, without orientation averaging; the window spans one
/// fringe period 2 pi / (extent along the direction). For a cube
/// along a face normal the decay is k^-2 (specular facet), not the Porod exponent.
PorodFit fixed_direction_slope(const geom::Polyhedron& p, const Vec3& direction, double k_min, double k_max,
                               int samples);

}  // namespace polyft::scatter
