#include "polyft/scatter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "polyft/error.hpp"

namespace polyft::scatter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFarFieldRatio = 100.0;
constexpr double kPorodRegime = 20.0;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double frac(double x) { return x - std::floor(x); }

struct Mat3 {
  std::array<double, 9> m{};
  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
};

// Rotation number j of a low-discrepancy sequence: additive recurrence on the unit cube
// (inverse powers of the plastic number), mapped to SO(3) by Shoemake's uniform
// quaternion construction.
Mat3 sequence_rotation(std::size_t j) {
  constexpr double g = 1.22074408460575947536;
  const double t = static_cast<double>(j) + 0.5;
  const double u1 = frac(t / g), u2 = frac(t / (g * g)), u3 = frac(t / (g * g * g));
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const double x = a * std::sin(2 * kPi * u2), y = a * std::cos(2 * kPi * u2);
  const double z = b * std::sin(2 * kPi * u3), w = b * std::cos(2 * kPi * u3);
  return {{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
           2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
           2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}};
}

std::vector<Vec3> fibonacci_sphere(int n) {
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> d;
  d.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    d.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return d;
}

double shape_diameter(const PorodShape& s) {
  return std::visit(Overloaded{[](const geom::Polygon& p) { return p.diameter(); },
                               [](const geom::Polyhedron& p) { return p.diameter(); },
                               [](const DiskShape& d) { return 2.0 * d.radius; },
                               [](const SphereShape& s) { return 2.0 * s.radius; }},
                    s);
}

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> k(static_cast<std::size_t>(n));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  return k;
}

// Mean of f over kPorodSubsamples midpoints of [k - w/2, k + w/2]; f receives the
// sub-sample's k and a global sub-sample counter.
template <class F>
double window_mean(double k, double w, std::size_t& counter, F&& f) {
  double s = 0.0;
  for (int j = 0; j < kPorodSubsamples; ++j) {
    const double kj = k - 0.5 * w + (j + 0.5) * w / kPorodSubsamples;
    s += f(kj, counter++);
  }
  return s / kPorodSubsamples;
}

PorodFit fit(std::vector<double> k, std::vector<double> intensity, int dimension) {
  const std::size_t n = k.size();
  double mx = 0.0, my = 0.0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(intensity[i] > 0.0)) throw ToleranceError("non-positive window intensity; cannot take logarithms");
    lx[i] = std::log(k[i]);
    ly[i] = std::log(intensity[i]);
    mx += lx[i] / static_cast<double>(n);
    my += ly[i] / static_cast<double>(n);
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  PorodFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (out.intercept + out.slope * lx[i]);
    ssr += r * r;
  }
  out.slope_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  out.k_min = k.front();
  out.k_max = k.back();
  out.dimension = dimension;
  out.k = std::move(k);
  out.intensity = std::move(intensity);
  return out;
}

void check_range(double k_min, double k_max, int samples) {
  if (!(k_min > 0.0) || !(k_max > k_min)) throw InputError("Porod fit needs 0 < k_min < k_max");
  if (samples < 50) throw InputError("Porod fit needs at least 50 samples");
}

}  // namespace

double aperture_diameter(const Aperture& ap) {
  return std::visit(Overloaded{[](const geom::Polygon& p) { return p.diameter(); },
                               [](const DiskAperture& d) { return 2.0 * d.radius; },
                               [](const RectAperture& r) { return 2.0 * std::hypot(r.a1, r.a2); }},
                    ap);
}

void DiffractionConfig::validate() const {
  if (!(wavelength > 0.0)) throw InputError("wavelength must be positive");
  if (!(distance > 0.0)) throw InputError("screen distance must be positive");
  if (!(extent > 0.0)) throw InputError("detector extent must be positive");
  if (resolution < 1) throw InputError("resolution must be at least 1");
  std::visit(Overloaded{[&](const geom::Polygon& p) {
                          if (!allow_nonsimple) p.require_simple();
                        },
                        [](const DiskAperture& d) {
                          if (!(d.radius > 0.0)) throw InputError("disk radius must be positive");
                        },
                        [](const RectAperture& r) {
                          if (!(r.a1 > 0.0) || !(r.a2 > 0.0)) throw InputError("rectangle half-widths must be positive");
                        }},
             aperture);
}

double DiffractionConfig::wavenumber() const { return 2.0 * kPi / wavelength; }

bool DiffractionConfig::far_field() const { return distance >= kFarFieldRatio * aperture_diameter(aperture); }

xform::FormFactor amplitude(const Aperture& ap, const Vec2& beta, bool allow_nonsimple) {
  return std::visit(
      Overloaded{[&](const geom::Polygon& p) {
                   if (!allow_nonsimple) p.require_simple();
                   return xform::polygon_form_factor_unchecked(p, xform::Wavevector2(beta));
                 },
                 [&](const DiskAperture& d) { return xform::disk_form_factor(d.radius, xform::Wavevector2(beta)); },
                 [&](const RectAperture& r) { return xform::rect_form_factor(r.a1, r.a2, xform::Wavevector2(beta)); }},
      ap);
}

IntensityGrid render_pattern(const DiffractionConfig& cfg) {
  cfg.validate();
  IntensityGrid g;
  g.resolution = cfg.resolution;
  g.extent = cfg.extent;
  g.pitch = 2.0 * cfg.extent / cfg.resolution;
  g.beta_scale = cfg.beta_scale();
  if (!cfg.far_field()) {
    std::ostringstream msg;
    msg << "screen distance " << cfg.distance << " is below 100 aperture diameters ("
        << kFarFieldRatio * aperture_diameter(cfg.aperture) << "); far-field approximation is questionable";
    g.warnings.push_back(msg.str());
  }
  const auto n = static_cast<std::size_t>(cfg.resolution);
  g.values.resize(n * n);

  if (const auto* poly = std::get_if<geom::Polygon>(&cfg.aperture)) {
    const xform::PolygonTransform transform(*poly, cfg.allow_nonsimple);
    std::vector<double> bx(n), by(n);
    std::vector<xform::FormFactor> row(n);
    for (int j = 0; j < cfg.resolution; ++j) {
      for (int i = 0; i < cfg.resolution; ++i) {
        const Vec2 b = g.beta(i, j);
        bx[static_cast<std::size_t>(i)] = b.x;
        by[static_cast<std::size_t>(i)] = b.y;
      }
      transform.evaluate(bx, by, row);
      for (std::size_t i = 0; i < n; ++i) g.values[static_cast<std::size_t>(j) * n + i] = std::norm(row[i]);
    }
    return g;
  }
  for (int j = 0; j < cfg.resolution; ++j) {
    for (int i = 0; i < cfg.resolution; ++i) {
      g.values[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] =
          std::norm(amplitude(cfg.aperture, g.beta(i, j)));
    }
  }
  return g;
}

std::vector<RadialBin> radial_average(const IntensityGrid& grid) {
  const int res = grid.resolution;
  const auto shells = static_cast<std::size_t>(std::max(1.0, std::floor(std::sqrt(2.0) * res / 2.0)));
  const double b_max = std::sqrt(2.0) * grid.extent * grid.beta_scale;
  const double width = b_max / static_cast<double>(shells);
  std::vector<double> sum(shells, 0.0);
  std::vector<std::size_t> cnt(shells, 0);
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      const double r = norm(grid.beta(i, j));
      const auto s = std::min(shells - 1, static_cast<std::size_t>(r / width));
      sum[s] += grid.at(i, j);
      ++cnt[s];
    }
  }
  std::vector<RadialBin> out;
  for (std::size_t s = 0; s < shells; ++s) {
    if (cnt[s] == 0) continue;
    out.push_back({(static_cast<double>(s) + 0.5) * width, sum[s] / static_cast<double>(cnt[s]), cnt[s]});
  }
  return out;
}

std::vector<double> dark_rings(const DiffractionConfig& cfg, const IntensityGrid& grid, std::size_t count,
                               Vec2 direction) {
  const double len = norm(direction);
  if (!(len > 0.0)) throw InputError("ring search direction must be non-zero");
  const Vec2 u = direction * (1.0 / len);
  const auto bins = radial_average(grid);
  const auto intensity = [&](double b) { return std::norm(amplitude(cfg.aperture, u * b, cfg.allow_nonsimple)); };
  const auto slope = [&](double b, double h) { return intensity(b + h) - intensity(b - h); };

  std::vector<double> rings;
  for (std::size_t s = 1; s + 1 < bins.size() && rings.size() < count; ++s) {
    if (!(bins[s].mean < bins[s - 1].mean && bins[s].mean <= bins[s + 1].mean)) continue;
    double lo = bins[s - 1].k, hi = bins[s + 1].k;
    const double h = 1e-6 * (hi - lo);
    if (!(slope(lo, h) < 0.0 && slope(hi, h) > 0.0)) continue;  // shell minimum without a profile minimum
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (slope(mid, std::min(h, 0.25 * (hi - lo))) < 0.0 ? lo : hi) = mid;
    }
    rings.push_back(0.5 * (lo + hi));
  }
  return rings;
}

void write_csv(const IntensityGrid& grid, std::ostream& out) {
  out << "# resolution " << grid.resolution << '\n'
      << std::setprecision(17) << "# x_min " << -grid.extent << '\n'
      << "# x_max " << grid.extent << '\n'
      << "# pixel_pitch " << grid.pitch << '\n'
      << "# beta_per_length " << grid.beta_scale << '\n'
      << "# layout row j = y index from y_min, column i = x index from x_min\n";
  for (const auto& w : grid.warnings) out << "# warning " << w << '\n';
  for (int j = 0; j < grid.resolution; ++j) {
    for (int i = 0; i < grid.resolution; ++i) {
      if (i) out << ',';
      out << grid.at(i, j);
    }
    out << '\n';
  }
}

void write_pgm(const IntensityGrid& grid, std::ostream& out, ToneMap map) {
  const double i_max = grid.values.empty() ? 0.0 : *std::max_element(grid.values.begin(), grid.values.end());
  const double floor_v = i_max * 1e-12;
  double i_min = i_max;
  for (double v : grid.values) i_min = std::min(i_min, std::max(v, floor_v));
  const auto level = [&](double v) -> std::uint16_t {
    if (!(i_max > 0.0)) return 0;
    double t;
    if (map == ToneMap::Linear) {
      t = v / i_max;
    } else {
      if (!(i_max > i_min)) return 65535;
      t = (std::log10(std::max(v, floor_v)) - std::log10(i_min)) / (std::log10(i_max) - std::log10(i_min));
    }
    return static_cast<std::uint16_t>(std::lround(65535.0 * std::clamp(t, 0.0, 1.0)));
  };
  out << "P5\n" << grid.resolution << ' ' << grid.resolution << "\n65535\n";
  for (int j = grid.resolution - 1; j >= 0; --j) {
    for (int i = 0; i < grid.resolution; ++i) {
      const std::uint16_t p = level(grid.at(i, j));
      out.put(static_cast<char>(p >> 8));
      out.put(static_cast<char>(p & 0xff));
    }
  }
}

PorodFit porod_slope(const PorodShape& shape, double k_min, double k_max, int samples, int directions) {
  check_range(k_min, k_max, samples);
  const double diameter = shape_diameter(shape);
  if (k_min * diameter < kPorodRegime) {
    throw RegimeError("Porod regime needs k_min * diameter >= 20 (got " + std::to_string(k_min * diameter) + ")");
  }
  const bool anisotropic = std::holds_alternative<geom::Polygon>(shape) || std::holds_alternative<geom::Polyhedron>(shape);
  if (anisotropic && directions < 16) throw InputError("orientation averaging needs at least 16 directions");

  const double width = 2.0 * kPi / diameter;
  const std::vector<double> ks = log_space(k_min, k_max, samples);
  std::vector<double> mean(ks.size());
  std::size_t counter = 0;

  if (const auto* d = std::get_if<DiskShape>(&shape)) {
    for (std::size_t s = 0; s < ks.size(); ++s) {
      mean[s] = window_mean(ks[s], width, counter, [&](double k, std::size_t) {
        return std::norm(xform::disk_form_factor(d->radius, xform::Wavevector2(k, 0.0)));
      });
    }
    return fit(ks, std::move(mean), 2);
  }
  if (const auto* sp = std::get_if<SphereShape>(&shape)) {
    for (std::size_t s = 0; s < ks.size(); ++s) {
      mean[s] = window_mean(ks[s], width, counter, [&](double k, std::size_t) {
        return std::norm(xform::sphere_form_factor(sp->radius, xform::Wavevector3(k, 0.0, 0.0)));
      });
    }
    return fit(ks, std::move(mean), 3);
  }
  if (const auto* poly = std::get_if<geom::Polygon>(&shape)) {
    const xform::PolygonTransform transform(*poly);
    const auto nd = static_cast<std::size_t>(directions);
    std::vector<double> bx(nd), by(nd);
    std::vector<xform::FormFactor> out(nd);
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    for (std::size_t s = 0; s < ks.size(); ++s) {
      mean[s] = window_mean(ks[s], width, counter, [&](double k, std::size_t j) {
        const double offset = frac(golden * static_cast<double>(j));
        for (std::size_t i = 0; i < nd; ++i) {
          const double t = 2.0 * kPi * (static_cast<double>(i) + offset) / static_cast<double>(nd);
          bx[i] = k * std::cos(t);
          by[i] = k * std::sin(t);
        }
        transform.evaluate(bx, by, out);
        double acc = 0.0;
        for (const auto& v : out) acc += std::norm(v);
        return acc / static_cast<double>(nd);
      });
    }
    return fit(ks, std::move(mean), 2);
  }
  const auto& poly = std::get<geom::Polyhedron>(shape);
  const xform::PolyhedronTransform transform(poly);
  const std::vector<Vec3> dirs = fibonacci_sphere(directions);
  for (std::size_t s = 0; s < ks.size(); ++s) {
    mean[s] = window_mean(ks[s], width, counter, [&](double k, std::size_t j) {
      const Mat3 r = sequence_rotation(j);
      double acc = 0.0;
      for (const auto& d : dirs) acc += std::norm(transform(xform::Wavevector3((r * d) * k)));
      return acc / static_cast<double>(dirs.size());
    });
  }
  return fit(ks, std::move(mean), 3);
}

PorodFit fixed_direction_slope(const geom::Polyhedron& p, const Vec3& direction, double k_min, double k_max,
                               int samples) {
  check_range(k_min, k_max, samples);
  const double len = norm(direction);
  if (!(len > 0.0)) throw InputError("direction must be non-zero");
  const Vec3 u = direction * (1.0 / len);
  const xform::PolyhedronTransform transform(p);
  // Fringes along a fixed direction repeat with period 2 pi / (extent along u).
  double lo = dot(p.vertices()[0], u), hi = lo;
  for (const auto& v : p.vertices()) {
    lo = std::min(lo, dot(v, u));
    hi = std::max(hi, dot(v, u));
  }
  const double width = 2.0 * kPi / (hi - lo);
  const std::vector<double> ks = log_space(k_min, k_max, samples);
  std::vector<double> mean(ks.size());
  std::size_t counter = 0;
  for (std::size_t s = 0; s < ks.size(); ++s) {
    mean[s] = window_mean(ks[s], width, counter,
                          [&](double k, std::size_t) { return std::norm(transform(xform::Wavevector3(u * k))); });
  }
  return fit(ks, std::move(mean), 3);
}

}  // namespace polyft::scatter
