#include "polyft/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyft/error.hpp"

namespace polyft::moments {

namespace {

constexpr int kMaxOrder = 16;
constexpr double kRelationTolerance = 1e-10;

// Pascal's triangle up to the largest row the relations need.
struct BinomialTable {
  static constexpr int kRows = kMaxOrder + 3;
  double c[kRows][kRows] = {};
  constexpr BinomialTable() {
    for (int n = 0; n < kRows; ++n) {
      c[n][0] = 1.0;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
    }
  }
  constexpr double operator()(int n, int k) const { return (k < 0 || k > n) ? 0.0 : c[n][k]; }
};

constexpr BinomialTable kBinom;

struct Relation {
  double value = 0.0;      // R(a, b) / (m (m - 1))
  double magnitude = 0.0;  // same sum over |terms|, for the consistency tolerance
};

// Right-hand sides of the order-m relations, indexed by a = 0..m (b = m - a).
std::vector<Relation> relations(const geom::Polygon& poly, int m) {
  const std::size_t n_vert = poly.size();
  // powers[v][e] for v = 0..N-1, e = 0..m
  std::vector<double> px(n_vert * static_cast<std::size_t>(m + 1));
  std::vector<double> py(n_vert * static_cast<std::size_t>(m + 1));
  const auto at = [m](std::size_t v, int e) { return v * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(e); };
  for (std::size_t v = 0; v < n_vert; ++v) {
    px[at(v, 0)] = 1.0;
    py[at(v, 0)] = 1.0;
    for (int e = 1; e <= m; ++e) {
      px[at(v, e)] = px[at(v, e - 1)] * poly[v].x;
      py[at(v, e)] = py[at(v, e - 1)] * poly[v].y;
    }
  }

  std::vector<Relation> out(static_cast<std::size_t>(m + 1));
  const double norm_factor = 1.0 / (static_cast<double>(m) * static_cast<double>(m - 1));
  for (int a = 0; a <= m; ++a) {
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t n = 0; n < n_vert; ++n) {
      const std::size_t nn = (n + 1) % n_vert;
      const double lx = poly[nn].x - poly[n].x;
      const double ly = poly[nn].y - poly[n].y;
      for (int p = 0; p <= m - 1; ++p) {
        const int e = m - 1 - p;
        for (int q = 0; q <= e; ++q) {
          const double base = kBinom(e, q) * px[at(nn, q)] * py[at(nn, e - q)];
          if (base == 0.0) continue;
          // b2 * lx part of b_perp . l contributes with the opposite sign to b1 * ly.
          const int r_y = a - 1 - q;
          if (r_y >= 0 && r_y <= p) {
            const double t = ly * base * kBinom(p, r_y) * px[at(n, r_y)] * py[at(n, p - r_y)];
            sum += t;
            mag += std::abs(t);
          }
          const int r_x = a - q;
          if (r_x >= 0 && r_x <= p) {
            const double t = -lx * base * kBinom(p, r_x) * px[at(n, r_x)] * py[at(n, p - r_x)];
            sum += t;
            mag += std::abs(t);
          }
        }
      }
    }
    out[static_cast<std::size_t>(a)] = {sum * norm_factor, mag * norm_factor};
  }
  return out;
}

// Solves the order-k moments from the k + 3 relations
//   C(k, a-2) M(a-2) + C(k, a) M(a) = rhs(a),   a = 0..k+2,
// where M(p) stands for M(x^p y^{k-p}).
void solve_order(int k, const std::vector<Relation>& rel, MomentTable& table) {
  std::vector<double> down(static_cast<std::size_t>(k + 1));
  std::vector<double> up(static_cast<std::size_t>(k + 1));
  const auto rhs = [&](int a) { return rel[static_cast<std::size_t>(a)].value; };
  const auto M = [](std::vector<double>& v, int p) -> double& { return v[static_cast<std::size_t>(p)]; };

  // From the pure-x end: relation a = k+2 isolates M(k), a = k+1 isolates M(k-1).
  for (int a = k + 2; a >= 2; --a) {
    const int p = a - 2;
    const double known = (a <= k) ? kBinom(k, a) * M(down, a) : 0.0;
    M(down, p) = (rhs(a) - known) / kBinom(k, p);
  }
  // From the pure-y end: relation a = 0 isolates M(0), a = 1 isolates M(1).
  for (int a = 0; a <= k; ++a) {
    const double known = (a >= 2) ? kBinom(k, a - 2) * M(up, a - 2) : 0.0;
    M(up, a) = (rhs(a) - known) / kBinom(k, a);
  }
  for (int p = 0; p <= k; ++p) {
    table.at(p, k - p) = (p >= k - p) ? M(down, p) : M(up, p);
  }

  for (int a = 0; a <= k + 2; ++a) {
    double lhs = 0.0;
    double scale = rel[static_cast<std::size_t>(a)].magnitude;
    if (a >= 2) {
      const double t = kBinom(k, a - 2) * table.at(a - 2, k - a + 2);
      lhs += t;
      scale += std::abs(t);
    }
    if (a <= k) {
      const double t = kBinom(k, a) * table.at(a, k - a);
      lhs += t;
      scale += std::abs(t);
    }
    if (std::abs(lhs - rhs(a)) > kRelationTolerance * scale) {
      throw ToleranceError("moment relations inconsistent at order " + std::to_string(k) + ", a = " +
                           std::to_string(a));
    }
  }
}

}  // namespace

double binomial(int n, int k) {
  if (n < BinomialTable::kRows) return kBinom(n, k);
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MomentTable::MomentTable(int max_order) : max_order_(max_order) {
  if (max_order < 0) throw InputError("moment table order must be non-negative");
  const auto n = static_cast<std::size_t>(max_order + 1);
  values_.assign(n * (n + 1) / 2, 0.0);
}

std::size_t MomentTable::index(int a, int b) {
  const auto k = static_cast<std::size_t>(a + b);
  return k * (k + 1) / 2 + static_cast<std::size_t>(b);
}

double MomentTable::at(int a, int b) const {
  if (a < 0 || b < 0 || a + b > max_order_) {
    throw InputError("moment (" + std::to_string(a) + ", " + std::to_string(b) + ") outside table of order " +
                     std::to_string(max_order_));
  }
  return values_[index(a, b)];
}

double& MomentTable::at(int a, int b) {
  if (a < 0 || b < 0 || a + b > max_order_) {
    throw InputError("moment (" + std::to_string(a) + ", " + std::to_string(b) + ") outside table of order " +
                     std::to_string(max_order_));
  }
  return values_[index(a, b)];
}

MomentTable signed_moments_from_vertices(const geom::Polygon& poly, int max_order) {
  if (max_order < 0 || max_order > kMaxOrder) {
    throw InputError("max_order must lie in [0, " + std::to_string(kMaxOrder) + "]");
  }
  MomentTable table(max_order);
  for (int k = 0; k <= max_order; ++k) solve_order(k, relations(poly, k + 2), table);
  return table;
}

MomentTable moments_from_vertices(const geom::Polygon& poly, int max_order) {
  poly.require_simple();
  MomentTable table = signed_moments_from_vertices(poly, max_order);
  if (table.at(0, 0) < 0.0) {
    for (int k = 0; k <= max_order; ++k)
      for (int a = 0; a <= k; ++a) table.at(a, k - a) = -table.at(a, k - a);
  }
  return table;
}

FirstMoments first_moments(const geom::Polygon& poly) {
  double area = 0.0, mx = 0.0, my = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& v0 = poly[i];
    const Vec2& v1 = poly[(i + 1) % n];
    area += v0.x * v1.y - v0.y * v1.x;
    mx += (v1.y - v0.y) * (v1.x * v1.x + v0.x * v0.x + v1.x * v0.x);
    my -= (v1.x - v0.x) * (v1.y * v1.y + v0.y * v0.y + v1.y * v0.y);
  }
  area *= 0.5;
  if (area == 0.0) throw InputError("zero-area polygon has no centroid");
  mx /= 6.0;
  my /= 6.0;
  return {area, {mx / area, my / area}};
}

ComplexPolygon::ComplexPolygon(const geom::Polygon& poly) {
  z_.reserve(poly.size());
  for (const auto& v : poly.vertices()) z_.emplace_back(v.x, v.y);
}

const std::complex<double>& ComplexPolygon::operator()(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(z_.size());
  return z_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::complex<double> horner(std::span<const std::complex<double>> coeffs, std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> davis_sum(const ComplexPolygon& cp, std::span<const std::complex<double>> h) {
  if (h.size() > 33) throw InputError("Davis polynomial degree must be <= 32");
  std::complex<double> sum{0.0, 0.0};
  const auto n = static_cast<std::ptrdiff_t>(cp.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& zm = cp(i - 1);
    const auto& z0 = cp(i);
    const auto& zp = cp(i + 1);
    if (zm == z0 || z0 == zp) throw InputError("coincident consecutive vertices in Davis sum");
    const auto w = (std::conj(zm) - std::conj(z0)) / (zm - z0) - (std::conj(z0) - std::conj(zp)) / (z0 - zp);
    sum += w * horner(h, z0);
  }
  return std::complex<double>(0.0, 0.5) * sum;
}

std::vector<std::complex<double>> complex_moments(const ComplexPolygon& cp, int k_max) {
  if (k_max < 2) throw InputError("complex moments need k_max >= 2");
  if (k_max > 32) throw InputError("complex moments need k_max <= 32");
  std::vector<std::complex<double>> out;
  for (int k = 2; k <= k_max; ++k) {
    Polynomial h(static_cast<std::size_t>(k + 1), {0.0, 0.0});
    h[static_cast<std::size_t>(k)] = 1.0;
    out.push_back(davis_sum(cp, h));
  }
  return out;
}

}  // namespace polyft::moments
