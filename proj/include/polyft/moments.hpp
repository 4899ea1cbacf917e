#pragma once

// Polygon moments computed directly from the vertex list, and the Davis vertex formula
// for integrals of second complex derivatives.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "polyft/geom.hpp"

namespace polyft::moments {

/// Dense table of unnormalized moments M(x^a y^b) = integral over V of x^a y^b dA for all
/// a + b <= max_order. Lookups outside the table throw.
class MomentTable {
 public:
  MomentTable() = default;
  explicit MomentTable(int max_order);

  int max_order() const { return max_order_; }
  double at(int a, int b) const;
  double& at(int a, int b);
  /// M(1), the region's area.
  double area() const { return at(0, 0); }
  /// Row-major (a + b = 0, then 1, ...; within an order a descends) view of all entries.
  std::span<const double> values() const { return values_; }

 private:
  static std::size_t index(int a, int b);
  int max_order_ = -1;
  std::vector<double> values_;
};

/// Moments of the region bounded by `poly`, up to total order max_order (<= 16).
///
/// Matches coefficients of b1^a b2^b between the moment series of the transform and the
/// Taylor expansion of |b|^2 times the edge sum. For every a + b = k + 2 this gives
///   M(x^{a-2} y^b) / ((a-2)! b!) + M(x^a y^{b-2}) / (a! (b-2)!) = R(a, b) / (a+b)!
/// where
///   R(a, b) = sum_n sum_{p=0}^{m-1} sum_q C(m-1-p, q) X'^q Y'^{m-1-p-q} *
///               [ ly_n C(p, a-1-q) X^{a-1-q} Y^{p+q+1-a} - lx_n C(p, a-q) X^{a-q} Y^{p+q-a} ],
/// m = a + b, (X, Y) = v_n, (X', Y') = v_{n+1}, l_n = v_{n+1} - v_n, and binomials with a
/// negative lower index vanish. The k + 3 relations of each order determine its k + 1
/// moments with two to spare; the spares are checked at 1e-10 relative and a
/// ToleranceError is thrown on failure.
///
/// Values describe the region, independent of the ring's orientation.
MomentTable moments_from_vertices(const geom::Polygon& poly, int max_order);

/// Same relations evaluated on the ring as given: a clockwise ring yields negated moments.
/// Does not check simplicity.
MomentTable signed_moments_from_vertices(const geom::Polygon& poly, int max_order);

struct FirstMoments {
  double area = 0.0;
  Vec2 centroid;
};

/// Area and centroid from the explicit first-moment edge sums. Throws for zero area.
FirstMoments first_moments(const geom::Polygon& poly);

/// Vertices as complex numbers z_n = x_n + i y_n.
class ComplexPolygon {
 public:
  explicit ComplexPolygon(const geom::Polygon& poly);
  std::span<const std::complex<double>> z() const { return z_; }
  std::size_t size() const { return z_.size(); }
  /// Cyclic access: z(-1) is the last vertex, z(N) the first.
  const std::complex<double>& operator()(std::ptrdiff_t i) const;

 private:
  std::vector<std::complex<double>> z_;
};

/// Polynomial h(z) = sum_k c_k z^k (coefficient of z^k at index k), degree <= 32.
using Polynomial = std::vector<std::complex<double>>;

std::complex<double> horner(std::span<const std::complex<double>> coeffs, std::complex<double> z);

/// (i/2) sum_n [ (z*_{n-1} - z*_n) / (z_{n-1} - z_n) - (z*_n - z*_{n+1}) / (z_n - z_{n+1}) ] h(z_n),
/// which equals the integral of h''(z) over the polygon (sign follows orientation).
std::complex<double> davis_sum(const ComplexPolygon& cp, std::span<const std::complex<double>> h);

/// tau_k = davis_sum with h = z^k for k = 2..k_max; tau_k = k (k-1) * integral of z^{k-2}.
std::vector<std::complex<double>> complex_moments(const ComplexPolygon& cp, int k_max);

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);

}  // namespace polyft::moments
