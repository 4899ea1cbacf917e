#include <cassert>

#include "polyft/geom.hpp"
#include "polyft/simd/edge_sum.hpp"
#include "polyft/simd/sincos.hpp"

namespace polyft::simd {

EdgeTable::EdgeTable(const geom::Polygon& poly) {
  const std::size_t n = poly.size();
  lx.resize(n);
  ly.resize(n);
  cx.resize(n);
  cy.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 l = poly.edge(i);
    const Vec2 c = poly.midpoint(i);
    lx[i] = l.x;
    ly[i] = l.y;
    cx[i] = c.x;
    cy[i] = c.y;
  }
}

namespace {

// Shared by the scalar kernel and the AVX2 tail; see edge_sum.hpp for the formula.
inline void edge_sum_one(const EdgeTable& e, double bx, double by, double& out_re, double& out_im) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t n = 0; n < e.size(); ++n) {
    const double bl = bx * e.lx[n] + by * e.ly[n];
    const double bperp_l = bx * e.ly[n] - by * e.lx[n];
    const double w = bperp_l * sinc(0.5 * bl);
    const double phase = bx * e.cx[n] + by * e.cy[n];
    double s, c;
    sincos(phase, s, c);
    acc_re += w * c;
    acc_im += w * s;
  }
  // -(i * acc) / b^2
  const double b2 = bx * bx + by * by;
  out_re = acc_im / b2;
  out_im = -acc_re / b2;
}

}  // namespace

void edge_sum_scalar(const EdgeTable& edges, std::span<const double> bx, std::span<const double> by,
                     std::span<double> re, std::span<double> im) {
  assert(bx.size() == by.size() && re.size() == bx.size() && im.size() == bx.size());
  for (std::size_t i = 0; i < bx.size(); ++i) edge_sum_one(edges, bx[i], by[i], re[i], im[i]);
}

}  // namespace polyft::simd
