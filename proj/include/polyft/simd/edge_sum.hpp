#pragma once

// Batched polygon edge-sum kernel: the data-parallel inner loop of the analytic polygon
// Fourier transform. Lanes run over wavevectors; the loop over edges is sequential so
// every lane accumulates in the same order as the scalar reference.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace polyft::geom {
class Polygon;
}

namespace polyft::simd {

/// Structure-of-arrays view of a polygon's edges.
struct EdgeTable {
  std::vector<double> lx, ly;  // directed edge l_n
  std::vector<double> cx, cy;  // midpoint c_n

  explicit EdgeTable(const geom::Polygon& poly);
  std::size_t size() const { return lx.size(); }
};

/// For each wavevector b = (bx[i], by[i]) with b != 0, writes
///   phi(b) = -(1/|b|^2) * sum_n (b_perp . l_n) * i * sinc(b . l_n / 2) * exp(i b . c_n)
/// with b_perp = (-by, bx). Lanes with b == 0 produce NaN; callers route them elsewhere.
/// Output spans must have the same length as the inputs.
void edge_sum_scalar(const EdgeTable& edges, std::span<const double> bx, std::span<const double> by,
                     std::span<double> re, std::span<double> im);

#if defined(POLYFT_HAVE_AVX2)
void edge_sum_avx2(const EdgeTable& edges, std::span<const double> bx, std::span<const double> by,
                   std::span<double> re, std::span<double> im);
/// Four-lane sincos matching polyft::simd::sincos bit for bit; exposed for equivalence tests.
void sincos_avx2(std::span<const double> x, std::span<double> s, std::span<double> c);
#endif

enum class Isa { Scalar, Avx2 };

/// Best instruction set available on this CPU and compiled into the library.
/// Setting POLYFT_FORCE_SCALAR=1 in the environment pins the scalar path.
Isa active_isa();
std::string_view isa_name(Isa isa);

/// Dispatches to the kernel selected by active_isa().
void edge_sum(const EdgeTable& edges, std::span<const double> bx, std::span<const double> by,
              std::span<double> re, std::span<double> im);

}  // namespace polyft::simd
