#pragma once

// Scalar sine/cosine with octant range reduction and minimax polynomials (Cephes
// coefficients). The AVX2 kernels perform the identical sequence of IEEE operations per
// lane, so scalar and vector results agree bit for bit. Arguments beyond
// kSinCosReducedLimit fall back to the standard library in both paths.

#include <bit>
#include <cmath>
#include <cstdint>

namespace polyft::simd {

inline constexpr double kSinCosReducedLimit = 1.0e6;

namespace detail {

inline constexpr double kFourOverPi = 1.27323954473516268615;
inline constexpr double kDp1 = 7.85398125648498535156e-1;
inline constexpr double kDp2 = 3.77489470793079817668e-8;
inline constexpr double kDp3 = 2.69515142907905952645e-15;

inline constexpr double kSin[6] = {1.58962301576546568060e-10, -2.50507477628578072866e-8,
                                   2.75573136213857245213e-6,  -1.98412698295895385996e-4,
                                   8.33333333332211858878e-3,  -1.66666666666666307295e-1};
inline constexpr double kCos[6] = {-1.13585365213876817300e-11, 2.08757008419747316778e-9,
                                   -2.75573141792967388112e-7,  2.48015872888517045348e-5,
                                   -1.38888888888730564116e-3,  4.16666666666665929218e-2};

inline constexpr std::uint64_t kSignBit = 0x8000000000000000ULL;

inline double flip_sign_if(double v, std::uint64_t sign_bits) {
  return std::bit_cast<double>(std::bit_cast<std::uint64_t>(v) ^ sign_bits);
}

}  // namespace detail

/// sin(x) and cos(x). Odd/even symmetry is exact: sincos(-x) returns (-s, c).
inline void sincos(double x, double& s, double& c) {
  using namespace detail;
  const std::uint64_t sign = std::bit_cast<std::uint64_t>(x) & kSignBit;
  const double ax = std::abs(x);
  if (!(ax <= kSinCosReducedLimit)) {
    s = std::sin(x);
    c = std::cos(x);
    return;
  }
  double j = std::floor(ax * kFourOverPi);
  const double odd = j - 2.0 * std::floor(j * 0.5);
  j = j + odd;
  const double z = ((ax - j * kDp1) - j * kDp2) - j * kDp3;
  const double oct = j - 8.0 * std::floor(j * 0.125);
  const double zz = z * z;

  double ps = kSin[0];
  double pc = kCos[0];
  for (int k = 1; k < 6; ++k) {
    ps = ps * zz + kSin[k];
    pc = pc * zz + kCos[k];
  }
  const double sin_poly = z + z * (zz * ps);
  const double cos_poly = (1.0 - 0.5 * zz) + zz * (zz * pc);

  // oct is one of 0, 2, 4, 6.
  const bool swap = (oct == 2.0 || oct == 6.0);
  const double sa = swap ? cos_poly : sin_poly;
  const double ca = swap ? sin_poly : cos_poly;
  const std::uint64_t sin_neg = (oct >= 4.0) ? kSignBit : 0;
  const std::uint64_t cos_neg = (oct == 2.0 || oct == 4.0) ? kSignBit : 0;
  s = flip_sign_if(sa, sin_neg ^ sign);
  c = flip_sign_if(ca, cos_neg);
}

inline double sin(double x) {
  double s, c;
  sincos(x, s, c);
  return s;
}

inline double cos(double x) {
  double s, c;
  sincos(x, s, c);
  return c;
}

inline constexpr double kSincSeriesCutoff = 1e-4;

/// sin(x)/x, with the series 1 - x^2/6 + x^4/120 below |x| = 1e-4.
inline double sinc(double x) {
  if (std::abs(x) < kSincSeriesCutoff) {
    const double x2 = x * x;
    return (1.0 - x2 / 6.0) + (x2 * x2) / 120.0;
  }
  return sin(x) / x;
}

}  // namespace polyft::simd
