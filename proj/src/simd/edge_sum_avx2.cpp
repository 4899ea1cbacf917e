// Compiled with -mavx2 only (no FMA) so each lane rounds exactly like the scalar path.

#include <immintrin.h>

#include <cassert>

#include "polyft/simd/edge_sum.hpp"
#include "polyft/simd/sincos.hpp"

namespace polyft::simd {

namespace {

struct SinCos4 {
  __m256d s;
  __m256d c;
};

inline __m256d horner(__m256d zz, const double (&coef)[6]) {
  __m256d p = _mm256_set1_pd(coef[0]);
  for (int k = 1; k < 6; ++k) p = _mm256_add_pd(_mm256_mul_pd(p, zz), _mm256_set1_pd(coef[k]));
  return p;
}

inline __m256d floor4(__m256d v) { return _mm256_round_pd(v, _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC); }

SinCos4 sincos4(__m256d x) {
  using namespace detail;
  const __m256d sign_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(static_cast<long long>(kSignBit)));
  const __m256d sign = _mm256_and_pd(x, sign_mask);
  const __m256d ax = _mm256_andnot_pd(sign_mask, x);

  const __m256d out_of_range = _mm256_cmp_pd(ax, _mm256_set1_pd(kSinCosReducedLimit), _CMP_NLE_UQ);
  if (_mm256_movemask_pd(out_of_range) != 0) {
    alignas(32) double xs[4], ss[4], cs[4];
    _mm256_store_pd(xs, x);
    for (int i = 0; i < 4; ++i) sincos(xs[i], ss[i], cs[i]);
    return {_mm256_load_pd(ss), _mm256_load_pd(cs)};
  }

  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d six = _mm256_set1_pd(6.0);
  const __m256d eight = _mm256_set1_pd(8.0);

  __m256d j = floor4(_mm256_mul_pd(ax, _mm256_set1_pd(kFourOverPi)));
  const __m256d odd = _mm256_sub_pd(j, _mm256_mul_pd(two, floor4(_mm256_mul_pd(j, _mm256_set1_pd(0.5)))));
  j = _mm256_add_pd(j, odd);
  __m256d z = _mm256_sub_pd(ax, _mm256_mul_pd(j, _mm256_set1_pd(kDp1)));
  z = _mm256_sub_pd(z, _mm256_mul_pd(j, _mm256_set1_pd(kDp2)));
  z = _mm256_sub_pd(z, _mm256_mul_pd(j, _mm256_set1_pd(kDp3)));
  const __m256d oct = _mm256_sub_pd(j, _mm256_mul_pd(eight, floor4(_mm256_mul_pd(j, _mm256_set1_pd(0.125)))));
  const __m256d zz = _mm256_mul_pd(z, z);

  const __m256d ps = horner(zz, kSin);
  const __m256d pc = horner(zz, kCos);
  const __m256d sin_poly = _mm256_add_pd(z, _mm256_mul_pd(z, _mm256_mul_pd(zz, ps)));
  const __m256d cos_poly = _mm256_add_pd(_mm256_sub_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(_mm256_set1_pd(0.5), zz)),
                                         _mm256_mul_pd(zz, _mm256_mul_pd(zz, pc)));

  const __m256d is2 = _mm256_cmp_pd(oct, two, _CMP_EQ_OQ);
  const __m256d is4 = _mm256_cmp_pd(oct, four, _CMP_EQ_OQ);
  const __m256d is6 = _mm256_cmp_pd(oct, six, _CMP_EQ_OQ);
  const __m256d swap = _mm256_or_pd(is2, is6);
  const __m256d sa = _mm256_blendv_pd(sin_poly, cos_poly, swap);
  const __m256d ca = _mm256_blendv_pd(cos_poly, sin_poly, swap);
  const __m256d sin_neg = _mm256_and_pd(_mm256_cmp_pd(oct, four, _CMP_GE_OQ), sign_mask);
  const __m256d cos_neg = _mm256_and_pd(_mm256_or_pd(is2, is4), sign_mask);
  return {_mm256_xor_pd(sa, _mm256_xor_pd(sin_neg, sign)), _mm256_xor_pd(ca, cos_neg)};
}

inline __m256d sinc4(__m256d x) {
  const __m256d sign_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(static_cast<long long>(detail::kSignBit)));
  const __m256d ax = _mm256_andnot_pd(sign_mask, x);
  const __m256d small = _mm256_cmp_pd(ax, _mm256_set1_pd(kSincSeriesCutoff), _CMP_LT_OQ);
  const __m256d x2 = _mm256_mul_pd(x, x);
  const __m256d series = _mm256_add_pd(_mm256_sub_pd(_mm256_set1_pd(1.0), _mm256_div_pd(x2, _mm256_set1_pd(6.0))),
                                       _mm256_div_pd(_mm256_mul_pd(x2, x2), _mm256_set1_pd(120.0)));
  const __m256d direct = _mm256_div_pd(sincos4(x).s, x);
  return _mm256_blendv_pd(direct, series, small);
}

}  // namespace

void sincos_avx2(std::span<const double> x, std::span<double> s, std::span<double> c) {
  assert(s.size() == x.size() && c.size() == x.size());
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) {
    const SinCos4 r = sincos4(_mm256_loadu_pd(x.data() + i));
    _mm256_storeu_pd(s.data() + i, r.s);
    _mm256_storeu_pd(c.data() + i, r.c);
  }
  for (; i < x.size(); ++i) sincos(x[i], s[i], c[i]);
}

void edge_sum_avx2(const EdgeTable& e, std::span<const double> bx, std::span<const double> by,
                   std::span<double> re, std::span<double> im) {
  assert(bx.size() == by.size() && re.size() == bx.size() && im.size() == bx.size());
  const std::size_t count = bx.size();
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d vbx = _mm256_loadu_pd(bx.data() + i);
    const __m256d vby = _mm256_loadu_pd(by.data() + i);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t n = 0; n < e.size(); ++n) {
      const __m256d lx = _mm256_set1_pd(e.lx[n]);
      const __m256d ly = _mm256_set1_pd(e.ly[n]);
      const __m256d bl = _mm256_add_pd(_mm256_mul_pd(vbx, lx), _mm256_mul_pd(vby, ly));
      const __m256d bperp_l = _mm256_sub_pd(_mm256_mul_pd(vbx, ly), _mm256_mul_pd(vby, lx));
      const __m256d w = _mm256_mul_pd(bperp_l, sinc4(_mm256_mul_pd(half, bl)));
      const __m256d phase = _mm256_add_pd(_mm256_mul_pd(vbx, _mm256_set1_pd(e.cx[n])),
                                          _mm256_mul_pd(vby, _mm256_set1_pd(e.cy[n])));
      const SinCos4 sc = sincos4(phase);
      acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(w, sc.c));
      acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(w, sc.s));
    }
    const __m256d b2 = _mm256_add_pd(_mm256_mul_pd(vbx, vbx), _mm256_mul_pd(vby, vby));
    const __m256d neg = _mm256_xor_pd(acc_re, _mm256_castsi256_pd(_mm256_set1_epi64x(static_cast<long long>(detail::kSignBit))));
    _mm256_storeu_pd(re.data() + i, _mm256_div_pd(acc_im, b2));
    _mm256_storeu_pd(im.data() + i, _mm256_div_pd(neg, b2));
  }
  if (i < count) {
    edge_sum_scalar(e, bx.subspan(i), by.subspan(i), re.subspan(i), im.subspan(i));
  }
}

}  // namespace polyft::simd
