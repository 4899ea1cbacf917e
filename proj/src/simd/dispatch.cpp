#include <cstdlib>
#include <string_view>

#include "polyft/simd/edge_sum.hpp"

namespace polyft::simd {

namespace {

Isa detect() {
  if (const char* force = std::getenv("POLYFT_FORCE_SCALAR"); force && std::string_view(force) == "1") {
    return Isa::Scalar;
  }
#if defined(POLYFT_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Avx2:
      return "avx2";
    case Isa::Scalar:
      break;
  }
  return "scalar";
}

void edge_sum(const EdgeTable& edges, std::span<const double> bx, std::span<const double> by,
              std::span<double> re, std::span<double> im) {
#if defined(POLYFT_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    edge_sum_avx2(edges, bx, by, re, im);
    return;
  }
#endif
  edge_sum_scalar(edges, bx, by, re, im);
}

}  // namespace polyft::simd
