// Full-size acceptance run: one line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polyft/simd/edge_sum.hpp"
#include "polyft/verify.hpp"

namespace {

using polyft::verify::Check;

struct Criterion {
  std::string name;
  double time_limit;  // seconds
  std::function<std::vector<Check>()> run;
};

bool report(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Check> checks = c.run();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = secs <= c.time_limit;
  std::string parts;
  for (const auto& k : checks) {
    ok = ok && k.passed;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s%s %.3g/%.3g", parts.empty() ? "" : "; ", k.name.c_str(), k.metric,
                  k.tolerance);
    parts += buf;
  }
  std::printf("%s  %-22s %7.2fs/%-5.0fs  %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs, c.time_limit,
              parts.c_str());
  for (const auto& k : checks)
    if (!k.passed) std::printf("      %s: %s\n", k.name.c_str(), k.detail.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  using namespace polyft::verify;
  const std::vector<Criterion> criteria = {
      {"polygon-quadrature", 60, [] { return std::vector{polygon_vs_quadrature(200, 20)}; }},
      {"rectangle-sinc", 1, [] { return std::vector{rect_vs_sinc(64)}; }},
      {"disk-airy", 30, [] { return std::vector{disk_vs_quadrature(50), airy_rings(512)}; }},
      {"moments-oracle", 30, [] { return std::vector{moments_vs_oracle(100, 8)}; }},
      {"davis-oracle", 30, [] { return std::vector{davis_vs_oracle(50, 8)}; }},
      {"porod-slopes", 120, [] { return std::vector{porod_sphere(64), porod_disk(64), porod_cube(64, 128)}; }},
      {"turning-number", 5, [] { return std::vector{umlaufsatz(1000)}; }},
      {"closure", 5, [] { return std::vector{edge_closure(1000), face_normal_closure(20)}; }},
      {"stokes", 30, [] { return std::vector{stokes(50)}; }},
      {"isoperimetric", 10, [] { return std::vector{isoperimetric_random(10000), isoperimetric_regular(64)}; }},
      {"gram-triple", 1, [] { return std::vector{gram_vs_triple(1000)}; }},
      {"series-order6", 5, [] { return std::vector{series_consistency(20, 6)}; }},
  };
  std::printf("isa: %s\n", std::string(polyft::simd::isa_name(polyft::simd::active_isa())).c_str());
  int failed = 0;
  for (const auto& c : criteria) failed += report(c) ? 0 : 1;
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
