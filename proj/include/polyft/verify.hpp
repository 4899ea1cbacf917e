#pragma once

// Invariant checks shared by `polyft verify` and the acceptance runner. Every check is
// seeded and deterministic; sizes are parameters so the CLI can run quick versions.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyft::verify {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed error (or deviation from the expected band)
  double tolerance = 0.0;  // passed iff metric <= tolerance
  std::string detail;
  double seconds = 0.0;
};

// geom
Check area_invariance(int polygons, std::uint64_t seed = 11);
Check reversal_symmetry(int polygons, std::uint64_t seed = 12);
Check umlaufsatz(int polygons, std::uint64_t seed = 13);
Check edge_closure(int polygons, std::uint64_t seed = 14);
Check face_normal_closure(int random_polyhedra, std::uint64_t seed = 15);
Check polyhedron_volumes();
Check gram_vs_triple(int triples, std::uint64_t seed = 16);

// xform
Check polygon_vs_quadrature(int polygons, int betas, std::uint64_t seed = 21);
Check rect_vs_sinc(int grid);
Check disk_vs_quadrature(int magnitudes);
Check conjugate_symmetry(int polygons, std::uint64_t seed = 22);
Check branch_continuity(int polygons, std::uint64_t seed = 23);
Check series_consistency(int polygons, int order, std::uint64_t seed = 24);
Check polyhedron_vs_quadrature(int polyhedra, int betas, std::uint64_t seed = 25);
Check cube_closed_form(int betas, std::uint64_t seed = 26);
Check sphere_vs_quadrature(int magnitudes);

// moments
Check moments_vs_oracle(int polygons, int max_order, std::uint64_t seed = 31);
Check moment_translation(int polygons, std::uint64_t seed = 32);
Check first_moment_agreement(int polygons, std::uint64_t seed = 33);
Check davis_vs_oracle(int polygons, int max_degree, std::uint64_t seed = 34);
Check complex_moment_relation(int polygons, std::uint64_t seed = 35);

// identities
Check stokes(int polygons, std::uint64_t seed = 41);
Check isoperimetric_random(int polygons, std::uint64_t seed = 42);
Check isoperimetric_regular(int max_n);
Check curve_area_convergence();

// oracle
Check triangulation_area(int polygons, std::uint64_t seed = 51);
Check quadrature_at_zero(int polygons, std::uint64_t seed = 52);

// simd
Check simd_equivalence(int polygons, int betas, std::uint64_t seed = 61);

// scatter
Check render_pure_map(int pixels, std::uint64_t seed = 71);
Check airy_rings(int resolution);
Check energy_concentration(int resolution);
Check porod_sphere(int samples);
Check porod_disk(int samples);
Check porod_cube(int samples, int directions);
Check porod_rescaling(int samples);

/// geom, xform, moments, identities, oracle, simd, scatter.
std::vector<std::string> suite_names();
/// Quick versions of the checks in one suite, or every suite for "all". Throws InputError
/// for unknown names.
std::vector<Check> run_suite(std::string_view name);

}  // namespace polyft::verify
