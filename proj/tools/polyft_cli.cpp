// polyft command-line front end. JSON results go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 malformed input, 2 invariant or tolerance failure,
// 3 regime violation.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyft/error.hpp"
#include "polyft/geom.hpp"
#include "polyft/io.hpp"
#include "polyft/moments.hpp"
#include "polyft/oracle.hpp"
#include "polyft/scatter.hpp"
#include "polyft/simd/edge_sum.hpp"
#include "polyft/verify.hpp"
#include "polyft/xform.hpp"

namespace {

using namespace polyft;
using io::json;

constexpr int kExitInput = 1;
constexpr int kExitTolerance = 2;
constexpr int kExitRegime = 3;

struct Globals {
  bool allow_nonsimple = false;
  bool echo_check = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

// "re" or "re:im"
std::vector<std::complex<double>> parse_coeffs(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto colon = item.find(':');
    const auto re = parse_list(item.substr(0, colon), "coefficient");
    const auto im = colon == std::string::npos ? std::vector<double>{0.0} : parse_list(item.substr(colon + 1), "coefficient");
    if (re.size() != 1 || im.size() != 1) throw InputError("coefficients are 're' or 're:im'");
    out.emplace_back(re[0], im[0]);
  }
  if (out.empty()) throw InputError("no coefficients given");
  return out;
}

class Runner {
 public:
  Runner(const Globals& g, CLI::App* sub) : g_(g), sub_(sub) {
    manifest_.subcommand = sub->get_name();
    manifest_.timestamp = io::utc_timestamp();
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const auto& res = opt->results();
      manifest_.flags[opt->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
    }
    if (g.allow_nonsimple) manifest_.flags["--allow-nonsimple"] = true;
  }

  io::Shape load(const std::string& path) {
    const std::string text = read_file(path);
    manifest_.inputs[path] = io::fnv1a_hex(text);
    io::Shape shape = io::parse_shape_text(text);
    if (auto* p = std::get_if<geom::Polygon>(&shape); p && !p->is_simple()) {
      if (!g_.allow_nonsimple) {
        p->require_simple();  // throws with the defect description
      }
      std::cerr << "warning: polygon is not simple (" << p->validity().defect << "); results carry no geometric guarantee\n";
    }
    return shape;
  }

  geom::Polygon load_polygon(const std::string& path) {
    io::Shape s = load(path);
    if (!std::holds_alternative<geom::Polygon>(s)) throw InputError("'" + path + "' is not a polygon");
    return std::get<geom::Polygon>(std::move(s));
  }

  /// Prints result + manifest; with --echo-check, `reparse` must rebuild an identical document.
  void emit(json result, const std::function<json(const json&)>& reparse = nullptr) {
    if (g_.echo_check) {
      const json back = json::parse(result.dump());
      const json again = reparse ? reparse(back) : back;
      if (again != result) throw ToleranceError("output did not survive a JSON round trip");
      std::cerr << "echo-check: round trip ok\n";
    }
    result["manifest"] = manifest_.to_json();
    std::cout << result.dump(2) << '\n';
  }

  io::RunManifest& manifest() { return manifest_; }
  const Globals& globals() const { return g_; }

 private:
  const Globals& g_;
  CLI::App* sub_;
  io::RunManifest manifest_;
};

json vec_json(const Vec2& v) { return {v.x, v.y}; }
json vec_json(const Vec3& v) { return {v.x, v.y, v.z}; }

// ---- subcommands ----

int cmd_area(Runner& r, const std::string& path) {
  io::Shape shape = r.load(path);
  json out;
  if (const auto* p = std::get_if<geom::Polygon>(&shape)) {
    const auto turn = geom::turning_number(*p);
    out["shape"] = "polygon";
    out["vertices"] = p->size();
    out["simple"] = p->is_simple();
    out["area"] = geom::signed_area(*p);
    out["perimeter"] = geom::perimeter(*p);
    out["turning_number"] = turn.winding;
    out["total_turning_angle"] = turn.total_angle;
    if (p->is_simple()) {
      out["centroid"] = vec_json(moments::first_moments(*p).centroid);
    } else {
      out["defect"] = p->validity().defect;
    }
  } else {
    const auto& ph = std::get<geom::Polyhedron>(shape);
    out["shape"] = "polyhedron";
    out["faces"] = ph.faces().size();
    out["volume"] = ph.volume();
    out["surface_area"] = ph.surface_area();
    out["centroid"] = vec_json(ph.centroid());
    out["area_normal_sum"] = vec_json(geom::area_normal_sum(ph));
  }
  r.emit(out);
  return 0;
}

int cmd_moments(Runner& r, const std::string& path, int max_order, bool with_oracle) {
  const geom::Polygon p = r.load_polygon(path);
  const moments::MomentTable m = moments::moments_from_vertices(p, max_order);
  json out = io::to_json(m);
  double worst = 0.0;
  if (with_oracle) {
    const auto tri = oracle::triangulate(p);
    moments::MomentTable o(max_order);
    const double area = std::abs(geom::signed_area(p));
    for (int k = 0; k <= max_order; ++k) {
      for (int a = 0; a <= k; ++a) {
        o.at(a, k - a) = oracle::monomial_integral(tri, a, k - a);
        worst = std::max(worst, std::abs(o.at(a, k - a) - m.at(a, k - a)) / (area * std::pow(p.diameter(), k)));
      }
    }
    out["oracle"] = io::to_json(o);
    out["oracle"]["max_deviation"] = worst;
    out["oracle"]["deviation_scale"] = "area * diameter^(a+b)";
  }
  r.emit(out, [&](const json& j) {
    json again = io::to_json(io::moment_table_from_json(j));
    if (j.contains("oracle")) {
      again["oracle"] = io::to_json(io::moment_table_from_json(j.at("oracle")));
      again["oracle"]["max_deviation"] = j.at("oracle").at("max_deviation");
      again["oracle"]["deviation_scale"] = j.at("oracle").at("deviation_scale");
    }
    return again;
  });
  if (worst > 1e-10) {
    std::cerr << "error: moments deviate from the triangulation oracle by " << worst << '\n';
    return kExitTolerance;
  }
  return 0;
}

int cmd_fourier(Runner& r, const std::string& path, const std::string& beta_text, bool with_oracle) {
  const io::Shape shape = r.load(path);
  const std::vector<double> b = parse_list(beta_text, "beta");
  xform::FormFactor v;
  json out;
  if (const auto* p = std::get_if<geom::Polygon>(&shape)) {
    if (b.size() != 2) throw InputError("a polygon needs --beta bx,by");
    const Vec2 beta{b[0], b[1]};
    v = xform::polygon_form_factor_unchecked(*p, xform::Wavevector2(beta));
    out = io::to_json(v);
    if (with_oracle) {
      p->require_simple();
      const auto q = oracle::quad_form_factor(*p, beta);
      out["oracle"] = io::to_json(q.value);
      out["oracle_deviation"] = std::abs(q.value - v) / std::abs(geom::signed_area(*p));
    }
  } else {
    if (b.size() != 3) throw InputError("a polyhedron needs --beta bx,by,bz");
    const Vec3 beta{b[0], b[1], b[2]};
    const auto& ph = std::get<geom::Polyhedron>(shape);
    v = xform::polyhedron_form_factor(ph, xform::Wavevector3(beta));
    out = io::to_json(v);
    if (with_oracle) {
      const auto q = oracle::quad_form_factor(ph, beta);
      out["oracle"] = io::to_json(q.value);
      out["oracle_deviation"] = std::abs(q.value - v) / ph.volume();
    }
  }
  out["beta"] = b;
  out["intensity"] = std::norm(v);
  r.emit(out, [](const json& j) {
    json again = j;
    const auto ff = io::form_factor_from_json(j);
    again["re"] = ff.real();
    again["im"] = ff.imag();
    if (j.contains("oracle")) again["oracle"] = io::to_json(io::form_factor_from_json(j.at("oracle")));
    return again;
  });
  return 0;
}

int cmd_davis(Runner& r, const std::string& path, const std::string& coeff_text, bool with_oracle) {
  const geom::Polygon p = r.load_polygon(path);
  const moments::Polynomial h = parse_coeffs(coeff_text);
  if (h.size() > 33) throw InputError("polynomial degree must not exceed 32");
  const auto v = moments::davis_sum(moments::ComplexPolygon(p), h);
  json out = io::to_json(v);
  out["degree"] = h.size() - 1;
  if (with_oracle) {
    if (h.size() > 22) throw InputError("the oracle supports degree <= 21");
    const auto tri = oracle::triangulate(p);
    std::complex<double> ref{0.0, 0.0};
    for (std::size_t k = 2; k < h.size(); ++k) {
      ref += h[k] * static_cast<double>(k * (k - 1)) * oracle::z_power_integral(tri, static_cast<int>(k) - 2);
    }
    ref *= static_cast<double>(tri.orientation);
    out["oracle"] = io::complex_pair(ref);
    out["oracle_deviation"] = std::abs(ref - v) / std::max(std::abs(ref), 1e-300);
  }
  r.emit(out, [](const json& j) {
    json again = j;
    const auto z = io::form_factor_from_json(j);
    again["re"] = z.real();
    again["im"] = z.imag();
    if (j.contains("oracle")) again["oracle"] = io::complex_pair(io::complex_from_pair(j.at("oracle")));
    return again;
  });
  return 0;
}

struct DiffractArgs {
  std::string shape_path;
  double disk = 0.0;
  std::string rect;
  double wavelength = 0.0, distance = 0.0, extent = 0.0;
  int resolution = 512;
  std::string out_path;
  bool log = false;
  std::string radial_path;
};

int cmd_diffract(Runner& r, const DiffractArgs& a) {
  scatter::DiffractionConfig cfg;
  const int sources = (a.disk > 0.0) + !a.rect.empty() + !a.shape_path.empty();
  if (sources != 1) throw InputError("give exactly one aperture: --disk R, --rect a1,a2 or a polygon file");
  if (a.disk > 0.0) {
    cfg.aperture = scatter::DiskAperture{a.disk};
  } else if (!a.rect.empty()) {
    const auto v = parse_list(a.rect, "rect");
    if (v.size() != 2) throw InputError("--rect takes two half-widths a1,a2");
    cfg.aperture = scatter::RectAperture{v[0], v[1]};
  } else {
    cfg.aperture = r.load_polygon(a.shape_path);
  }
  cfg.wavelength = a.wavelength;
  cfg.distance = a.distance;
  cfg.extent = a.extent;
  cfg.resolution = a.resolution;
  cfg.allow_nonsimple = r.globals().allow_nonsimple;

  const bool pgm = a.out_path.size() > 4 && a.out_path.ends_with(".pgm");
  const bool csv = a.out_path.size() > 4 && a.out_path.ends_with(".csv");
  if (!pgm && !csv) throw InputError("--out must name a .csv or .pgm file");

  const scatter::IntensityGrid grid = scatter::render_pattern(cfg);
  for (const auto& w : grid.warnings) std::cerr << "warning: " << w << '\n';
  {
    std::ofstream f(a.out_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + a.out_path + "'");
    if (pgm) {
      scatter::write_pgm(grid, f, a.log ? scatter::ToneMap::Log : scatter::ToneMap::Linear);
    } else {
      scatter::write_csv(grid, f);
    }
  }
  const auto bins = scatter::radial_average(grid);
  if (!a.radial_path.empty()) {
    std::ofstream f(a.radial_path);
    if (!f) throw InputError("cannot write '" + a.radial_path + "'");
    f << json{{"radial_average", io::to_json(bins)}}.dump(2) << '\n';
  }
  const auto rings = scatter::dark_rings(cfg, grid, 2);
  double i_max = 0.0;
  for (double v : grid.values) i_max = std::max(i_max, v);

  json out{{"output", a.out_path},
           {"resolution", grid.resolution},
           {"x_range", {-grid.extent, grid.extent}},
           {"beta_per_length", grid.beta_scale},
           {"max_intensity", i_max},
           {"far_field", cfg.far_field()},
           {"warnings", grid.warnings},
           {"dark_rings_beta", rings}};
  if (const auto* d = std::get_if<scatter::DiskAperture>(&cfg.aperture)) {
    std::vector<double> scaled;
    for (double b : rings) scaled.push_back(b * d->radius);
    out["dark_rings_beta_r"] = scaled;
  }
  {
    std::ofstream f(a.out_path + ".manifest.json");
    json m = r.manifest().to_json();
    m["output_digest"] = io::fnv1a_hex(read_file(a.out_path));
    f << m.dump(2) << '\n';
  }
  r.emit(out);
  return 0;
}

struct PorodArgs {
  std::string shape_path;
  double sphere = 0.0, disk = 0.0;
  double kmin = 0.0, kmax = 0.0;
  int samples = 64, directions = 128;
};

int cmd_porod(Runner& r, const PorodArgs& a) {
  const int sources = (a.sphere > 0.0) + (a.disk > 0.0) + !a.shape_path.empty();
  if (sources != 1) throw InputError("give exactly one shape: --sphere R, --disk R or a shape file");
  scatter::PorodShape shape = scatter::SphereShape{1.0};
  if (a.sphere > 0.0) {
    shape = scatter::SphereShape{a.sphere};
  } else if (a.disk > 0.0) {
    shape = scatter::DiskShape{a.disk};
  } else {
    io::Shape s = r.load(a.shape_path);
    if (auto* p = std::get_if<geom::Polygon>(&s)) {
      p->require_simple();
      shape = std::move(*p);
    } else {
      shape = std::get<geom::Polyhedron>(std::move(s));
    }
  }
  const auto fit = scatter::porod_slope(shape, a.kmin, a.kmax, a.samples, a.directions);
  r.emit(io::to_json(fit), [](const json& j) {
    json again = io::to_json(io::porod_fit_from_json(j));
    return again;
  });
  return 0;
}

int cmd_verify(Runner& r, const std::string& suite) {
  const auto checks = verify::run_suite(suite);
  json list = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && c.passed;
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name << "  metric " << c.metric << " <= "
              << c.tolerance << "  (" << c.seconds << " s)" << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
    list.push_back({{"suite", c.suite},
                    {"name", c.name},
                    {"passed", c.passed},
                    {"metric", std::isfinite(c.metric) ? json(c.metric) : json(nullptr)},
                    {"tolerance", c.tolerance},
                    {"detail", c.detail}});
  }
  r.emit({{"suite", suite}, {"passed", ok}, {"kernel", std::string(simd::isa_name(simd::active_isa()))}, {"checks", list}});
  return ok ? 0 : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyft: analytic Fourier transforms, moments and diffraction of polygons and polyhedra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(io::kToolVersion));
  Globals g;
  app.add_flag("--allow-nonsimple", g.allow_nonsimple, "Evaluate self-intersecting polygons (no guarantees)");
  app.add_flag("--echo-check", g.echo_check, "Round-trip outputs through the JSON parsers")->group("");

  std::string path;
  auto* area = app.add_subcommand("area", "Area, centroid, perimeter and turning number (or volume for polyhedra)");
  area->add_option("shape", path, "Shape JSON file")->required();

  int max_order = 4;
  bool with_oracle = false;
  auto* mom = app.add_subcommand("moments", "Moment table x^a y^b for a + b <= K");
  mom->add_option("shape", path, "Polygon JSON file")->required();
  mom->add_option("--max-order", max_order, "Highest total order K (<= 16)")->check(CLI::Range(0, 16));
  mom->add_flag("--oracle", with_oracle, "Append triangulation values and the largest deviation");

  std::string beta;
  auto* four = app.add_subcommand("fourier", "Form factor at one wavevector");
  four->add_option("shape", path, "Shape JSON file")->required();
  four->add_option("--beta", beta, "bx,by for polygons or bx,by,bz for polyhedra")->required();
  four->add_flag("--oracle", with_oracle, "Also evaluate by brute-force quadrature");

  std::string coeffs;
  auto* dav = app.add_subcommand("davis", "Vertex sum equal to the integral of h''(z) over the polygon");
  dav->add_option("shape", path, "Polygon JSON file")->required();
  dav->add_option("--coeffs", coeffs, "c0,c1,... with each entry re or re:im")->required();
  dav->add_flag("--oracle", with_oracle, "Also integrate h'' exactly over a triangulation");

  DiffractArgs da;
  auto* dif = app.add_subcommand("diffract", "Render a Fraunhofer pattern to CSV or 16-bit PGM");
  dif->add_option("shape", da.shape_path, "Polygon aperture JSON file");
  dif->add_option("--disk", da.disk, "Circular aperture of this radius");
  dif->add_option("--rect", da.rect, "Rectangular aperture with half-widths a1,a2");
  dif->add_option("--wavelength", da.wavelength, "Wavelength")->required();
  dif->add_option("--distance", da.distance, "Aperture to screen distance")->required();
  dif->add_option("--extent", da.extent, "Detector half-width")->required();
  dif->add_option("--res", da.resolution, "Pixels per axis")->check(CLI::Range(1, 16384));
  dif->add_option("--out", da.out_path, "Output grid (.csv or .pgm)")->required();
  dif->add_flag("--log", da.log, "Log tone mapping for PGM output");
  dif->add_option("--radial", da.radial_path, "Also write the radial average as JSON");

  PorodArgs pa;
  auto* por = app.add_subcommand("porod", "Fit the large-k intensity exponent");
  por->add_option("shape", pa.shape_path, "Polygon or polyhedron JSON file");
  por->add_option("--sphere", pa.sphere, "Ball of this radius");
  por->add_option("--disk", pa.disk, "Disk of this radius");
  por->add_option("--kmin", pa.kmin, "Smallest k")->required();
  por->add_option("--kmax", pa.kmax, "Largest k")->required();
  por->add_option("--samples", pa.samples, "Log-spaced fit points (>= 50)");
  por->add_option("--directions", pa.directions, "Orientations averaged for polygons and polyhedra (>= 16)");

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run invariant suites; exit 0 iff all pass");
  ver->add_option("--suite", suite, "geom|xform|moments|identities|oracle|simd|scatter|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    Runner r(g, sub);
    if (sub == area) return cmd_area(r, path);
    if (sub == mom) return cmd_moments(r, path, max_order, with_oracle);
    if (sub == four) return cmd_fourier(r, path, beta, with_oracle);
    if (sub == dav) return cmd_davis(r, path, coeffs, with_oracle);
    if (sub == dif) return cmd_diffract(r, da);
    if (sub == por) return cmd_porod(r, pa);
    if (sub == ver) return cmd_verify(r, suite);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << '\n';
    return kExitRegime;
  } catch (const ToleranceError& e) {
    std::cerr << "tolerance error: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
