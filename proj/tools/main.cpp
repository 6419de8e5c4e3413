#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slopecert/certify.hpp"
#include "slopecert/errors.hpp"
#include "slopecert/farey.hpp"
#include "slopecert/genus_bounds.hpp"
#include "slopecert/json_io.hpp"
#include "slopecert/slope_set.hpp"
#include "slopecert/triangulation.hpp"

namespace {

using namespace slopecert;

struct CacheFlags {
  bool no_cache = false;
  std::string cache_dir;
};

std::optional<std::filesystem::path> resolve_cache(const CacheFlags& c) {
  if (c.no_cache) return std::nullopt;
  if (!c.cache_dir.empty()) return std::filesystem::path(c.cache_dir);
  return default_cache_dir();
}

std::set<SurfaceClass> parse_classes(const std::string& text) {
  if (text.empty() || text == "both")
    return {SurfaceClass::Normal, SurfaceClass::Octagonal};
  std::set<SurfaceClass> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "normal")
      out.insert(SurfaceClass::Normal);
    else if (item == "octagonal")
      out.insert(SurfaceClass::Octagonal);
    else
      throw ParseError("unknown surface class '" + item +
                       "' (expected normal, octagonal, or both)");
  }
  if (out.empty()) throw ParseError("no surface classes selected");
  return out;
}

Int parse_big(const std::string& s, const char* what) {
  std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
  if (s.empty() || i == s.size())
    throw ParseError(std::string("expected an integer for ") + what +
                     ", got '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw ParseError(std::string("expected an integer for ") + what +
                       ", got '" + s + "'");
  return Int(s);
}

std::string join_slopes(const std::vector<Slope>& slopes) {
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (i) out += ", ";
    out += format_slope(slopes[i]);
  }
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_slope_set(std::ostream& os, const char* name, const SlopeSet& s) {
  os << name << " (" << s.slopes.size() << "): " << join_slopes(s.slopes)
     << "\n";
}

/** Inline comma-separated slopes, or a .json slope-set file. */
SlopeSet load_slope_set_arg(const std::string& arg) {
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw Error("cannot open file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return slope_set_from_json(parse_json(buf.str()));
  }
  SlopeSet out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) out.slopes.push_back(parse_slope(item));
  std::sort(out.slopes.begin(), out.slopes.end());
  out.slopes.erase(std::unique(out.slopes.begin(), out.slopes.end()),
                   out.slopes.end());
  return out;
}

bool is_json_path(const std::string& p) {
  return p.size() > 5 && p.substr(p.size() - 5) == ".json";
}

// ---- command implementations (return the process exit code) ----

int run_validate(const std::string& file, bool json) {
  ValidationReport rep = validate(load_triangulation(file));
  if (json) {
    std::cout << canonical_dump(to_json(rep));
  } else {
    std::cout << "orientable: " << yesno(rep.orientable) << "\n";
    std::cout << "vertex classes: " << rep.vertex_count << "\n";
    std::cout << "boundary components: " << rep.boundary_components.size()
              << "\n";
    for (const auto& c : rep.boundary_components) {
      std::cout << "  - euler " << c.euler_characteristic << ", ";
      if (c.genus)
        std::cout << (c.orientable ? "genus " : "crosscap genus ") << *c.genus;
      else
        std::cout << "not a closed surface";
      std::cout << ", " << (c.orientable ? "orientable" : "non-orientable")
                << "\n";
    }
    std::cout << "knot-manifold-shaped: " << yesno(rep.is_knot_manifold_shaped)
              << "\n";
    std::cout << "diagnostics:\n";
    for (const std::string& d : rep.diagnostics)
      std::cout << "  - " << d << "\n";
  }
  return rep.is_knot_manifold_shaped ? 0 : 1;
}

int run_slopes(const std::string& file, const std::string& classes_text,
               const CacheFlags& cache, bool json) {
  Triangulation tri = load_triangulation(file);
  SlopeSetOptions opts;
  opts.classes = parse_classes(classes_text);
  opts.cache_dir = resolve_cache(cache);
  SlopeSet s = boundary_slope_set(tri, opts);
  if (json) {
    std::cout << canonical_dump(to_json(s));
    return 0;
  }
  std::cout << "triangulation digest: " << content_digest(tri) << "\n";
  std::cout << "classes covered:";
  for (SurfaceClass c : s.classes_covered) std::cout << " " << to_string(c);
  std::cout << "\n";
  std::cout << "slopes (" << s.slopes.size() << "):\n";
  for (const Slope& x : s.slopes) {
    std::cout << "  " << format_slope(x) << "  [";
    const auto& ids = s.provenance.at(format_slope(x));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << ids[i];
    }
    std::cout << "]\n";
  }
  return 0;
}

int run_farey_dist(const std::string& xs, const std::string& ys, bool json) {
  Slope x = parse_slope(xs), y = parse_slope(ys);
  long long d = distance(x, y);
  if (json) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["x"] = to_json(x);
    j["y"] = to_json(y);
    j["distance"] = d;
    std::cout << canonical_dump(j);
  } else {
    std::cout << d << "\n";
  }
  return 0;
}

void print_certification(std::ostream& os, const CertificationReport& r) {
  os << "verdict: "
     << (r.sufficiently_complicated ? "sufficiently complicated"
                                    : "not sufficiently complicated")
     << "\n";
  os << "min distance: " << r.min_distance << "\n";
  os << "witness: " << format_slope(r.witness_pair.first) << " vs "
     << format_slope(r.witness_pair.second) << "\n";
  print_slope_set(os, "delta X", r.delta_x);
  print_slope_set(os, "delta Y", r.delta_y);
  print_slope_set(os, "pulled back", r.pulled_back);
  os << "gluing: " << format_matrix(r.gluing) << "\n";
  if (r.sufficiently_complicated)
    os << "consequence: " << r.theorem_consequence << "\n";
  os << "caveats:\n";
  for (const std::string& c : r.coverage_caveats) os << "  - " << c << "\n";
  os << "input digests:\n";
  for (const auto& [k, v] : r.inputs_digest)
    os << "  " << k << ": " << v << "\n";
}

int run_certify(const std::string& x_path, const std::string& y_path,
                const std::string& matrix_text,
                const std::string& classes_text, const CacheFlags& cache,
                bool json) {
  GluingMatrix phi = parse_matrix(matrix_text);
  CertificationReport rep;
  bool xj = is_json_path(x_path), yj = is_json_path(y_path);
  if (xj != yj)
    throw ParseError(
        "certify inputs must both be triangulation files or both be "
        "slope-set .json files");
  if (xj) {
    rep = certify_slope_sets(load_slope_set_arg(x_path),
                             load_slope_set_arg(y_path), phi);
  } else {
    CertifyOptions opts;
    opts.classes = parse_classes(classes_text);
    opts.cache_dir = resolve_cache(cache);
    rep = certify(load_triangulation(x_path), load_triangulation(y_path), phi,
                  opts);
  }
  if (json)
    std::cout << canonical_dump(to_json(rep));
  else
    print_certification(std::cout, rep);
  return 0;
}

int run_twist_scan(const std::string& dx_arg, const std::string& dy_arg,
                   const std::string& base_text, const std::string& twist_text,
                   const std::string& range_text, bool json) {
  SlopeSet dx = load_slope_set_arg(dx_arg);
  SlopeSet dy = load_slope_set_arg(dy_arg);
  GluingMatrix base = parse_matrix(base_text);
  Slope twist = parse_slope(twist_text);
  std::size_t dots = range_text.find("..");
  if (dots == std::string::npos)
    throw ParseError("range must be written LO..HI, e.g. -50..50");
  Int lo = parse_big(range_text.substr(0, dots), "range low end");
  Int hi = parse_big(range_text.substr(dots + 2), "range high end");
  if (lo > hi) throw ParseError("twist range is empty: " + range_text);

  TwistScanResult res = twist_scan(dx, dy, base, twist, lo, hi);
  if (json) {
    std::cout << canonical_dump(to_json(res));
    return 0;
  }
  std::cout << "twist slope: " << format_slope(res.twist_slope) << "\n";
  std::cout << "base: " << format_matrix(res.base_matrix) << "\n";
  std::cout << "range: " << res.range_lo << " .. " << res.range_hi << "\n";
  for (const TwistScanRow& row : res.rows)
    std::cout << "  n=" << row.n << ": min distance " << row.min_distance
              << ", " << (row.pass ? "pass" : "FAIL") << "\n";
  std::cout << "failures (" << res.failures.size() << "):";
  for (const Int& n : res.failures) std::cout << " " << n;
  std::cout << "\n";
  std::cout << "all large |n| pass: " << yesno(res.all_large_n_pass) << "\n";
  return 0;
}

int run_genus_bounds(const std::string& gx, const std::string& gy,
                     const std::string& gf, const std::string& hx,
                     const std::string& hy, const std::string& tx,
                     const std::string& ty, const std::string& chi,
                     bool closed, bool meets_all, bool json) {
  GenusInputs in;
  in.g_x = parse_big(gx, "--gx");
  in.g_y = parse_big(gy, "--gy");
  in.g_f = parse_big(gf, "--gf");
  if (!hx.empty()) in.h_x = parse_big(hx, "--hx");
  if (!hy.empty()) in.h_y = parse_big(hy, "--hy");
  if (!tx.empty()) in.t_x = parse_big(tx, "--tx");
  if (!ty.empty()) in.t_y = parse_big(ty, "--ty");
  if (!chi.empty()) in.chi = parse_big(chi, "--chi");

  BoundsReport rep = lower_bounds(in, closed, meets_all);
  if (json) {
    std::cout << canonical_dump(to_json(rep));
    return 0;
  }
  std::cout << "upper bound (amalgamation): " << rep.upper_amalgamation.value
            << "\n";
  if (rep.upper_amalgamation.negative_flagged)
    std::cout << "  warning: negative upper bound; inputs are inconsistent "
                 "with a gluing surface of this genus\n";
  if (rep.lower_genus)
    std::cout << "lower bound (genus formula): " << *rep.lower_genus << "\n";
  if (rep.lower_handle)
    std::cout << "lower bound (handle average): " << *rep.lower_handle << "\n";
  if (rep.lower_tunnel)
    std::cout << "lower bound (tunnel average): " << *rep.lower_tunnel << "\n";
  if (rep.chi_present) {
    std::cout << "handle upper bound from chi: " << rep.from_chi.handle_upper
              << "\n";
    if (rep.from_chi.tunnel_upper)
      std::cout << "tunnel upper bound from chi: "
                << *rep.from_chi.tunnel_upper << "\n";
  }
  if (rep.johannson_reference)
    std::cout << "reference (one-fifth formula): " << *rep.johannson_reference
              << "\n";
  std::cout << "consistency: " << (rep.consistency ? "ok" : "VIOLATED")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "slopecert: exact boundary-slope certificates for torus-boundary "
      "triangulations"};
  app.require_subcommand(1);

  // validate
  std::string v_file;
  bool v_json = false;
  CLI::App* c_validate =
      app.add_subcommand("validate", "check a triangulation file");
  c_validate->add_option("file", v_file, "triangulation file")->required();
  c_validate->add_flag("--json", v_json, "JSON output");

  // slopes
  std::string s_file, s_classes = "both";
  CacheFlags s_cache;
  bool s_json = false;
  CLI::App* c_slopes =
      app.add_subcommand("slopes", "enumerate the boundary-slope set");
  c_slopes->add_option("file", s_file, "triangulation file")->required();
  c_slopes->add_option("--classes", s_classes,
                       "surface classes: normal, octagonal, or both");
  c_slopes->add_flag("--no-cache", s_cache.no_cache, "disable the disk cache");
  c_slopes->add_option("--cache-dir", s_cache.cache_dir, "cache directory");
  c_slopes->add_flag("--json", s_json, "JSON output");

  // farey-dist
  std::string f_x, f_y;
  bool f_json = false;
  CLI::App* c_farey =
      app.add_subcommand("farey-dist", "exact Farey distance of two slopes");
  c_farey->add_option("x", f_x, "first slope p/q")->required();
  c_farey->add_option("y", f_y, "second slope p/q")->required();
  c_farey->add_flag("--json", f_json, "JSON output");

  // certify
  std::string ce_x, ce_y, ce_matrix, ce_classes = "both";
  CacheFlags ce_cache;
  bool ce_json = false;
  CLI::App* c_certify = app.add_subcommand(
      "certify", "certify a gluing as sufficiently complicated");
  c_certify->add_option("x", ce_x, "triangulation or slope-set .json for X")
      ->required();
  c_certify->add_option("y", ce_y, "triangulation or slope-set .json for Y")
      ->required();
  c_certify->add_option("--gluing", ce_matrix, "gluing matrix a,b;c,d")
      ->required();
  c_certify->add_option("--classes", ce_classes,
                        "surface classes: normal, octagonal, or both");
  c_certify->add_flag("--no-cache", ce_cache.no_cache,
                      "disable the disk cache");
  c_certify->add_option("--cache-dir", ce_cache.cache_dir, "cache directory");
  c_certify->add_flag("--json", ce_json, "JSON output");

  // twist-scan
  std::string t_dx, t_dy, t_base = "1,0;0,1", t_twist, t_range;
  bool t_json = false;
  CLI::App* c_twist = app.add_subcommand(
      "twist-scan", "scan Dehn-twist powers of a base gluing");
  c_twist->add_option("--dx", t_dx,
                      "slope set for X: inline p/q,p/q,... or .json file")
      ->required();
  c_twist->add_option("--dy", t_dy,
                      "slope set for Y: inline p/q,p/q,... or .json file")
      ->required();
  c_twist->add_option("--base", t_base, "base matrix a,b;c,d (default id)");
  c_twist->add_option("--twist", t_twist, "twist slope p/q")->required();
  c_twist->add_option("--range", t_range, "power range LO..HI")->required();
  c_twist->add_flag("--json", t_json, "JSON output");

  // genus-bounds
  std::string g_gx, g_gy, g_gf, g_hx, g_hy, g_tx, g_ty, g_chi;
  bool g_closed = false, g_meets = false, g_json = false;
  CLI::App* c_genus = app.add_subcommand(
      "genus-bounds", "genus/handle/tunnel bound calculators");
  c_genus->add_option("--gx", g_gx, "Heegaard genus of X")->required();
  c_genus->add_option("--gy", g_gy, "Heegaard genus of Y")->required();
  c_genus->add_option("--gf", g_gf, "genus of the gluing surface")->required();
  c_genus->add_option("--hx", g_hx, "handle number of X");
  c_genus->add_option("--hy", g_hy, "handle number of Y");
  c_genus->add_option("--tx", g_tx, "tunnel number of X");
  c_genus->add_option("--ty", g_ty, "tunnel number of Y");
  c_genus->add_option("--chi", g_chi,
                      "Euler characteristic of a splitting surface");
  c_genus->add_flag("--closed", g_closed,
                    "assert the glued manifold is closed and the gluing "
                    "surface connected (gates the tunnel bound)");
  c_genus->add_flag("--meets-all", g_meets,
                    "assert the splitting surface meets every boundary "
                    "component (gates the chi tunnel bound)");
  c_genus->add_flag("--json", g_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  try {
    if (app.got_subcommand(c_validate)) return run_validate(v_file, v_json);
    if (app.got_subcommand(c_slopes))
      return run_slopes(s_file, s_classes, s_cache, s_json);
    if (app.got_subcommand(c_farey)) return run_farey_dist(f_x, f_y, f_json);
    if (app.got_subcommand(c_certify))
      return run_certify(ce_x, ce_y, ce_matrix, ce_classes, ce_cache, ce_json);
    if (app.got_subcommand(c_twist))
      return run_twist_scan(t_dx, t_dy, t_base, t_twist, t_range, t_json);
    if (app.got_subcommand(c_genus))
      return run_genus_bounds(g_gx, g_gy, g_gf, g_hx, g_hy, g_tx, g_ty, g_chi,
                              g_closed, g_meets, g_json);
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error (resource limit): " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
