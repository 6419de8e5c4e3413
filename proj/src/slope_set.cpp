#include "slopecert/slope_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <utility>

#include "slopecert/boundary.hpp"
#include "slopecert/digest.hpp"
#include "slopecert/errors.hpp"
#include "slopecert/json_io.hpp"
#include "slopecert/surface.hpp"

namespace slopecert {

namespace {

constexpr int kCacheFormatVersion = 1;

std::string cache_key(const Triangulation& canonical, PieceMode mode) {
  std::ostringstream in;
  in << serialize(canonical) << "mode: " << to_string(mode) << "\n"
     << "format: " << kCacheFormatVersion << "\n";
  return sha256_hex(in.str());
}

/** Parse a cache entry; returns false (leaving out untouched) when the
 *  entry is unusable for any reason. */
bool read_cache_entry(const std::filesystem::path& file,
                      const Triangulation& tri, PieceMode mode,
                      std::vector<NormalCoordinateVector>& out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    nlohmann::json j = parse_json(buf.str());
    if (!j.is_object()) return false;
    if (j.value("format_version", -1) != kCacheFormatVersion) return false;
    if (j.value("mode", std::string()) != to_string(mode)) return false;
    const auto& vecs = j.at("vectors");
    if (!vecs.is_array()) return false;
    const Eigen::Index dim =
        static_cast<Eigen::Index>(tri.tet_count) * coords_per_tet(mode);
    std::vector<NormalCoordinateVector> parsed;
    for (const auto& row : vecs) {
      if (!row.is_array() ||
          static_cast<Eigen::Index>(row.size()) != dim)
        return false;
      NormalCoordinateVector v;
      v.mode = mode;
      v.coords = IntVector(dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& cell = row[static_cast<std::size_t>(i)];
        if (!cell.is_string()) return false;
        v.coords(i) = Int(cell.get<std::string>());
      }
      parsed.push_back(std::move(v));
    }
    out = std::move(parsed);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void write_cache_entry(const std::filesystem::path& file, PieceMode mode,
                       const std::vector<NormalCoordinateVector>& vecs) {
  nlohmann::json j;
  j["format_version"] = kCacheFormatVersion;
  j["mode"] = to_string(mode);
  nlohmann::json rows = nlohmann::json::array();
  for (const NormalCoordinateVector& v : vecs) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.coords.size(); ++i)
      row.push_back(v.coords(i).str());
    rows.push_back(std::move(row));
  }
  j["vectors"] = std::move(rows);

  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::random_device rd;
  std::filesystem::path tmp =
      file.string() + ".tmp-" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // caching is best-effort; results are already in hand
    out << canonical_dump(j);
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("SLOPECERT_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "slopecert";
  return std::filesystem::path(".slopecert-cache");
}

std::vector<NormalCoordinateVector> cached_enumerate(
    const Triangulation& tri, const EnumerationOptions& options,
    const std::optional<std::filesystem::path>& cache_dir) {
  Triangulation canon = canonical_form(tri);
  std::optional<std::filesystem::path> file;
  if (cache_dir)
    file = *cache_dir / (cache_key(canon, options.mode) + ".json");

  if (file) {
    std::vector<NormalCoordinateVector> cached;
    if (read_cache_entry(*file, canon, options.mode, cached)) return cached;
  }
  std::vector<NormalCoordinateVector> vecs =
      enumerate_vertex_surfaces(canon, options);
  if (file) write_cache_entry(*file, options.mode, vecs);
  return vecs;
}

SlopeSet boundary_slope_set(const Triangulation& tri,
                            const SlopeSetOptions& options) {
  Triangulation canon = canonical_form(tri);
  ValidationReport rep = validate(canon);
  if (!rep.is_knot_manifold_shaped) {
    std::string why = "boundary slopes require a knot-manifold-shaped "
                      "triangulation:";
    for (const std::string& s : rep.diagnostics)
      if (s != "not knot-manifold-shaped") why += " [" + s + "]";
    throw NotAKnotManifoldError(why);
  }
  BoundaryBasis basis = boundary_basis(canon);

  SlopeSet out;
  out.classes_covered = options.classes;
  for (SurfaceClass cls : options.classes) {
    EnumerationOptions eo;
    eo.mode = (cls == SurfaceClass::Normal) ? PieceMode::Normal
                                            : PieceMode::Octagonal;
    eo.max_intermediate_rays = options.max_intermediate_rays;
    eo.prune_during_pivot = options.prune_during_pivot;
    std::vector<NormalCoordinateVector> vecs =
        cached_enumerate(canon, eo, options.cache_dir);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      SurfaceSummary sum = surface_properties(canon, vecs[i], &basis);
      if (!sum.slope) continue;
      out.slopes.push_back(*sum.slope);
      out.provenance[format_slope(*sum.slope)].push_back(
          to_string(cls) + "#" + std::to_string(i));
    }
  }
  std::sort(out.slopes.begin(), out.slopes.end());
  out.slopes.erase(std::unique(out.slopes.begin(), out.slopes.end()),
                   out.slopes.end());
  return out;
}

}  // namespace slopecert
