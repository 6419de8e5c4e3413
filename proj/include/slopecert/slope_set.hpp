#ifndef SLOPECERT_SLOPE_SET_HPP
#define SLOPECERT_SLOPE_SET_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slopecert/enumerate.hpp"
#include "slopecert/farey.hpp"
#include "slopecert/normal_coords.hpp"
#include "slopecert/triangulation.hpp"

namespace slopecert {

/** A finite set of boundary slopes with witness provenance.  Realizes the
 *  slope set of all enumerated vertex surfaces of the covered classes. */
struct SlopeSet {
  std::vector<Slope> slopes;  // sorted, deduplicated
  /** format_slope(s) -> identifiers of witnessing vectors, e.g.
   *  "normal#3" = index 3 in the canonical normal enumeration order. */
  std::map<std::string, std::vector<std::string>> provenance;
  std::set<SurfaceClass> classes_covered;
};

struct SlopeSetOptions {
  std::set<SurfaceClass> classes = {SurfaceClass::Normal,
                                    SurfaceClass::Octagonal};
  /** Directory for the enumeration cache; no caching when absent. */
  std::optional<std::filesystem::path> cache_dir;
  std::size_t max_intermediate_rays = 1'000'000;
  bool prune_during_pivot = true;
};

/** The boundary-slope set of a knot-manifold-shaped triangulation: the
 *  slopes of all enumerated vertex surfaces in the requested classes.
 *  Throws NotAKnotManifoldError when the shape check fails; propagates
 *  ResourceLimitError from enumeration. */
SlopeSet boundary_slope_set(const Triangulation& tri,
                            const SlopeSetOptions& options = {});

/** Resolve the cache directory: $SLOPECERT_CACHE_DIR if set, otherwise
 *  $HOME/.cache/slopecert, otherwise ./.slopecert-cache. */
std::filesystem::path default_cache_dir();

/** Enumerate with a disk cache: results keyed by the content digest of the
 *  canonical triangulation plus mode, stored as versioned canonical JSON.
 *  Unreadable or version-mismatched entries are recomputed and rewritten.
 *  Errors (including resource limits) are never cached. */
std::vector<NormalCoordinateVector> cached_enumerate(
    const Triangulation& tri, const EnumerationOptions& options,
    const std::optional<std::filesystem::path>& cache_dir);

}  // namespace slopecert

#endif  // SLOPECERT_SLOPE_SET_HPP
