#ifndef SLOPECERT_SURFACE_HPP
#define SLOPECERT_SURFACE_HPP

#include <optional>
#include <string>

#include "slopecert/boundary.hpp"
#include "slopecert/farey.hpp"
#include "slopecert/normal_coords.hpp"
#include "slopecert/triangulation.hpp"

namespace slopecert {

/** Invariants of the embedded surface determined by a coordinate vector. */
struct SurfaceSummary {
  Int euler_characteristic;
  bool orientable = true;
  long long connected_components = 0;
  long long boundary_curve_count = 0;
  /** The common slope of the boundary curves in the triangulation's
   *  boundary basis.  Absent when the surface is closed, when the total
   *  boundary class is zero (null-homologous, e.g. vertex links), or when
   *  the triangulation is not knot-manifold-shaped. */
  std::optional<Slope> slope;
  /** Why `slope` is absent: "closed", "null-homologous", or
   *  "no-boundary-basis".  Empty when a slope is present. */
  std::string slope_absent_reason;
  SurfaceClass surface_class = SurfaceClass::Normal;
};

/** Build the explicit cell complex of the surface encoded by v (triangle /
 *  quadrilateral / octagon pieces glued along matched normal arcs) and
 *  read off Euler characteristic, orientability, component count, and the
 *  boundary curves with their common slope.
 *
 *  Requires v admissible (support rule) and satisfying the matching
 *  equations; throws InadmissibleVectorError otherwise. */
SurfaceSummary surface_properties(const Triangulation& tri,
                                  const NormalCoordinateVector& v);

/** As above, reusing a precomputed boundary basis (pass nullptr when the
 *  triangulation has no basis, e.g. not knot-manifold-shaped). */
SurfaceSummary surface_properties(const Triangulation& tri,
                                  const NormalCoordinateVector& v,
                                  const BoundaryBasis* basis);

}  // namespace slopecert

#endif  // SLOPECERT_SURFACE_HPP
