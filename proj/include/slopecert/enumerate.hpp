#ifndef SLOPECERT_ENUMERATE_HPP
#define SLOPECERT_ENUMERATE_HPP

#include <cstddef>
#include <vector>

#include "slopecert/normal_coords.hpp"
#include "slopecert/triangulation.hpp"

namespace slopecert {

struct EnumerationOptions {
  PieceMode mode = PieceMode::Normal;
  /** Hard cap on the ray count at any stage; exceeding it raises
   *  ResourceLimitError (never a silent truncation). */
  std::size_t max_intermediate_rays = 1'000'000;
  /** Drop rays with inadmissible support during pivoting.  A pure
   *  optimization: the final result must not depend on it (the admissible
   *  cone faces' extreme rays survive either way; the end filter is always
   *  applied). */
  bool prune_during_pivot = true;
};

/** Enumerate the admissible vertex rays of the solution cone
 *  {x >= 0, matching equations} by the incremental double-description
 *  method over exact integers: start from the coordinate rays, intersect
 *  with one matching hyperplane at a time, combining adjacent positive/
 *  negative ray pairs (combinatorial adjacency test on zero-coordinate
 *  sets) into gcd-reduced integer rays.
 *
 *  Returns the admissible extreme rays, each scaled to its smallest
 *  integer vector, canonically sorted.  In Octagonal mode only vectors
 *  with exactly one octagonal piece are returned (pure normal vectors
 *  belong to Normal mode).
 *
 *  Throws ResourceLimitError when the cap is exceeded. */
std::vector<NormalCoordinateVector> enumerate_vertex_surfaces(
    const Triangulation& tri, const EnumerationOptions& options = {});

}  // namespace slopecert

#endif  // SLOPECERT_ENUMERATE_HPP
