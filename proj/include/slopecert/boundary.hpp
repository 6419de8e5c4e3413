#ifndef SLOPECERT_BOUNDARY_HPP
#define SLOPECERT_BOUNDARY_HPP

#include <array>
#include <optional>
#include <vector>

#include "slopecert/numeric.hpp"
#include "slopecert/triangulation.hpp"

namespace slopecert {

/** The boundary surface assembled from the unglued faces, with a half-edge
 *  structure on top once the triangles are consistently oriented.
 *
 *  Triangle corners are stored sorted ascending by vertex label.  Side s of
 *  a triangle joins corner slots s and (s+1)%3; half-edge h = 3*tri + s is
 *  that side directed by the triangle's orientation (+1: slot s -> s+1).
 */
struct BoundarySurface {
  struct Tri {
    int tet = 0;
    int face = 0;
    std::array<int, 3> corners{};  // vertex labels, ascending
    int orient = 1;                // +1 reference cycle, -1 reversed
    int component = 0;
  };

  std::vector<Tri> triangles;  // sorted by (tet, face)

  /** Per half-edge: the partner half-edge (3*tri'+s'), or -1 when the side
   *  paired with itself (degenerate, non-surface identification). */
  std::vector<int> twin;
  /** For side s of triangle i, the vertex label of the partner side's end
   *  corresponding to corner slot s (the lower slot of side s).  Tracks the
   *  edge-pairing vertex correspondence. */
  std::vector<int> side_image_of_low_corner;

  std::vector<int> edge_class_of_side;  // per half-edge id
  int edge_class_count = 0;
  std::vector<int> canonical_half_edge;  // per edge class: directed side id

  std::vector<int> vertex_class_of_corner;  // per (3*tri + slot)
  int vertex_class_count = 0;

  int component_count = 0;
  std::vector<BoundaryComponentSummary> components;

  /** False when some side pairs with itself or a pairing walk fails to
   *  close; the surface fields above are then partial. */
  bool closed_surface_ok = true;
  /** All components admitted a consistent orientation. */
  bool orientable = true;

  // --- half-edge navigation (valid when closed_surface_ok) ---
  int next(int h) const;       // next directed side within the triangle
  int tail_slot(int h) const;  // corner slot at the directed side's tail
  int head_slot(int h) const;
  int tail_vertex_class(int h) const;
  int head_vertex_class(int h) const;
  /** Rotation around the tail vertex: sigma = next o twin. */
  int rotate(int h) const;
};

/** Assemble the boundary surface of a triangulation (empty when closed). */
BoundarySurface boundary_surface(const Triangulation& tri);

/** Homology basis (mu, lambda) on the single boundary torus, built from a
 *  canonical spanning-tree / cotree decomposition.  Deterministic: the
 *  same canonical triangulation always yields the same basis. */
struct BoundaryBasis {
  BoundarySurface surface;

  /** Signed edge-class coefficient vectors of the two basis 1-cycles. */
  IntVector mu;
  IntVector lambda;

  /** The cycles as closed directed half-edge walks (used for the push-off
   *  intersection computation and for diagnostics). */
  std::vector<int> mu_walk;
  std::vector<int> lambda_walk;

  /** Algebraic intersection number I(mu, lambda); always +1 or -1. */
  Int intersection;
};

/** Compute the basis; throws NotAKnotManifoldError unless
 *  validate(tri).is_knot_manifold_shaped. */
BoundaryBasis boundary_basis(const Triangulation& tri);

/** Signed intersection of a closed directed half-edge walk, pushed off to
 *  one side, with a 1-cycle given by edge-class coefficients.  Exposed for
 *  property tests of the intersection pairing. */
Int pushoff_intersection(const BoundarySurface& surf,
                         const std::vector<int>& walk,
                         const IntVector& cycle_coeffs);

/** Edge-class coefficient vector of a closed directed half-edge walk. */
IntVector walk_coefficients(const BoundarySurface& surf,
                            const std::vector<int>& walk);

}  // namespace slopecert

#endif  // SLOPECERT_BOUNDARY_HPP
