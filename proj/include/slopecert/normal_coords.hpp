#ifndef SLOPECERT_NORMAL_COORDS_HPP
#define SLOPECERT_NORMAL_COORDS_HPP

#include <array>
#include <string>

#include "slopecert/numeric.hpp"
#include "slopecert/triangulation.hpp"

namespace slopecert {

/** Coordinate system for surface vectors.
 *  Normal:    7 coordinates per tetrahedron (4 triangles T0..T3, then 3
 *             quadrilaterals Q0..Q2).
 *  Octagonal: 10 per tetrahedron (adds 3 octagons O0..O2).
 *  Type i in {0,1,2} names the vertex pairing: 0 = {01|23}, 1 = {02|13},
 *  2 = {03|12}; quads and octagons of type i separate the same pairs. */
enum class PieceMode { Normal, Octagonal };

/** Surface class labels used in slope-set provenance and reports. */
enum class SurfaceClass { Normal, Octagonal };

std::string to_string(PieceMode mode);
std::string to_string(SurfaceClass c);

inline int coords_per_tet(PieceMode mode) {
  return mode == PieceMode::Normal ? 7 : 10;
}

inline int tri_index(int tet, int v, PieceMode mode) {
  return tet * coords_per_tet(mode) + v;
}
inline int quad_index(int tet, int type, PieceMode mode) {
  return tet * coords_per_tet(mode) + 4 + type;
}
inline int oct_index(int tet, int type) {
  return tet * 10 + 7 + type;
}

/** The pairing type whose pairs contain {u, v}: 0 for {0,1}/{2,3}, 1 for
 *  {0,2}/{1,3}, 2 for {0,3}/{1,2}. */
int pair_type(int u, int v);

/** The two pairs of pairing type t, each sorted, pair containing vertex 0
 *  first. */
std::array<std::array<int, 2>, 2> pairs_of_type(int type);

/** A (not-necessarily-normalized) surface coordinate vector. */
struct NormalCoordinateVector {
  PieceMode mode = PieceMode::Normal;
  IntVector coords;
};

bool operator==(const NormalCoordinateVector& a,
                const NormalCoordinateVector& b);

/** Support admissibility: all coordinates nonnegative, correct length, and
 *  per tetrahedron at most one nonzero type among the quadrilaterals and
 *  octagons (two distinct such types in one tetrahedron cannot be realized
 *  disjointly).  This is the predicate surface reconstruction needs. */
bool is_admissible(const Triangulation& tri, const NormalCoordinateVector& v);

/** Almost-normal vertex-vector admissibility used by octagonal-mode
 *  enumeration: support admissibility plus "the octagon coordinates sum to
 *  exactly 1" (one octagonal piece in the whole surface).  In Normal mode
 *  this coincides with is_admissible. */
bool is_enumeration_admissible(const Triangulation& tri,
                               const NormalCoordinateVector& v);

/** Number of normal arcs cutting off corner v on face (tet, face), counted
 *  from a coordinate vector: the T_v copies, the quadrilateral copies of
 *  the type separating {v, face} from the other two face corners, and (in
 *  Octagonal mode) the octagon copies whose pairing puts v with one of the
 *  other face corners. */
Int arc_count(const Triangulation& tri, const NormalCoordinateVector& v,
              int tet, int face, int corner);

/** Matching equations: 3 rows per face gluing (one per normal-arc type on
 *  the shared face), each equating the two sides' arc counts.  Columns in
 *  coordinate order.  Exactly the kernel constraints of the solution cone. */
IntMatrix matching_equations(const Triangulation& tri, PieceMode mode);

/** Whether v satisfies all matching equations. */
bool satisfies_matching(const Triangulation& tri,
                        const NormalCoordinateVector& v);

/** The vertex-linking vector of the triangulation's single vertex class
 *  in Normal mode for one-vertex triangulations (all triangle coordinates
 *  of the corners in the class set to 1); more generally, the union of
 *  all vertex links. */
NormalCoordinateVector vertex_link_vector(const Triangulation& tri,
                                          PieceMode mode = PieceMode::Normal);

}  // namespace slopecert

#endif  // SLOPECERT_NORMAL_COORDS_HPP
