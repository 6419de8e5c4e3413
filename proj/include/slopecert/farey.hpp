#ifndef SLOPECERT_FAREY_HPP
#define SLOPECERT_FAREY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "slopecert/numeric.hpp"

namespace slopecert {

/** An unoriented essential simple closed curve on the torus, encoded as a
 *  primitive integer pair in normal form: q > 0, or (q = 0 and p = 1). */
struct Slope {
  Int p;
  Int q;
};

/** Normalize (p, q) to slope normal form.
 *  Throws std::invalid_argument on (0, 0). */
Slope make_slope(Int p, Int q);

bool operator==(const Slope& a, const Slope& b);
bool operator!=(const Slope& a, const Slope& b);
/** Lexicographic order on (p, q); used for canonical slope-set order. */
bool operator<(const Slope& a, const Slope& b);

/** Render as "p/q" (e.g. "1/0", "-3/7"). */
std::string format_slope(const Slope& s);

/** Parse "p/q"; throws ParseError on malformed text or (0, 0). */
Slope parse_slope(std::string_view text);

/** An element of GL(2, Z): a boundary-torus gluing (or basis change)
 *  written in the two triangulations' boundary bases.  |det| = 1. */
struct GluingMatrix {
  Mat2 m;  // acts on slope column vectors (p, q)^T
};

/** Build a gluing matrix [[a, b], [c, d]]; throws InvalidMatrixError
 *  unless |ad - bc| = 1. */
GluingMatrix make_gluing_matrix(const Int& a, const Int& b, const Int& c,
                                const Int& d);

Int determinant(const GluingMatrix& m);
GluingMatrix inverse(const GluingMatrix& m);
/** Matrix product a*b ("apply b first, then a"). */
GluingMatrix compose(const GluingMatrix& a, const GluingMatrix& b);
bool operator==(const GluingMatrix& a, const GluingMatrix& b);

/** Render as "a,b;c,d". */
std::string format_matrix(const GluingMatrix& m);

/** Parse "a,b;c,d"; throws ParseError on malformed text and
 *  InvalidMatrixError when |det| != 1. */
GluingMatrix parse_matrix(std::string_view text);

/** Geometric intersection number |p_x q_y - q_x p_y|.  Symmetric, and zero
 *  exactly when the normalized slopes coincide. */
Int intersection_number(const Slope& x, const Slope& y);

/** Exact Farey-graph distance between two slopes (edges join slopes of
 *  intersection number one).  Computed by carrying x to (1,0) with an
 *  SL(2,Z) map and descending the continued-fraction parents of the image
 *  of y; exact integer arithmetic throughout. */
long long distance(const Slope& x, const Slope& y);

/** Minimizing pair realizing the distance between two slope sets. */
struct SetDistanceResult {
  long long distance;
  Slope witness_a;
  Slope witness_b;
};

/** min over (a, b) in A x B of distance(a, b), with one minimizing pair as
 *  a witness.  Throws EmptySetError if either set is empty. */
SetDistanceResult set_distance(const std::vector<Slope>& a,
                               const std::vector<Slope>& b);

/** Matrix-vector action on a slope, renormalized to normal form. */
Slope apply_gluing(const GluingMatrix& m, const Slope& s);

/** n-th power of the (right-handed) Dehn twist about a slope (p, q):
 *  the conjugate of [[1,1],[0,1]] by any unimodular matrix carrying (1,0)
 *  to (p, q), which works out to I + n*[[-pq, p^2], [-q^2, pq]]
 *  independently of the conjugator.  Fixes (p, q); determinant 1. */
GluingMatrix dehn_twist(const Slope& about, const Int& n);

}  // namespace slopecert

#endif  // SLOPECERT_FAREY_HPP
