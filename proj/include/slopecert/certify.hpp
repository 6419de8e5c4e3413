#ifndef SLOPECERT_CERTIFY_HPP
#define SLOPECERT_CERTIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "slopecert/farey.hpp"
#include "slopecert/slope_set.hpp"
#include "slopecert/triangulation.hpp"

namespace slopecert {

/** Evidence and verdict for the sufficiently-complicated test: the gluing
 *  is accepted when the Farey distance between the boundary-slope set of X
 *  and the pullback of the boundary-slope set of Y is at least two. */
struct CertificationReport {
  SlopeSet delta_x;
  SlopeSet delta_y;
  /** phi^{-1}(delta_y), written in X's boundary basis. */
  SlopeSet pulled_back;
  long long min_distance = 0;
  /** A minimizing pair: (slope of delta_x, slope of pulled_back). */
  std::pair<Slope, Slope> witness_pair;
  bool sufficiently_complicated = false;
  /** Present exactly when the verdict is true. */
  std::string theorem_consequence;
  /** Always includes the surface-class coverage caveat (boundary-band
   *  almost-normal surfaces are not enumerated) and the combinatorial-
   *  hypothesis caveat. */
  std::vector<std::string> coverage_caveats;
  /** "x"/"y": triangulation or slope-set content digests; "gluing": digest
   *  of the matrix text. */
  std::map<std::string, std::string> inputs_digest;
  GluingMatrix gluing;
};

struct CertifyOptions {
  std::set<SurfaceClass> classes = {SurfaceClass::Normal,
                                    SurfaceClass::Octagonal};
  std::optional<std::filesystem::path> cache_dir;
  std::size_t max_intermediate_rays = 1'000'000;
};

/** Full pipeline: validate both triangulations, enumerate both slope
 *  sets, pull delta_y back through phi, and decide the verdict.
 *  Throws NotAKnotManifoldError (either side), EmptyDeltaError when an
 *  enumerated slope set is empty, and propagates ResourceLimitError. */
CertificationReport certify(const Triangulation& tri_x,
                            const Triangulation& tri_y,
                            const GluingMatrix& phi,
                            const CertifyOptions& options = {});

/** Distance stage only, on precomputed slope sets (oracle injection and
 *  external enumerators).  Digests are taken over the literal sets. */
CertificationReport certify_slope_sets(const SlopeSet& delta_x,
                                       const SlopeSet& delta_y,
                                       const GluingMatrix& phi);

/** One scanned twist power. */
struct TwistScanRow {
  Int n;
  long long min_distance = 0;
  bool pass = false;
};

/** Result of scanning the family phi_n = base o twist^n. */
struct TwistScanResult {
  Slope twist_slope;
  GluingMatrix base_matrix;
  Int range_lo;
  Int range_hi;
  std::vector<TwistScanRow> rows;  // ordered by n
  std::vector<Int> failures;       // n with verdict false
  /** Both range endpoints pass and the failures form one contiguous block
   *  strictly inside the range: the finite-failure shape expected of twist
   *  families. */
  bool all_large_n_pass = false;
};

/** Evaluate the certification distance stage for each n in [lo, hi] with
 *  gluing base * dehn_twist(twist, n).  Slope sets are given; no
 *  enumeration happens here.  Throws EmptySetError on empty inputs. */
TwistScanResult twist_scan(const SlopeSet& delta_x, const SlopeSet& delta_y,
                           const GluingMatrix& base, const Slope& twist,
                           const Int& lo, const Int& hi);

}  // namespace slopecert

#endif  // SLOPECERT_CERTIFY_HPP
