#ifndef SLOPECERT_GENUS_BOUNDS_HPP
#define SLOPECERT_GENUS_BOUNDS_HPP

#include <optional>

#include "slopecert/numeric.hpp"

namespace slopecert {

/** Inputs for the genus/handle/tunnel calculators.  g_* are Heegaard
 *  genera of the two pieces and of the gluing surface F; h_* handle
 *  numbers; t_* tunnel numbers; chi the Euler characteristic of a
 *  splitting surface H_X.  All exact integers. */
struct GenusInputs {
  Int g_x;
  Int g_y;
  Int g_f;
  std::optional<Int> h_x;
  std::optional<Int> h_y;
  std::optional<Int> t_x;
  std::optional<Int> t_y;
  std::optional<Int> chi;
};

/** Upper bound from amalgamation: g_x + g_y - g_f (with g_f = 0 this
 *  degenerates to connected-sum additivity). */
struct AmalgamationBound {
  Int value;
  /** The formula went negative: the inputs are inconsistent with a
   *  genus-g_f gluing surface. */
  bool negative_flagged = false;
};
AmalgamationBound amalgamation_upper(const Int& g_x, const Int& g_y,
                                     const Int& g_f);

/** Bounds from surface Euler characteristic: h(X) <= 1 - chi, and the
 *  same bound for the tunnel number when the splitting surface meets every
 *  boundary component (or the boundary is connected) — gated by the
 *  caller's flag, never assumed. */
struct ChiBounds {
  Int handle_upper;
  std::optional<Int> tunnel_upper;
};
ChiBounds handle_bound_from_surface(const Int& chi,
                                    bool single_boundary_or_meets_all);

/** Combined report for the CLI and JSON output. */
struct BoundsReport {
  AmalgamationBound upper_amalgamation;
  /** (h_x + h_y)/2, exact rational; absent unless both handle numbers are
   *  given. */
  std::optional<Rational> lower_handle;
  /** (t_x + t_y)/2; computed only when both tunnel numbers are given AND
   *  the caller asserts the closed-manifold, connected-F hypotheses. */
  std::optional<Rational> lower_tunnel;
  /** (g_x + g_y - 2 g_f)/2. */
  std::optional<Rational> lower_genus;
  ChiBounds from_chi;    // valid iff chi_present
  bool chi_present = false;
  /** Reference line: (g_x + g_y - 2 g_f)/5, the comparable bound known
   *  for arbitrary gluings; emitted for context only. */
  std::optional<Rational> johannson_reference;
  /** Every computed lower bound is <= the amalgamation upper bound. */
  bool consistency = true;
};

/** Compute every bound available from the given inputs.
 *  closed_and_connected gates the tunnel-number bound;
 *  single_boundary_or_meets_all gates the tunnel bound from chi. */
BoundsReport lower_bounds(const GenusInputs& in, bool closed_and_connected,
                          bool single_boundary_or_meets_all);

}  // namespace slopecert

#endif  // SLOPECERT_GENUS_BOUNDS_HPP
