#include "slopecert/genus_bounds.hpp"

namespace slopecert {

AmalgamationBound amalgamation_upper(const Int& g_x, const Int& g_y,
                                     const Int& g_f) {
  AmalgamationBound b;
  b.value = g_x + g_y - g_f;
  b.negative_flagged = b.value < 0;
  return b;
}

ChiBounds handle_bound_from_surface(const Int& chi,
                                    bool single_boundary_or_meets_all) {
  ChiBounds c;
  c.handle_upper = 1 - chi;
  if (single_boundary_or_meets_all) c.tunnel_upper = 1 - chi;
  return c;
}

BoundsReport lower_bounds(const GenusInputs& in, bool closed_and_connected,
                          bool single_boundary_or_meets_all) {
  BoundsReport r;
  r.upper_amalgamation = amalgamation_upper(in.g_x, in.g_y, in.g_f);

  if (in.h_x && in.h_y) r.lower_handle = Rational(*in.h_x + *in.h_y) / 2;
  if (in.t_x && in.t_y && closed_and_connected)
    r.lower_tunnel = Rational(*in.t_x + *in.t_y) / 2;
  r.lower_genus = Rational(in.g_x + in.g_y - 2 * in.g_f) / 2;
  r.johannson_reference = Rational(in.g_x + in.g_y - 2 * in.g_f) / 5;

  if (in.chi) {
    r.chi_present = true;
    r.from_chi = handle_bound_from_surface(*in.chi,
                                           single_boundary_or_meets_all);
  }

  Rational upper(r.upper_amalgamation.value);
  r.consistency = true;
  for (const std::optional<Rational>* lb :
       {&r.lower_handle, &r.lower_tunnel, &r.lower_genus})
    if (lb->has_value() && **lb > upper) r.consistency = false;
  return r;
}

}  // namespace slopecert
