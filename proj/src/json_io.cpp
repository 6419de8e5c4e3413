#include "slopecert/json_io.hpp"

#include <algorithm>

#include "slopecert/errors.hpp"

namespace slopecert {

namespace {

Int int_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (s.empty() || i == s.size())
      throw ParseError(std::string("malformed ") + what + ": '" + s + "'");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw ParseError(std::string("malformed ") + what + ": '" + s + "'");
    return Int(s);
  }
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw ParseError(std::string(what) +
                   " must be a decimal string or an integer");
}

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace

nlohmann::json to_json(const Slope& s) {
  return nlohmann::json::array({s.p.str(), s.q.str()});
}

Slope slope_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("a slope must be a two-element array [p, q]");
  Int p = int_from_json(j[0], "slope numerator");
  Int q = int_from_json(j[1], "slope denominator");
  if (p == 0 && q == 0) throw ParseError("slope 0/0 is not defined");
  return make_slope(std::move(p), std::move(q));
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (const BoundaryComponentSummary& c : r.boundary_components) {
    nlohmann::json jc;
    jc["euler_characteristic"] = c.euler_characteristic;
    jc["orientable"] = c.orientable;
    if (c.genus)
      jc["genus"] = *c.genus;
    else
      jc["genus"] = nullptr;
    comps.push_back(std::move(jc));
  }
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["orientable"] = r.orientable;
  j["vertex_count"] = r.vertex_count;
  j["boundary_components"] = std::move(comps);
  j["is_knot_manifold_shaped"] = r.is_knot_manifold_shaped;
  j["diagnostics"] = r.diagnostics;
  return j;
}

nlohmann::json to_json(const SlopeSet& s) {
  nlohmann::json slopes = nlohmann::json::array();
  for (const Slope& x : s.slopes) slopes.push_back(to_json(x));
  nlohmann::json classes = nlohmann::json::array();
  for (SurfaceClass c : s.classes_covered) classes.push_back(to_string(c));
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["slopes"] = std::move(slopes);
  j["classes_covered"] = std::move(classes);
  j["provenance"] = s.provenance;
  return j;
}

SlopeSet slope_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("slopes") || !j["slopes"].is_array())
    throw ParseError("a slope set must be an object with a 'slopes' array");
  SlopeSet out;
  for (const auto& x : j["slopes"]) out.slopes.push_back(slope_from_json(x));
  std::sort(out.slopes.begin(), out.slopes.end());
  out.slopes.erase(std::unique(out.slopes.begin(), out.slopes.end()),
                   out.slopes.end());
  if (j.contains("classes_covered")) {
    for (const auto& c : j["classes_covered"]) {
      if (!c.is_string())
        throw ParseError("classes_covered entries must be strings");
      std::string name = c.get<std::string>();
      if (name == "normal")
        out.classes_covered.insert(SurfaceClass::Normal);
      else if (name == "octagonal")
        out.classes_covered.insert(SurfaceClass::Octagonal);
      else
        throw ParseError("unknown surface class '" + name + "'");
    }
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_object())
      throw ParseError("provenance must map slope text to witness lists");
    for (const auto& [key, val] : j["provenance"].items()) {
      std::vector<std::string> ids;
      for (const auto& id : val) {
        if (!id.is_string())
          throw ParseError("provenance witnesses must be strings");
        ids.push_back(id.get<std::string>());
      }
      out.provenance[key] = std::move(ids);
    }
  }
  return out;
}

nlohmann::json to_json(const SurfaceSummary& s) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["euler_characteristic"] = s.euler_characteristic.str();
  j["orientable"] = s.orientable;
  j["connected_components"] = s.connected_components;
  j["boundary_curve_count"] = s.boundary_curve_count;
  if (s.slope)
    j["slope"] = to_json(*s.slope);
  else
    j["slope"] = nullptr;
  j["slope_absent_reason"] = s.slope_absent_reason;
  j["surface_class"] = to_string(s.surface_class);
  return j;
}

nlohmann::json to_json(const CertificationReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["delta_x"] = to_json(r.delta_x);
  j["delta_y"] = to_json(r.delta_y);
  j["pulled_back"] = to_json(r.pulled_back);
  j["gluing"] = format_matrix(r.gluing);
  j["min_distance"] = r.min_distance;
  j["witness_pair"] = nlohmann::json::array(
      {to_json(r.witness_pair.first), to_json(r.witness_pair.second)});
  j["sufficiently_complicated"] = r.sufficiently_complicated;
  if (r.sufficiently_complicated)
    j["theorem_consequence"] = r.theorem_consequence;
  j["coverage_caveats"] = r.coverage_caveats;
  j["inputs_digest"] = r.inputs_digest;
  return j;
}

nlohmann::json to_json(const TwistScanResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TwistScanRow& row : r.rows) {
    nlohmann::json jr;
    jr["n"] = row.n.str();
    jr["min_distance"] = row.min_distance;
    jr["pass"] = row.pass;
    rows.push_back(std::move(jr));
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const Int& n : r.failures) failures.push_back(n.str());
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["twist_slope"] = to_json(r.twist_slope);
  j["base_matrix"] = format_matrix(r.base_matrix);
  j["range"] = nlohmann::json::array({r.range_lo.str(), r.range_hi.str()});
  j["rows"] = std::move(rows);
  j["failures"] = std::move(failures);
  j["all_large_n_pass"] = r.all_large_n_pass;
  return j;
}

nlohmann::json to_json(const BoundsReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["upper_amalgamation"] = r.upper_amalgamation.value.str();
  j["negative_flagged"] = r.upper_amalgamation.negative_flagged;
  if (r.lower_handle) j["lower_handle"] = rational_str(*r.lower_handle);
  if (r.lower_tunnel) j["lower_tunnel"] = rational_str(*r.lower_tunnel);
  if (r.lower_genus) j["lower_genus"] = rational_str(*r.lower_genus);
  j["chi_present"] = r.chi_present;
  if (r.chi_present) {
    j["handle_upper_from_chi"] = r.from_chi.handle_upper.str();
    if (r.from_chi.tunnel_upper)
      j["tunnel_upper_from_chi"] = r.from_chi.tunnel_upper->str();
  }
  if (r.johannson_reference)
    j["johannson_reference"] = rational_str(*r.johannson_reference);
  j["consistency"] = r.consistency;
  return j;
}

std::string canonical_dump(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace slopecert
