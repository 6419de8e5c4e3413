#ifndef SLOPECERT_JSON_IO_HPP
#define SLOPECERT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "slopecert/certify.hpp"
#include "slopecert/genus_bounds.hpp"
#include "slopecert/slope_set.hpp"
#include "slopecert/surface.hpp"
#include "slopecert/triangulation.hpp"

namespace slopecert {

/** JSON encoding conventions: objects use canonical (alphabetical) key
 *  order; arbitrary-precision integers and rationals are decimal strings;
 *  slopes are two-element arrays ["p", "q"].  Every document carries a
 *  schema_version field.  canonical_dump(parse(canonical_dump(x))) is
 *  byte-identical to canonical_dump(x). */

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Slope& s);
Slope slope_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const SlopeSet& s);
SlopeSet slope_set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SurfaceSummary& s);
nlohmann::json to_json(const CertificationReport& r);
nlohmann::json to_json(const TwistScanResult& r);
nlohmann::json to_json(const BoundsReport& r);

/** Pretty-printed canonical rendering (sorted keys, 2-space indent,
 *  trailing newline). */
std::string canonical_dump(const nlohmann::json& j);

/** Parse a JSON document; throws ParseError on malformed text. */
nlohmann::json parse_json(const std::string& text);

}  // namespace slopecert

#endif  // SLOPECERT_JSON_IO_HPP
