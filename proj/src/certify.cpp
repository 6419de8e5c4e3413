#include "slopecert/certify.hpp"

#include <algorithm>
#include <utility>

#include "slopecert/digest.hpp"
#include "slopecert/errors.hpp"
#include "slopecert/json_io.hpp"

namespace slopecert {

namespace {

std::vector<std::string> standard_caveats() {
  return {
      "coverage: normal and octagonal almost-normal vertex surfaces only; "
      "boundary-band almost-normal surfaces are not enumerated, so the "
      "verdict certifies the hypothesis relative to the covered surface "
      "classes",
      "tube-type almost-normal surfaces add no boundary slopes beyond their "
      "underlying normal pieces and are not enumerated separately",
      "combinatorial validation only: irreducibility and boundary "
      "incompressibility of the pieces are not verified",
  };
}

/** Pull a slope set back through phi^{-1}, carrying provenance over. */
SlopeSet pull_back(const SlopeSet& delta_y, const GluingMatrix& phi) {
  GluingMatrix inv = inverse(phi);
  SlopeSet pulled;
  pulled.classes_covered = delta_y.classes_covered;
  for (const Slope& s : delta_y.slopes) {
    Slope t = apply_gluing(inv, s);
    pulled.slopes.push_back(t);
    std::vector<std::string>& ids = pulled.provenance[format_slope(t)];
    auto it = delta_y.provenance.find(format_slope(s));
    if (it != delta_y.provenance.end())
      ids.insert(ids.end(), it->second.begin(), it->second.end());
  }
  std::sort(pulled.slopes.begin(), pulled.slopes.end());
  pulled.slopes.erase(
      std::unique(pulled.slopes.begin(), pulled.slopes.end()),
      pulled.slopes.end());
  for (auto& [slope_text, ids] : pulled.provenance) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  return pulled;
}

CertificationReport certify_core(SlopeSet delta_x, SlopeSet delta_y,
                                 const GluingMatrix& phi,
                                 std::map<std::string, std::string> digests) {
  if (delta_x.slopes.empty())
    throw EmptyDeltaError(
        "the boundary-slope set of X is empty; no verdict is possible");
  if (delta_y.slopes.empty())
    throw EmptyDeltaError(
        "the boundary-slope set of Y is empty; no verdict is possible");

  CertificationReport r;
  r.gluing = phi;
  r.inputs_digest = std::move(digests);
  r.delta_x = std::move(delta_x);
  r.delta_y = std::move(delta_y);
  r.pulled_back = pull_back(r.delta_y, phi);

  SetDistanceResult sd = set_distance(r.delta_x.slopes, r.pulled_back.slopes);
  r.min_distance = sd.distance;
  r.witness_pair = {sd.witness_a, sd.witness_b};
  r.sufficiently_complicated = sd.distance >= 2;
  if (r.sufficiently_complicated)
    r.theorem_consequence =
        "the gluing is sufficiently complicated: the glued manifold has no "
        "strongly irreducible Heegaard splittings (conclusion reported "
        "relative to the covered surface classes)";
  r.coverage_caveats = standard_caveats();
  return r;
}

}  // namespace

CertificationReport certify(const Triangulation& tri_x,
                            const Triangulation& tri_y,
                            const GluingMatrix& phi,
                            const CertifyOptions& options) {
  SlopeSetOptions so;
  so.classes = options.classes;
  so.cache_dir = options.cache_dir;
  so.max_intermediate_rays = options.max_intermediate_rays;

  SlopeSet dx, dy;
  try {
    dx = boundary_slope_set(tri_x, so);
  } catch (const NotAKnotManifoldError& e) {
    throw NotAKnotManifoldError(std::string("X: ") + e.what());
  }
  try {
    dy = boundary_slope_set(tri_y, so);
  } catch (const NotAKnotManifoldError& e) {
    throw NotAKnotManifoldError(std::string("Y: ") + e.what());
  }

  std::map<std::string, std::string> digests;
  digests["x"] = content_digest(tri_x);
  digests["y"] = content_digest(tri_y);
  digests["gluing"] = sha256_hex(format_matrix(phi));
  return certify_core(std::move(dx), std::move(dy), phi, std::move(digests));
}

CertificationReport certify_slope_sets(const SlopeSet& delta_x,
                                       const SlopeSet& delta_y,
                                       const GluingMatrix& phi) {
  std::map<std::string, std::string> digests;
  digests["x"] = sha256_hex(canonical_dump(to_json(delta_x)));
  digests["y"] = sha256_hex(canonical_dump(to_json(delta_y)));
  digests["gluing"] = sha256_hex(format_matrix(phi));
  return certify_core(delta_x, delta_y, phi, std::move(digests));
}

TwistScanResult twist_scan(const SlopeSet& delta_x, const SlopeSet& delta_y,
                           const GluingMatrix& base, const Slope& twist,
                           const Int& lo, const Int& hi) {
  if (delta_x.slopes.empty() || delta_y.slopes.empty())
    throw EmptySetError("twist scan requires two nonempty slope sets");
  if (lo > hi) throw EmptySetError("twist scan range is empty");

  TwistScanResult res;
  res.twist_slope = make_slope(twist.p, twist.q);
  res.base_matrix = base;
  res.range_lo = lo;
  res.range_hi = hi;

  for (Int n = lo; n <= hi; ++n) {
    GluingMatrix phi_n = compose(base, dehn_twist(res.twist_slope, n));
    SlopeSet pulled = pull_back(delta_y, phi_n);
    SetDistanceResult sd = set_distance(delta_x.slopes, pulled.slopes);
    TwistScanRow row;
    row.n = n;
    row.min_distance = sd.distance;
    row.pass = sd.distance >= 2;
    if (!row.pass) res.failures.push_back(n);
    res.rows.push_back(std::move(row));
  }

  bool endpoints_pass = res.rows.front().pass && res.rows.back().pass;
  bool contiguous = true;
  for (std::size_t i = 1; i < res.failures.size(); ++i)
    if (res.failures[i] != res.failures[i - 1] + 1) contiguous = false;
  res.all_large_n_pass = endpoints_pass && contiguous;
  return res;
}

}  // namespace slopecert
