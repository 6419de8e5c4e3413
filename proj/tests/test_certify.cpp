#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "oracle_helpers.hpp"
#include "slopecert/certify.hpp"
#include "slopecert/errors.hpp"
#include "slopecert/triangulation.hpp"

using namespace slopecert;

namespace {

SlopeSet make_set(const std::vector<const char*>& texts) {
  SlopeSet s;
  for (const char* t : texts) s.slopes.push_back(parse_slope(t));
  std::sort(s.slopes.begin(), s.slopes.end());
  s.slopes.erase(std::unique(s.slopes.begin(), s.slopes.end()),
                 s.slopes.end());
  return s;
}

SlopeSet map_set(const SlopeSet& s, const GluingMatrix& g) {
  SlopeSet out;
  for (const Slope& x : s.slopes) out.slopes.push_back(apply_gluing(g, x));
  std::sort(out.slopes.begin(), out.slopes.end());
  return out;
}

}  // namespace

TEST_CASE("certify on synthetic slope sets: passing and failing gluings") {
  GluingMatrix id = make_gluing_matrix(1, 0, 0, 1);

  CertificationReport pass =
      certify_slope_sets(make_set({"1/0"}), make_set({"5/2"}), id);
  CHECK(pass.min_distance == 2);
  CHECK(pass.sufficiently_complicated);
  CHECK_FALSE(pass.theorem_consequence.empty());
  CHECK(pass.theorem_consequence.find("sufficiently complicated") !=
        std::string::npos);
  CHECK(pass.witness_pair.first == parse_slope("1/0"));
  CHECK(pass.witness_pair.second == parse_slope("5/2"));
  REQUIRE(pass.coverage_caveats.size() == 3);
  CHECK(pass.coverage_caveats[0].find("boundary-band") != std::string::npos);
  CHECK(pass.inputs_digest.count("x") == 1);
  CHECK(pass.inputs_digest.count("y") == 1);
  CHECK(pass.inputs_digest.count("gluing") == 1);

  CertificationReport fail =
      certify_slope_sets(make_set({"1/0"}), make_set({"2/1"}), id);
  CHECK(fail.min_distance == 1);
  CHECK_FALSE(fail.sufficiently_complicated);
  CHECK(fail.theorem_consequence.empty());
  REQUIRE(fail.coverage_caveats.size() == 3);  // caveats are unconditional

  CertificationReport zero =
      certify_slope_sets(make_set({"1/0", "0/1"}), make_set({"0/1"}), id);
  CHECK(zero.min_distance == 0);
  CHECK_FALSE(zero.sufficiently_complicated);
}

TEST_CASE("certify pulls the second set back through the gluing") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 50; ++i) {
    SlopeSet dx, dy;
    for (int k = 0; k < 3; ++k) {
      dx.slopes.push_back(oracle::random_slope(rng, 12));
      dy.slopes.push_back(oracle::random_slope(rng, 12));
    }
    std::sort(dx.slopes.begin(), dx.slopes.end());
    dx.slopes.erase(std::unique(dx.slopes.begin(), dx.slopes.end()),
                    dx.slopes.end());
    std::sort(dy.slopes.begin(), dy.slopes.end());
    dy.slopes.erase(std::unique(dy.slopes.begin(), dy.slopes.end()),
                    dy.slopes.end());
    GluingMatrix phi = oracle::random_unimodular(rng, 8);

    CertificationReport r = certify_slope_sets(dx, dy, phi);
    CHECK(r.pulled_back.slopes == map_set(dy, inverse(phi)).slopes);

    // Direct recomputation of the distance stage.
    long long best = 1u << 20;
    for (const Slope& a : dx.slopes)
      for (const Slope& b : r.pulled_back.slopes)
        best = std::min(best, distance(a, b));
    CHECK(r.min_distance == best);
    CHECK(r.sufficiently_complicated == (best >= 2));
    CHECK(distance(r.witness_pair.first, r.witness_pair.second) == best);
  }
}

TEST_CASE("certification distance is symmetric and basis-covariant") {
  std::mt19937 rng(515);
  for (int i = 0; i < 50; ++i) {
    SlopeSet dx, dy;
    for (int k = 0; k < 4; ++k) {
      dx.slopes.push_back(oracle::random_slope(rng, 15));
      dy.slopes.push_back(oracle::random_slope(rng, 15));
    }
    std::sort(dx.slopes.begin(), dx.slopes.end());
    dx.slopes.erase(std::unique(dx.slopes.begin(), dx.slopes.end()),
                    dx.slopes.end());
    std::sort(dy.slopes.begin(), dy.slopes.end());
    dy.slopes.erase(std::unique(dy.slopes.begin(), dy.slopes.end()),
                    dy.slopes.end());
    GluingMatrix phi = oracle::random_unimodular(rng, 10);

    long long d_xy = certify_slope_sets(dx, dy, phi).min_distance;
    long long d_yx = certify_slope_sets(dy, dx, inverse(phi)).min_distance;
    CHECK(d_xy == d_yx);

    // Changing X's basis by g and composing the gluing accordingly leaves
    // the verdict invariant.
    GluingMatrix g = oracle::random_unimodular(rng, 6);
    long long d_cov =
        certify_slope_sets(map_set(dx, g), dy, compose(phi, inverse(g)))
            .min_distance;
    CHECK(d_cov == d_xy);
  }
}

TEST_CASE("certify rejects empty slope sets") {
  GluingMatrix id = make_gluing_matrix(1, 0, 0, 1);
  CHECK_THROWS_AS(certify_slope_sets(SlopeSet{}, make_set({"1/0"}), id),
                  EmptyDeltaError);
  CHECK_THROWS_AS(certify_slope_sets(make_set({"1/0"}), SlopeSet{}, id),
                  EmptyDeltaError);
}

TEST_CASE("full certification pipeline on the solid torus") {
  Triangulation st = parse_triangulation(corpus::kSolidTorus);
  GluingMatrix phi = parse_matrix("0,1;1,0");
  CertifyOptions opts;
  opts.cache_dir.reset();

  CertificationReport r = certify(st, st, phi, opts);
  CHECK(r.delta_x.slopes == r.delta_y.slopes);
  CHECK_FALSE(r.delta_x.slopes.empty());
  CHECK(r.inputs_digest.at("x") == r.inputs_digest.at("y"));
  CHECK(r.inputs_digest.at("x") == content_digest(st));
  CHECK(r.min_distance >= 0);
  REQUIRE(r.coverage_caveats.size() == 3);

  // Provenance identifies witnessing vectors for every slope.
  for (const Slope& s : r.delta_x.slopes)
    CHECK_FALSE(r.delta_x.provenance.at(format_slope(s)).empty());
}

TEST_CASE("certify refuses non-knot-manifold inputs, naming the side") {
  Triangulation ball = parse_triangulation(corpus::kBall);
  Triangulation st = parse_triangulation(corpus::kSolidTorus);
  GluingMatrix id = make_gluing_matrix(1, 0, 0, 1);
  CHECK_THROWS_WITH_AS(certify(ball, st, id),
                       doctest::Contains("X:"), NotAKnotManifoldError);
  CHECK_THROWS_WITH_AS(certify(st, ball, id),
                       doctest::Contains("Y:"), NotAKnotManifoldError);
}

TEST_CASE("twist scan about the meridian fails exactly at |n| <= 1") {
  SlopeSet dx = make_set({"1/0"});
  SlopeSet dy = make_set({"1/0"});
  GluingMatrix base = make_gluing_matrix(1, 0, 0, 1);
  TwistScanResult r =
      twist_scan(dx, dy, base, parse_slope("0/1"), Int(-5), Int(5));
  REQUIRE(r.rows.size() == 11);
  std::vector<Int> expect_failures = {-1, 0, 1};
  CHECK(r.failures == expect_failures);
  CHECK(r.all_large_n_pass);
  CHECK(r.rows.front().n == -5);
  CHECK(r.rows.back().n == 5);
  for (const TwistScanRow& row : r.rows) {
    CHECK(row.pass == (row.min_distance >= 2));
    bool inner = row.n >= -1 && row.n <= 1;
    CHECK(row.pass == !inner);
  }
}

TEST_CASE("twist scan about a slope fixed by both sets never passes") {
  SlopeSet dx = make_set({"1/0"});
  SlopeSet dy = make_set({"1/0"});
  GluingMatrix base = make_gluing_matrix(1, 0, 0, 1);
  TwistScanResult r =
      twist_scan(dx, dy, base, parse_slope("1/0"), Int(-4), Int(4));
  CHECK(r.failures.size() == 9);
  CHECK_FALSE(r.all_large_n_pass);
  for (const TwistScanRow& row : r.rows) CHECK(row.min_distance == 0);
}

TEST_CASE("twist scan validates its inputs") {
  SlopeSet dx = make_set({"1/0"});
  GluingMatrix base = make_gluing_matrix(1, 0, 0, 1);
  CHECK_THROWS_AS(
      twist_scan(SlopeSet{}, dx, base, parse_slope("0/1"), Int(0), Int(1)),
      EmptySetError);
  CHECK_THROWS_AS(
      twist_scan(dx, SlopeSet{}, base, parse_slope("0/1"), Int(0), Int(1)),
      EmptySetError);
  CHECK_THROWS_AS(
      twist_scan(dx, dx, base, parse_slope("0/1"), Int(3), Int(-3)),
      EmptySetError);
}

TEST_CASE("twist scan rows match one-shot certifications") {
  std::mt19937 rng(808);
  for (int i = 0; i < 10; ++i) {
    SlopeSet dx, dy;
    for (int k = 0; k < 3; ++k) {
      dx.slopes.push_back(oracle::random_slope(rng, 9));
      dy.slopes.push_back(oracle::random_slope(rng, 9));
    }
    std::sort(dx.slopes.begin(), dx.slopes.end());
    dx.slopes.erase(std::unique(dx.slopes.begin(), dx.slopes.end()),
                    dx.slopes.end());
    std::sort(dy.slopes.begin(), dy.slopes.end());
    dy.slopes.erase(std::unique(dy.slopes.begin(), dy.slopes.end()),
                    dy.slopes.end());
    GluingMatrix base = oracle::random_unimodular(rng, 6);
    Slope twist = oracle::random_slope(rng, 6);

    TwistScanResult scan = twist_scan(dx, dy, base, twist, Int(-3), Int(3));
    REQUIRE(scan.rows.size() == 7);
    for (const TwistScanRow& row : scan.rows) {
      GluingMatrix phi_n = compose(base, dehn_twist(twist, row.n));
      CertificationReport direct = certify_slope_sets(dx, dy, phi_n);
      CHECK(row.min_distance == direct.min_distance);
      CHECK(row.pass == direct.sufficiently_complicated);
    }
  }
}
