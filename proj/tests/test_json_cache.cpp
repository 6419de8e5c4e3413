#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "slopecert/certify.hpp"
#include "slopecert/digest.hpp"
#include "slopecert/errors.hpp"
#include "slopecert/json_io.hpp"
#include "slopecert/slope_set.hpp"
#include "slopecert/triangulation.hpp"

using namespace slopecert;
namespace fs = std::filesystem;

namespace {

/** Fresh empty directory under the system temp dir. */
fs::path fresh_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  fs::path p = fs::temp_directory_path() /
               ("slopecert-test-" + tag + "-" + std::to_string(rng()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::size_t file_count(const fs::path& dir) {
  std::size_t n = 0;
  for (auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) ++n;
  return n;
}

}  // namespace

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("slopes serialize as decimal string pairs") {
  nlohmann::json j = to_json(parse_slope("-3/7"));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0] == "-3");
  CHECK(j[1] == "7");
  CHECK(slope_from_json(j) == parse_slope("-3/7"));

  // Large values survive the round trip exactly.
  Slope big = make_slope(Int("123456789012345678901234567891"), 2);
  CHECK(slope_from_json(to_json(big)) == big);

  CHECK_THROWS_AS(slope_from_json(nlohmann::json::parse("[\"1\"]")),
                  ParseError);
  CHECK_THROWS_AS(slope_from_json(nlohmann::json::parse("[\"a\",\"b\"]")),
                  ParseError);
}

TEST_CASE("canonical dump is stable under reparse") {
  nlohmann::json j;
  j["zebra"] = 1;
  j["alpha"] = {{"y", "2"}, {"x", "3"}};
  std::string once = canonical_dump(j);
  CHECK(once.back() == '\n');
  CHECK(canonical_dump(parse_json(once)) == once);
  // Alphabetical key order.
  CHECK(once.find("alpha") < once.find("zebra"));
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

TEST_CASE("validation report JSON") {
  ValidationReport r = validate(parse_triangulation(corpus::kSolidTorus));
  nlohmann::json j = to_json(r);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["orientable"] == true);
  CHECK(j["vertex_count"] == 1);
  CHECK(j["is_knot_manifold_shaped"] == true);
  REQUIRE(j["boundary_components"].size() == 1);
  CHECK(j["boundary_components"][0]["genus"] == 1);
  CHECK(j["diagnostics"].is_array());

  ValidationReport ball = validate(parse_triangulation(corpus::kBall));
  nlohmann::json jb = to_json(ball);
  CHECK(jb["is_knot_manifold_shaped"] == false);
}

TEST_CASE("slope set JSON round trip with provenance") {
  SlopeSet s;
  s.slopes = {parse_slope("1/0"), parse_slope("-2/3")};
  std::sort(s.slopes.begin(), s.slopes.end());
  s.provenance["1/0"] = {"normal#0", "normal#2"};
  s.provenance["-2/3"] = {"octagonal#1"};
  s.classes_covered = {SurfaceClass::Normal, SurfaceClass::Octagonal};

  nlohmann::json j = to_json(s);
  CHECK(j["schema_version"] == kSchemaVersion);
  SlopeSet back = slope_set_from_json(j);
  CHECK(back.slopes == s.slopes);
  CHECK(back.provenance == s.provenance);
  CHECK(back.classes_covered == s.classes_covered);
  CHECK(canonical_dump(to_json(back)) == canonical_dump(j));

  // Minimal form: just slopes.
  SlopeSet mini = slope_set_from_json(
      nlohmann::json::parse(R"({"slopes": [["1","0"],["0","1"]]})"));
  REQUIRE(mini.slopes.size() == 2);
  CHECK(mini.slopes[0] == parse_slope("0/1"));

  CHECK_THROWS_AS(slope_set_from_json(nlohmann::json::parse("{}")),
                  ParseError);
  CHECK_THROWS_AS(
      slope_set_from_json(nlohmann::json::parse(
          R"({"slopes": [], "classes_covered": ["weird"]})")),
      ParseError);
}

TEST_CASE("certification report JSON carries the consequence only on pass") {
  SlopeSet a, b;
  a.slopes = {parse_slope("1/0")};
  b.slopes = {parse_slope("5/2")};
  GluingMatrix id = make_gluing_matrix(1, 0, 0, 1);

  nlohmann::json pass = to_json(certify_slope_sets(a, b, id));
  CHECK(pass["schema_version"] == kSchemaVersion);
  CHECK(pass["sufficiently_complicated"] == true);
  CHECK(pass["min_distance"] == 2);
  CHECK(pass.contains("theorem_consequence"));
  CHECK(pass["coverage_caveats"].size() == 3);
  CHECK(pass["gluing"] == "1,0;0,1");
  CHECK(pass["witness_pair"].size() == 2);
  CHECK(pass["delta_x"]["slopes"][0] == nlohmann::json::parse(R"(["1","0"])"));

  b.slopes = {parse_slope("2/1")};
  nlohmann::json fail = to_json(certify_slope_sets(a, b, id));
  CHECK(fail["sufficiently_complicated"] == false);
  CHECK_FALSE(fail.contains("theorem_consequence"));
}

TEST_CASE("twist scan JSON uses decimal strings for the powers") {
  SlopeSet a;
  a.slopes = {parse_slope("1/0")};
  TwistScanResult r = twist_scan(a, a, make_gluing_matrix(1, 0, 0, 1),
                                 parse_slope("0/1"), Int(-2), Int(2));
  nlohmann::json j = to_json(r);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["range"][0] == "-2");
  CHECK(j["range"][1] == "2");
  REQUIRE(j["rows"].size() == 5);
  CHECK(j["rows"][0]["n"] == "-2");
  CHECK(j["rows"][0]["pass"] == true);
  CHECK(j["failures"] == nlohmann::json::parse(R"(["-1","0","1"])"));
  CHECK(j["all_large_n_pass"] == true);
}

TEST_CASE("bounds report JSON") {
  GenusInputs in;
  in.g_x = 2;
  in.g_y = 3;
  in.g_f = 1;
  in.chi = -3;
  nlohmann::json j = to_json(lower_bounds(in, false, true));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["upper_amalgamation"] == "4");
  CHECK(j["lower_genus"] == "3/2");
  CHECK(j["johannson_reference"] == "3/5");
  CHECK(j["handle_upper_from_chi"] == "4");
  CHECK(j["tunnel_upper_from_chi"] == "4");
  CHECK(j["consistency"] == true);

  GenusInputs no_chi;
  no_chi.g_x = 1;
  no_chi.g_y = 1;
  no_chi.g_f = 0;
  nlohmann::json j2 = to_json(lower_bounds(no_chi, false, false));
  CHECK_FALSE(j2.contains("handle_upper_from_chi"));
  CHECK_FALSE(j2.contains("tunnel_upper_from_chi"));
}

TEST_CASE("cached enumeration: cold write, warm read, identical results") {
  fs::path dir = fresh_dir("cache");
  Triangulation tri = parse_triangulation(corpus::kSolidTorus);
  EnumerationOptions opts{PieceMode::Normal};

  auto cold = cached_enumerate(tri, opts, dir);
  CHECK(file_count(dir) == 1);
  auto warm = cached_enumerate(tri, opts, dir);
  CHECK(file_count(dir) == 1);
  REQUIRE(cold.size() == warm.size());
  for (std::size_t i = 0; i < cold.size(); ++i)
    CHECK(cold[i].coords == warm[i].coords);

  // A second mode gets its own entry.
  cached_enumerate(tri, EnumerationOptions{PieceMode::Octagonal}, dir);
  CHECK(file_count(dir) == 2);

  // No-cache path computes the same rays.
  auto direct = cached_enumerate(tri, opts, std::nullopt);
  REQUIRE(direct.size() == cold.size());
  for (std::size_t i = 0; i < cold.size(); ++i)
    CHECK(direct[i].coords == cold[i].coords);

  fs::remove_all(dir);
}

TEST_CASE("corrupt or version-mismatched cache entries are recomputed") {
  fs::path dir = fresh_dir("corrupt");
  Triangulation tri = parse_triangulation(corpus::kSolidTorus);
  EnumerationOptions opts{PieceMode::Normal};

  auto cold = cached_enumerate(tri, opts, dir);
  fs::path entry;
  for (auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) entry = e.path();
  REQUIRE_FALSE(entry.empty());

  // Corrupt the file outright.
  {
    std::ofstream f(entry, std::ios::trunc);
    f << "{ not json";
  }
  auto again = cached_enumerate(tri, opts, dir);
  REQUIRE(again.size() == cold.size());
  for (std::size_t i = 0; i < cold.size(); ++i)
    CHECK(again[i].coords == cold[i].coords);
  // The rewritten entry is valid JSON once more.
  std::ifstream rewritten(entry);
  std::string text((std::istreambuf_iterator<char>(rewritten)),
                   std::istreambuf_iterator<char>());
  CHECK_NOTHROW(parse_json(text));

  // Future format versions are not trusted.
  nlohmann::json doc = parse_json(text);
  doc["format_version"] = 999;
  {
    std::ofstream f(entry, std::ios::trunc);
    f << canonical_dump(doc);
  }
  auto v999 = cached_enumerate(tri, opts, dir);
  REQUIRE(v999.size() == cold.size());
  CHECK(parse_json([&] {
          std::ifstream in(entry);
          return std::string((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
        }())["format_version"] != 999);

  fs::remove_all(dir);
}

TEST_CASE("warm and cold slope sets render byte-identically") {
  fs::path dir = fresh_dir("bytes");
  Triangulation tri = parse_triangulation(corpus::kSolidTorus);
  SlopeSetOptions opts;
  opts.cache_dir = dir;

  std::string cold = canonical_dump(to_json(boundary_slope_set(tri, opts)));
  std::string warm = canonical_dump(to_json(boundary_slope_set(tri, opts)));
  CHECK(cold == warm);

  SlopeSetOptions no_cache;
  no_cache.cache_dir.reset();
  CHECK(canonical_dump(to_json(boundary_slope_set(tri, no_cache))) == cold);

  fs::remove_all(dir);
}

TEST_CASE("default cache directory honors the environment override") {
  fs::path dir = fresh_dir("env");
  ::setenv("SLOPECERT_CACHE_DIR", dir.c_str(), 1);
  CHECK(default_cache_dir() == dir);
  ::unsetenv("SLOPECERT_CACHE_DIR");
  CHECK(default_cache_dir() != dir);
  fs::remove_all(dir);
}
