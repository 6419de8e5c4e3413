#ifndef SLOPECERT_TRIANGULATION_HPP
#define SLOPECERT_TRIANGULATION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slopecert {

/** A permutation of {0,1,2,3}, stored as its image array. */
class Perm4 {
 public:
  /** Identity permutation. */
  Perm4() : img_{0, 1, 2, 3} {}

  /** Construct from the image array; throws std::invalid_argument unless
   *  the array is a bijection of {0,1,2,3}. */
  explicit Perm4(const std::array<int, 4>& image);

  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  Perm4 inverse() const;
  /** +1 for even permutations, -1 for odd. */
  int sign() const;
  /** Composition: (a * b)(i) = a(b(i)). */
  friend Perm4 operator*(const Perm4& a, const Perm4& b);
  friend bool operator==(const Perm4& a, const Perm4& b) = default;

  /** Parse four digits, e.g. "1302" for 0->1, 1->3, 2->0, 3->2. */
  static Perm4 parse(std::string_view digits);
  std::string str() const;

 private:
  std::array<int, 4> img_;
};

/** One face of one tetrahedron.  `face` in 0..3 names the face opposite
 *  that vertex. */
struct FaceRef {
  int tet = 0;
  int face = 0;
  auto operator<=>(const FaceRef&) const = default;
};

/** An identification of two tetrahedron faces.  `perm` is the gluing's
 *  extension to all four vertices; it carries a.face to b.face and the
 *  vertex set of face a to the vertex set of face b. */
struct FaceGluing {
  FaceRef a;
  FaceRef b;
  Perm4 perm;
};

/** A pseudo-triangulation: tetrahedra plus face identifications.  Unglued
 *  faces form the (material) boundary.  Each (tet, face) appears in at
 *  most one gluing. */
struct Triangulation {
  int tet_count = 0;
  std::vector<FaceGluing> gluings;
};

/** Parse the triangulation text format (see README: `tets N` header, then
 *  `glue tA fA tB fB p0p1p2p3` lines, `#` comments).  Throws ParseError
 *  with 1-based line/column on malformed input, out-of-range indices,
 *  reused faces, degenerate permutations, or self-gluings of a face. */
Triangulation parse_triangulation(const std::string& text);

/** Read and parse a file; throws Error on I/O failure, ParseError as above. */
Triangulation load_triangulation(const std::filesystem::path& path);

/** Canonical form: each gluing stored with the lexicographically smaller
 *  (tet, face) side first (inverting the permutation when swapped), and
 *  the gluing list sorted. */
Triangulation canonical_form(const Triangulation& tri);

/** Canonical text serialization; parse(serialize(t)) equals
 *  canonical_form(t). */
std::string serialize(const Triangulation& tri);

/** SHA-256 hex digest of the canonical serialization.  Stable content
 *  address used for caching and report digests. */
std::string content_digest(const Triangulation& tri);

/** The unglued faces, sorted. */
std::vector<FaceRef> boundary_faces(const Triangulation& tri);

/** Connectivity/orientability/genus summary for one boundary component. */
struct BoundaryComponentSummary {
  long long euler_characteristic = 0;
  bool orientable = true;
  /** Orientable: handle genus (2-2g = chi).  Non-orientable: crosscap
   *  genus (2-k = chi).  Absent when the component is not a closed
   *  surface (degenerate identifications). */
  std::optional<long long> genus;
};

/** Result of validate(): combinatorial findings only.  Irreducibility and
 *  boundary-incompressibility are never decided; the diagnostics always
 *  say so. */
struct ValidationReport {
  bool orientable = false;
  long long vertex_count = 0;
  std::vector<BoundaryComponentSummary> boundary_components;
  /** orientable, exactly one vertex class, and exactly one boundary
   *  component which is a torus. */
  bool is_knot_manifold_shaped = false;
  /** Human-readable, index-free findings (stable under tetrahedron
   *  relabeling). */
  std::vector<std::string> diagnostics;
};

/** Validate a parsed triangulation.  Never throws; all findings are
 *  reported in the diagnostics. */
ValidationReport validate(const Triangulation& tri);

}  // namespace slopecert

#endif  // SLOPECERT_TRIANGULATION_HPP
