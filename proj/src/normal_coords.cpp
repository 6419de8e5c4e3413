#include "slopecert/normal_coords.hpp"

#include <stdexcept>

namespace slopecert {

std::string to_string(PieceMode mode) {
  return mode == PieceMode::Normal ? "normal" : "octagonal";
}

std::string to_string(SurfaceClass c) {
  return c == SurfaceClass::Normal ? "normal" : "octagonal";
}

int pair_type(int u, int v) {
  if (u == v || u < 0 || v < 0 || u > 3 || v > 3)
    throw std::invalid_argument("pair_type needs two distinct vertices 0..3");
  if (u > v) std::swap(u, v);
  if (u == 0) return v - 1;  // {0,1}->0, {0,2}->1, {0,3}->2
  // Same type as the complementary pair, which contains vertex 0.
  return (6 - u - v) - 1;
}

std::array<std::array<int, 2>, 2> pairs_of_type(int type) {
  switch (type) {
    case 0:
      return {{{0, 1}, {2, 3}}};
    case 1:
      return {{{0, 2}, {1, 3}}};
    case 2:
      return {{{0, 3}, {1, 2}}};
    default:
      throw std::invalid_argument("pairing type must be 0..2");
  }
}

bool operator==(const NormalCoordinateVector& a,
                const NormalCoordinateVector& b) {
  return a.mode == b.mode && a.coords.size() == b.coords.size() &&
         a.coords == b.coords;
}

bool is_admissible(const Triangulation& tri, const NormalCoordinateVector& v) {
  const int cpt = coords_per_tet(v.mode);
  if (v.coords.size() != static_cast<Eigen::Index>(tri.tet_count) * cpt)
    return false;
  for (Eigen::Index i = 0; i < v.coords.size(); ++i)
    if (v.coords(i) < 0) return false;
  for (int t = 0; t < tri.tet_count; ++t) {
    int nonzero_types = 0;
    for (int k = 4; k < cpt; ++k)
      if (v.coords(t * cpt + k) != 0) ++nonzero_types;
    if (nonzero_types > 1) return false;
  }
  return true;
}

bool is_enumeration_admissible(const Triangulation& tri,
                               const NormalCoordinateVector& v) {
  if (!is_admissible(tri, v)) return false;
  if (v.mode == PieceMode::Normal) return true;
  Int oct_sum = 0;
  for (int t = 0; t < tri.tet_count; ++t)
    for (int type = 0; type < 3; ++type) oct_sum += v.coords(oct_index(t, type));
  return oct_sum == 1;
}

Int arc_count(const Triangulation& tri, const NormalCoordinateVector& v,
              int tet, int face, int corner) {
  (void)tri;
  if (corner == face)
    throw std::invalid_argument("arc corner must lie on the face");
  Int total = v.coords(tri_index(tet, corner, v.mode));
  total += v.coords(quad_index(tet, pair_type(corner, face), v.mode));
  if (v.mode == PieceMode::Octagonal) {
    for (int y = 0; y < 4; ++y) {
      if (y == corner || y == face) continue;
      total += v.coords(oct_index(tet, pair_type(corner, y)));
    }
  }
  return total;
}

IntMatrix matching_equations(const Triangulation& tri, PieceMode mode) {
  const int cpt = coords_per_tet(mode);
  const int cols = tri.tet_count * cpt;
  const int rows = static_cast<int>(tri.gluings.size()) * 3;
  IntMatrix m = IntMatrix::Zero(rows, cols);

  auto add_arc_terms = [&](int row, int tet, int face, int corner, int sign) {
    m(row, tri_index(tet, corner, mode)) += sign;
    m(row, quad_index(tet, pair_type(corner, face), mode)) += sign;
    if (mode == PieceMode::Octagonal)
      for (int y = 0; y < 4; ++y) {
        if (y == corner || y == face) continue;
        m(row, oct_index(tet, pair_type(corner, y))) += sign;
      }
  };

  int row = 0;
  for (const FaceGluing& g : tri.gluings) {
    for (int v = 0; v < 4; ++v) {
      if (v == g.a.face) continue;
      add_arc_terms(row, g.a.tet, g.a.face, v, +1);
      add_arc_terms(row, g.b.tet, g.b.face, g.perm(v), -1);
      ++row;
    }
  }
  return m;
}

bool satisfies_matching(const Triangulation& tri,
                        const NormalCoordinateVector& v) {
  IntMatrix m = matching_equations(tri, v.mode);
  if (m.cols() != v.coords.size()) return false;
  IntVector r = m * v.coords;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) return false;
  return true;
}

NormalCoordinateVector vertex_link_vector(const Triangulation& tri,
                                          PieceMode mode) {
  NormalCoordinateVector v;
  v.mode = mode;
  v.coords = IntVector::Zero(tri.tet_count * coords_per_tet(mode));
  for (int t = 0; t < tri.tet_count; ++t)
    for (int c = 0; c < 4; ++c) v.coords(tri_index(t, c, mode)) = 1;
  return v;
}

}  // namespace slopecert
