#include "slopecert/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "internal_util.hpp"
#include "slopecert/errors.hpp"

namespace slopecert {

namespace {

/** Explicit reconstruction is linear in the number of pieces; this cap
 *  keeps pathological inputs from exhausting memory. */
constexpr long long kMaxPieces = 200'000;

int epair(int u, int v) {
  if (u > v) std::swap(u, v);
  static constexpr int base[3] = {0, 3, 5};
  return base[u] + (v - u - 1);
}

std::array<int, 3> face_vertices(int face) {
  std::array<int, 3> vs{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) vs[static_cast<std::size_t>(k++)] = v;
  return vs;
}

struct ArcRec {
  int tet = 0, face = 0, cut = 0;
  long long depth = 0;
  long long piece = 0;
  int dir = 1;  // piece traversal vs canonical (toward the higher end corner)
  long long glued_to = -1;
  long long end_point[2] = {-1, -1};  // point ids at the low/high end corner
  int end_other[2] = {-1, -1};        // the non-cut corner at each end
};

std::uint64_t arc_key(int tet, int face, int cut, long long depth) {
  return (static_cast<std::uint64_t>((tet * 4 + face) * 4 + cut) << 40) |
         static_cast<std::uint64_t>(depth);
}

std::uint64_t point_key(int tet, int u, int v, long long hmin) {
  return (static_cast<std::uint64_t>(tet * 6 + epair(u, v)) << 40) |
         static_cast<std::uint64_t>(hmin);
}

struct TetData {
  long long T[4] = {0, 0, 0, 0};
  int middle_kind = 0;  // 0 none, 1 quad, 2 oct
  int middle_type = 0;
  long long M = 0;
};

}  // namespace

SurfaceSummary surface_properties(const Triangulation& tri,
                                  const NormalCoordinateVector& v,
                                  const BoundaryBasis* basis) {
  if (!is_admissible(tri, v))
    throw InadmissibleVectorError(
        "coordinate vector is not admissible (wrong length, negative entry, "
        "or two middle-piece types in one tetrahedron)");
  if (!satisfies_matching(tri, v))
    throw InadmissibleVectorError(
        "coordinate vector does not satisfy the matching equations");

  const int n = tri.tet_count;
  const bool oct_mode = v.mode == PieceMode::Octagonal;

  SurfaceSummary out;
  out.surface_class = SurfaceClass::Normal;

  // Per-tetrahedron piece counts, with the resource cap enforced in exact
  // arithmetic before any conversion.
  std::vector<TetData> td(static_cast<std::size_t>(n));
  {
    Int total = 0;
    for (Eigen::Index i = 0; i < v.coords.size(); ++i) total += v.coords(i);
    if (total > kMaxPieces)
      throw ResourceLimitError(
          static_cast<std::size_t>(kMaxPieces) + 1,
          static_cast<std::size_t>(kMaxPieces));
  }
  for (int t = 0; t < n; ++t) {
    TetData& d = td[static_cast<std::size_t>(t)];
    for (int c = 0; c < 4; ++c)
      d.T[c] = v.coords(tri_index(t, c, v.mode)).convert_to<long long>();
    for (int type = 0; type < 3; ++type) {
      Int q = v.coords(quad_index(t, type, v.mode));
      if (q != 0) {
        d.middle_kind = 1;
        d.middle_type = type;
        d.M = q.convert_to<long long>();
      }
      if (oct_mode) {
        Int o = v.coords(oct_index(t, type));
        if (o != 0) {
          d.middle_kind = 2;
          d.middle_type = type;
          d.M = o.convert_to<long long>();
          out.surface_class = SurfaceClass::Octagonal;
        }
      }
    }
  }

  // Weight of tetrahedron edge {u, v}: how many surface points lie on it.
  auto edge_weight = [&](int t, int u, int x) -> long long {
    const TetData& d = td[static_cast<std::size_t>(t)];
    long long w = d.T[u] + d.T[x];
    if (d.middle_kind == 1) {
      if (d.middle_type != pair_type(u, x)) w += d.M;
    } else if (d.middle_kind == 2) {
      w += (d.middle_type == pair_type(u, x)) ? 2 * d.M : d.M;
    }
    return w;
  };

  // ---- emit pieces and their boundary arcs ----
  std::vector<ArcRec> arcs;
  std::unordered_map<std::uint64_t, long long> arc_at;
  long long piece_count = 0;

  auto emit_cycle = [&](int t, const std::vector<std::array<int, 2>>& cyc,
                        auto&& depth_of_cut) {
    long long pid = piece_count++;
    const std::size_t m = cyc.size();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& e1 = cyc[i];
      const auto& e2 = cyc[(i + 1) % m];
      int cut, p;
      if (e1[0] == e2[0] || e1[0] == e2[1]) {
        cut = e1[0];
        p = e1[1];
      } else {
        cut = e1[1];
        p = e1[0];
      }
      int q = (e2[0] == cut) ? e2[1] : e2[0];
      int face = 6 - cut - p - q;
      ArcRec a;
      a.tet = t;
      a.face = face;
      a.cut = cut;
      a.depth = depth_of_cut(cut);
      a.piece = pid;
      a.dir = (p < q) ? 1 : -1;
      long long id = static_cast<long long>(arcs.size());
      if (!arc_at.emplace(arc_key(t, face, cut, a.depth), id).second)
        throw Error("internal: duplicate normal arc generated");
      arcs.push_back(a);
    }
  };

  for (int t = 0; t < n; ++t) {
    const TetData& d = td[static_cast<std::size_t>(t)];
    for (int c = 0; c < 4; ++c) {
      std::array<int, 3> others = face_vertices(c);
      std::vector<std::array<int, 2>> cyc = {
          {c, others[0]}, {c, others[1]}, {c, others[2]}};
      for (long long k = 0; k < d.T[c]; ++k)
        emit_cycle(t, cyc, [&](int) { return k; });
    }
    if (d.middle_kind == 0) continue;
    auto pr = pairs_of_type(d.middle_type);
    int a = pr[0][0], b = pr[0][1], c2 = pr[1][0], dd = pr[1][1];
    auto depth_fn = [&](long long j) {
      return [&, j](int cut) {
        bool in_first = (cut == a || cut == b);
        return d.T[cut] + (in_first ? j : d.M - 1 - j);
      };
    };
    if (d.middle_kind == 1) {
      std::vector<std::array<int, 2>> cyc = {
          {a, c2}, {a, dd}, {b, dd}, {b, c2}};
      for (long long j = 0; j < d.M; ++j) emit_cycle(t, cyc, depth_fn(j));
    } else {
      std::vector<std::array<int, 2>> cyc = {{a, b},  {a, c2}, {c2, dd},
                                             {c2, b}, {a, b},  {b, dd},
                                             {c2, dd}, {a, dd}};
      for (long long j = 0; j < d.M; ++j) emit_cycle(t, cyc, depth_fn(j));
    }
  }

  // ---- register the points where arcs meet tetrahedron edges ----
  std::unordered_map<std::uint64_t, long long> point_id;
  for (ArcRec& a : arcs) {
    std::array<int, 3> fv = face_vertices(a.face);
    int others[2], k = 0;
    for (int x : fv)
      if (x != a.cut) others[k++] = x;
    if (others[0] > others[1]) std::swap(others[0], others[1]);
    for (int e = 0; e < 2; ++e) {
      int x = others[e];
      long long w = edge_weight(a.tet, a.cut, x);
      long long hmin = (a.cut < x) ? a.depth : w - 1 - a.depth;
      if (hmin < 0 || hmin >= w)
        throw Error("internal: arc depth exceeds edge weight");
      std::uint64_t key = point_key(a.tet, a.cut, x, hmin);
      auto [it, fresh] =
          point_id.emplace(key, static_cast<long long>(point_id.size()));
      a.end_point[e] = it->second;
      a.end_other[e] = x;
      (void)fresh;
    }
  }

  // ---- glue arcs across face identifications ----
  std::vector<std::pair<long long, long long>> glued_pairs;
  for (const FaceGluing& g : tri.gluings) {
    for (int c = 0; c < 4; ++c) {
      if (c == g.a.face) continue;
      Int cnt = arc_count(tri, v, g.a.tet, g.a.face, c);
      long long count = cnt.convert_to<long long>();
      for (long long depth = 0; depth < count; ++depth) {
        long long ia = arc_at.at(arc_key(g.a.tet, g.a.face, c, depth));
        long long ib =
            arc_at.at(arc_key(g.b.tet, g.b.face, g.perm(c), depth));
        arcs[static_cast<std::size_t>(ia)].glued_to = ib;
        arcs[static_cast<std::size_t>(ib)].glued_to = ia;
        glued_pairs.emplace_back(ia, ib);
      }
    }
  }

  // ---- identify points along glued faces ----
  detail::UnionFind point_uf(point_id.size());
  for (const FaceGluing& g : tri.gluings) {
    std::array<int, 3> fv = face_vertices(g.a.face);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int x = fv[static_cast<std::size_t>(i)], y = fv[static_cast<std::size_t>(j)];
        int sx = g.perm(x), sy = g.perm(y);
        long long w = edge_weight(g.a.tet, x, y);
        for (long long h = 0; h < w; ++h) {  // h = height from x
          long long ha = (x < y) ? h : w - 1 - h;
          long long hb = (sx < sy) ? h : w - 1 - h;
          point_uf.unite(
              static_cast<std::size_t>(
                  point_id.at(point_key(g.a.tet, x, y, ha))),
              static_cast<std::size_t>(
                  point_id.at(point_key(g.b.tet, sx, sy, hb))));
        }
      }
  }

  // ---- Euler characteristic ----
  int point_class_count = 0;
  std::vector<int> point_class = point_uf.labels(&point_class_count);
  long long V = point_class_count;
  long long E = static_cast<long long>(arcs.size()) -
                static_cast<long long>(glued_pairs.size());
  long long F = piece_count;
  out.euler_characteristic = Int(V) - Int(E) + Int(F);

  // ---- connected components (pieces joined along glued arcs) ----
  std::vector<int> comp_of_piece;
  int comp_count = 0;
  {
    detail::UnionFind uf(static_cast<std::size_t>(piece_count));
    for (auto [ia, ib] : glued_pairs)
      uf.unite(static_cast<std::size_t>(arcs[static_cast<std::size_t>(ia)].piece),
               static_cast<std::size_t>(arcs[static_cast<std::size_t>(ib)].piece));
    comp_of_piece = uf.labels(&comp_count);
  }
  out.connected_components = comp_count;

  // ---- orientability: orient each piece's boundary cycle; a glued arc
  // must be traversed in opposite directions by its two pieces ----
  {
    std::map<std::pair<int, int>, Perm4> sigma_of_face;
    for (const FaceGluing& g : tri.gluings) {
      sigma_of_face[{g.a.tet, g.a.face}] = g.perm;
      sigma_of_face[{g.b.tet, g.b.face}] = g.perm.inverse();
    }
    detail::ParityUnionFind uf(static_cast<std::size_t>(piece_count));
    bool ok = true;
    for (auto [ia, ib] : glued_pairs) {
      const ArcRec& A = arcs[static_cast<std::size_t>(ia)];
      const ArcRec& B = arcs[static_cast<std::size_t>(ib)];
      // Does the gluing carry A's canonical direction to B's?
      const Perm4& sigma = sigma_of_face.at({A.tet, A.face});
      int flip = (sigma(A.end_other[0]) < sigma(A.end_other[1])) ? 1 : -1;
      int rel = (A.dir * B.dir * flip > 0) ? 1 : 0;
      if (!uf.unite(static_cast<std::size_t>(A.piece),
                    static_cast<std::size_t>(B.piece), rel))
        ok = false;
    }
    out.orientable = ok;
  }

  // ---- boundary curves ----
  struct End {
    long long arc;
    int end;
  };
  std::map<int, std::vector<End>> ends_at;  // point class -> incident ends
  std::vector<long long> boundary_arcs;
  for (long long i = 0; i < static_cast<long long>(arcs.size()); ++i) {
    const ArcRec& a = arcs[static_cast<std::size_t>(i)];
    if (a.glued_to >= 0) continue;
    boundary_arcs.push_back(i);
    for (int e = 0; e < 2; ++e)
      ends_at[point_class[static_cast<std::size_t>(a.end_point[e])]].push_back(
          {i, e});
  }
  for (const auto& [cls, lst] : ends_at)
    if (lst.size() != 2)
      throw Error(
          "internal: boundary arcs do not chain into curves (degenerate "
          "boundary identifications)");

  // Map a boundary-arc end to the half-edge of the boundary surface it
  // exits through, for slope bookkeeping.
  const BoundarySurface* S = basis ? &basis->surface : nullptr;
  std::map<std::pair<int, int>, int> surf_tri_index;
  if (S)
    for (std::size_t i = 0; i < S->triangles.size(); ++i)
      surf_tri_index[{S->triangles[i].tet, S->triangles[i].face}] =
          static_cast<int>(i);
  auto exit_half_edge = [&](const ArcRec& a, int e) -> int {
    int bi = surf_tri_index.at({a.tet, a.face});
    const auto& T = S->triangles[static_cast<std::size_t>(bi)];
    int slot_cut = -1, slot_other = -1;
    for (int s = 0; s < 3; ++s) {
      if (T.corners[static_cast<std::size_t>(s)] == a.cut) slot_cut = s;
      if (T.corners[static_cast<std::size_t>(s)] == a.end_other[e])
        slot_other = s;
    }
    for (int s = 0; s < 3; ++s) {
      int s2 = (s + 1) % 3;
      if ((s == slot_cut && s2 == slot_other) ||
          (s == slot_other && s2 == slot_cut))
        return 3 * bi + s;
    }
    throw Error("internal: boundary arc end is not on a triangle side");
  };

  std::vector<std::pair<Int, Int>> curve_classes;
  std::vector<bool> arc_done(arcs.size(), false);
  long long curve_count = 0;
  for (long long start : boundary_arcs) {
    if (arc_done[static_cast<std::size_t>(start)]) continue;
    ++curve_count;
    Int i_mu = 0, i_lambda = 0;
    long long cur = start;
    int entry = 0;
    while (true) {
      arc_done[static_cast<std::size_t>(cur)] = true;
      const ArcRec& a = arcs[static_cast<std::size_t>(cur)];
      int exit = 1 - entry;
      if (S) {
        int h = exit_half_edge(a, exit);
        int ec = S->edge_class_of_side[static_cast<std::size_t>(h)];
        Int sgn =
            (h == S->canonical_half_edge[static_cast<std::size_t>(ec)]) ? -1
                                                                        : 1;
        i_mu += sgn * basis->mu(ec);
        i_lambda += sgn * basis->lambda(ec);
      }
      int cls = point_class[static_cast<std::size_t>(a.end_point[exit])];
      const auto& lst = ends_at.at(cls);
      End next = (lst[0].arc == cur && lst[0].end == exit) ? lst[1] : lst[0];
      if (next.arc == start && next.end == 0) break;
      cur = next.arc;
      entry = next.end;
    }
    if (S) {
      Int eps = basis->intersection;
      curve_classes.emplace_back(eps * i_lambda, -eps * i_mu);
    }
  }
  out.boundary_curve_count = curve_count;

  // ---- common slope of the boundary curves ----
  if (curve_count == 0) {
    out.slope_absent_reason = "closed";
  } else if (!S) {
    out.slope_absent_reason = "no-boundary-basis";
  } else {
    std::optional<Slope> slope;
    for (const auto& [p, q] : curve_classes) {
      if (p == 0 && q == 0) continue;
      if (gcd(p, q) != 1)
        throw Error("internal: boundary curve class is not primitive");
      Slope s = make_slope(p, q);
      if (!slope)
        slope = s;
      else if (!(*slope == s))
        throw Error("internal: boundary curves with non-parallel classes");
    }
    if (slope) {
      out.slope = slope;
    } else {
      out.slope_absent_reason = "null-homologous";
    }
  }
  return out;
}

SurfaceSummary surface_properties(const Triangulation& tri,
                                  const NormalCoordinateVector& v) {
  if (validate(tri).is_knot_manifold_shaped) {
    BoundaryBasis basis = boundary_basis(tri);
    return surface_properties(tri, v, &basis);
  }
  return surface_properties(tri, v, nullptr);
}

}  // namespace slopecert
