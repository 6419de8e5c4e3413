#include "slopecert/boundary.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "internal_util.hpp"
#include "slopecert/errors.hpp"

namespace slopecert {

int BoundarySurface::next(int h) const {
  int i = h / 3, s = h % 3;
  int o = triangles[static_cast<std::size_t>(i)].orient;
  return 3 * i + (o > 0 ? (s + 1) % 3 : (s + 2) % 3);
}

int BoundarySurface::tail_slot(int h) const {
  int s = h % 3;
  return triangles[static_cast<std::size_t>(h / 3)].orient > 0 ? s
                                                               : (s + 1) % 3;
}

int BoundarySurface::head_slot(int h) const {
  int s = h % 3;
  return triangles[static_cast<std::size_t>(h / 3)].orient > 0 ? (s + 1) % 3
                                                               : s;
}

int BoundarySurface::tail_vertex_class(int h) const {
  return vertex_class_of_corner[static_cast<std::size_t>(3 * (h / 3) +
                                                         tail_slot(h))];
}

int BoundarySurface::head_vertex_class(int h) const {
  return vertex_class_of_corner[static_cast<std::size_t>(3 * (h / 3) +
                                                         head_slot(h))];
}

int BoundarySurface::rotate(int h) const { return next(twin[static_cast<std::size_t>(h)]); }

namespace {

std::array<int, 3> face_vertices(int face) {
  std::array<int, 3> vs{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) vs[static_cast<std::size_t>(k++)] = v;
  return vs;
}

struct GluedSide {
  const FaceGluing* g = nullptr;
  bool from_a = true;
};

}  // namespace

BoundarySurface boundary_surface(const Triangulation& tri) {
  BoundarySurface S;

  std::map<std::pair<int, int>, GluedSide> glued;
  for (const FaceGluing& g : tri.gluings) {
    glued[{g.a.tet, g.a.face}] = {&g, true};
    glued[{g.b.tet, g.b.face}] = {&g, false};
  }

  std::map<std::pair<int, int>, int> tri_index;
  for (const FaceRef& fr : boundary_faces(tri)) {
    BoundarySurface::Tri t;
    t.tet = fr.tet;
    t.face = fr.face;
    t.corners = face_vertices(fr.face);  // ascending by construction
    tri_index[{fr.tet, fr.face}] = static_cast<int>(S.triangles.size());
    S.triangles.push_back(t);
  }

  const int B = static_cast<int>(S.triangles.size());
  constexpr int kUnset = -2;
  S.twin.assign(static_cast<std::size_t>(3 * B), kUnset);
  S.side_image_of_low_corner.assign(static_cast<std::size_t>(3 * B), -1);

  // Pair boundary sides by walking through the interior around each edge:
  // state (tet, {a, b}, crossing face), crossing carries the walk through
  // face gluings until an unglued face is reached.
  const int max_steps = 12 * tri.tet_count + 12;
  for (int h = 0; h < 3 * B; ++h) {
    if (S.twin[static_cast<std::size_t>(h)] != kUnset) continue;
    const BoundarySurface::Tri& T0 = S.triangles[static_cast<std::size_t>(h / 3)];
    int s = h % 3;
    int u0 = T0.corners[static_cast<std::size_t>(s)];
    int u1 = T0.corners[static_cast<std::size_t>((s + 1) % 3)];
    int cur_tet = T0.tet;
    int a = u0, b = u1, cross = T0.corners[static_cast<std::size_t>((s + 2) % 3)];

    int steps = 0;
    while (true) {
      if (++steps > max_steps) {
        S.twin[static_cast<std::size_t>(h)] = -1;
        S.side_image_of_low_corner[static_cast<std::size_t>(h)] = u0;
        S.closed_surface_ok = false;
        break;
      }
      auto it = glued.find({cur_tet, cross});
      if (it == glued.end()) {
        // Unglued face reached; locate the partner side {a, b} there.
        int tj = tri_index.at({cur_tet, cross});
        const BoundarySurface::Tri& T1 = S.triangles[static_cast<std::size_t>(tj)];
        int s1 = -1;
        for (int k = 0; k < 3; ++k) {
          int x = T1.corners[static_cast<std::size_t>(k)];
          int y = T1.corners[static_cast<std::size_t>((k + 1) % 3)];
          if ((x == a && y == b) || (x == b && y == a)) {
            s1 = k;
            break;
          }
        }
        int h1 = 3 * tj + s1;
        if (h1 == h || S.twin[static_cast<std::size_t>(h1)] != kUnset) {
          // The side pairs with itself (or the pairing is inconsistent):
          // not a closed surface.
          S.twin[static_cast<std::size_t>(h)] = -1;
          S.side_image_of_low_corner[static_cast<std::size_t>(h)] = u0;
          S.closed_surface_ok = false;
        } else {
          S.twin[static_cast<std::size_t>(h)] = h1;
          S.twin[static_cast<std::size_t>(h1)] = h;
          S.side_image_of_low_corner[static_cast<std::size_t>(h)] = a;
          S.side_image_of_low_corner[static_cast<std::size_t>(h1)] =
              (T1.corners[static_cast<std::size_t>(s1)] == a) ? u0 : u1;
        }
        break;
      }
      const FaceGluing* g = it->second.g;
      Perm4 sigma = it->second.from_a ? g->perm : g->perm.inverse();
      int next_tet = it->second.from_a ? g->b.tet : g->a.tet;
      int fourth = 6 - a - b - cross;
      int na = sigma(a), nb = sigma(b), ncross = sigma(fourth);
      a = na;
      b = nb;
      cross = ncross;
      cur_tet = next_tet;
    }
  }

  // Vertex classes: identify side-end corners across each pairing.
  {
    detail::UnionFind uf(static_cast<std::size_t>(3 * B));
    for (int h = 0; h < 3 * B; ++h) {
      int h1 = S.twin[static_cast<std::size_t>(h)];
      if (h1 <= h) continue;  // one direction per pair; skips -1
      int i = h / 3, s = h % 3;
      int j = h1 / 3, s1 = h1 % 3;
      const auto& Ti = S.triangles[static_cast<std::size_t>(i)];
      const auto& Tj = S.triangles[static_cast<std::size_t>(j)];
      int image_low = S.side_image_of_low_corner[static_cast<std::size_t>(h)];
      int slot_img =
          (Tj.corners[static_cast<std::size_t>(s1)] == image_low) ? s1 : (s1 + 1) % 3;
      int slot_other = (slot_img == s1) ? (s1 + 1) % 3 : s1;
      uf.unite(static_cast<std::size_t>(3 * i + s),
               static_cast<std::size_t>(3 * j + slot_img));
      uf.unite(static_cast<std::size_t>(3 * i + (s + 1) % 3),
               static_cast<std::size_t>(3 * j + slot_other));
      (void)Ti;
    }
    S.vertex_class_of_corner = uf.labels(&S.vertex_class_count);
  }

  // Edge classes: one per twin pair, one per degenerate (self-paired) side.
  S.edge_class_of_side.assign(static_cast<std::size_t>(3 * B), -1);
  for (int h = 0; h < 3 * B; ++h) {
    if (S.edge_class_of_side[static_cast<std::size_t>(h)] >= 0) continue;
    int e = S.edge_class_count++;
    S.edge_class_of_side[static_cast<std::size_t>(h)] = e;
    int h1 = S.twin[static_cast<std::size_t>(h)];
    if (h1 >= 0) S.edge_class_of_side[static_cast<std::size_t>(h1)] = e;
    S.canonical_half_edge.push_back(h);
  }

  // Connected components of the surface.
  std::vector<int> comp_of_tri;
  {
    detail::UnionFind uf(static_cast<std::size_t>(B));
    for (int h = 0; h < 3 * B; ++h) {
      int h1 = S.twin[static_cast<std::size_t>(h)];
      if (h1 > h) uf.unite(static_cast<std::size_t>(h / 3), static_cast<std::size_t>(h1 / 3));
    }
    comp_of_tri = uf.labels(&S.component_count);
  }
  for (int i = 0; i < B; ++i)
    S.triangles[static_cast<std::size_t>(i)].component = comp_of_tri[static_cast<std::size_t>(i)];

  // Orientation: a pairing that carries the reference direction of one side
  // to the reference direction of the other forces opposite triangle
  // orientations (parity 1); otherwise equal (parity 0).
  std::vector<bool> comp_nonorientable(static_cast<std::size_t>(S.component_count), false);
  {
    detail::ParityUnionFind uf(static_cast<std::size_t>(B));
    for (int h = 0; h < 3 * B; ++h) {
      int h1 = S.twin[static_cast<std::size_t>(h)];
      if (h1 <= h) continue;
      int i = h / 3, s = h % 3;
      int j = h1 / 3, s1 = h1 % 3;
      const auto& Tj = S.triangles[static_cast<std::size_t>(j)];
      bool ref_agrees =
          S.side_image_of_low_corner[static_cast<std::size_t>(h)] ==
          Tj.corners[static_cast<std::size_t>(s1)];
      int rel = ref_agrees ? 1 : 0;
      if (!uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j), rel)) {
        comp_nonorientable[static_cast<std::size_t>(comp_of_tri[static_cast<std::size_t>(i)])] =
            true;
        (void)s;
        (void)s1;
      }
    }
    for (int i = 0; i < B; ++i)
      S.triangles[static_cast<std::size_t>(i)].orient =
          uf.parity(static_cast<std::size_t>(i)) == 0 ? 1 : -1;
  }

  // Per-component summaries: Euler characteristic and genus.
  std::vector<bool> comp_degenerate(static_cast<std::size_t>(S.component_count), false);
  std::vector<long long> vcount(static_cast<std::size_t>(S.component_count), 0);
  std::vector<long long> ecount(static_cast<std::size_t>(S.component_count), 0);
  std::vector<long long> fcount(static_cast<std::size_t>(S.component_count), 0);
  {
    std::vector<bool> vclass_seen(static_cast<std::size_t>(S.vertex_class_count), false);
    for (int c = 0; c < 3 * B; ++c) {
      int vc = S.vertex_class_of_corner[static_cast<std::size_t>(c)];
      if (vclass_seen[static_cast<std::size_t>(vc)]) continue;
      vclass_seen[static_cast<std::size_t>(vc)] = true;
      ++vcount[static_cast<std::size_t>(comp_of_tri[static_cast<std::size_t>(c / 3)])];
    }
    for (int e = 0; e < S.edge_class_count; ++e) {
      int h = S.canonical_half_edge[static_cast<std::size_t>(e)];
      int comp = comp_of_tri[static_cast<std::size_t>(h / 3)];
      ++ecount[static_cast<std::size_t>(comp)];
      if (S.twin[static_cast<std::size_t>(h)] < 0)
        comp_degenerate[static_cast<std::size_t>(comp)] = true;
    }
    for (int i = 0; i < B; ++i)
      ++fcount[static_cast<std::size_t>(comp_of_tri[static_cast<std::size_t>(i)])];
  }
  for (int c = 0; c < S.component_count; ++c) {
    BoundaryComponentSummary sum;
    sum.euler_characteristic = vcount[static_cast<std::size_t>(c)] -
                               ecount[static_cast<std::size_t>(c)] +
                               fcount[static_cast<std::size_t>(c)];
    sum.orientable = !comp_nonorientable[static_cast<std::size_t>(c)];
    if (!comp_degenerate[static_cast<std::size_t>(c)]) {
      long long chi = sum.euler_characteristic;
      if (sum.orientable) {
        if ((2 - chi) % 2 == 0 && chi <= 2) sum.genus = (2 - chi) / 2;
      } else {
        sum.genus = 2 - chi;  // crosscap genus
      }
    }
    if (!sum.orientable) S.orientable = false;
    S.components.push_back(sum);
  }

  return S;
}

IntVector walk_coefficients(const BoundarySurface& surf,
                            const std::vector<int>& walk) {
  IntVector z = IntVector::Zero(surf.edge_class_count);
  for (int h : walk) {
    int e = surf.edge_class_of_side[static_cast<std::size_t>(h)];
    z(e) += (h == surf.canonical_half_edge[static_cast<std::size_t>(e)]) ? 1 : -1;
  }
  return z;
}

Int pushoff_intersection(const BoundarySurface& surf,
                         const std::vector<int>& walk,
                         const IntVector& cycle_coeffs) {
  Int total = 0;
  const std::size_t n = walk.size();
  const int limit = static_cast<int>(surf.twin.size()) + 1;
  for (std::size_t k = 0; k < n; ++k) {
    int h_in = walk[k];
    int h_out = walk[(k + 1) % n];
    // The push-off enters the corner at twin(h_in) and leaves at h_out; it
    // crosses every outgoing end strictly between them in rotation order.
    int g = surf.next(h_in);  // = rotate(twin(h_in))
    int guard = 0;
    while (g != h_out) {
      if (++guard > limit)
        throw Error("internal: rotation order around a vertex did not close");
      int e = surf.edge_class_of_side[static_cast<std::size_t>(g)];
      Int dir = (g == surf.canonical_half_edge[static_cast<std::size_t>(e)]) ? 1 : -1;
      total += dir * cycle_coeffs(e);
      g = surf.rotate(g);
    }
  }
  return total;
}

BoundaryBasis boundary_basis(const Triangulation& tri) {
  ValidationReport rep = validate(tri);
  if (!rep.is_knot_manifold_shaped) {
    std::string why = "not knot-manifold-shaped:";
    for (const std::string& s : rep.diagnostics)
      if (s != "not knot-manifold-shaped") why += " [" + s + "]";
    throw NotAKnotManifoldError(why);
  }

  BoundaryBasis B;
  B.surface = boundary_surface(tri);
  const BoundarySurface& S = B.surface;
  const int E = S.edge_class_count;

  // Primal spanning tree on vertex classes, taking edge classes in id
  // order; then a cotree on triangles from the remaining classes.  On a
  // torus exactly two classes are left over; their tree-closed cycles are
  // the basis.
  std::vector<char> in_tree(static_cast<std::size_t>(E), 0);
  {
    detail::UnionFind uf(static_cast<std::size_t>(S.vertex_class_count));
    for (int e = 0; e < E; ++e) {
      int h = S.canonical_half_edge[static_cast<std::size_t>(e)];
      if (uf.unite(static_cast<std::size_t>(S.tail_vertex_class(h)),
                   static_cast<std::size_t>(S.head_vertex_class(h))))
        in_tree[static_cast<std::size_t>(e)] = 1;
    }
  }
  std::vector<char> in_cotree(static_cast<std::size_t>(E), 0);
  {
    detail::UnionFind uf(S.triangles.size());
    for (int e = 0; e < E; ++e) {
      if (in_tree[static_cast<std::size_t>(e)]) continue;
      int h = S.canonical_half_edge[static_cast<std::size_t>(e)];
      int h1 = S.twin[static_cast<std::size_t>(h)];
      if (uf.unite(static_cast<std::size_t>(h / 3), static_cast<std::size_t>(h1 / 3)))
        in_cotree[static_cast<std::size_t>(e)] = 1;
    }
  }
  std::vector<int> leftover;
  for (int e = 0; e < E; ++e)
    if (!in_tree[static_cast<std::size_t>(e)] && !in_cotree[static_cast<std::size_t>(e)])
      leftover.push_back(e);
  if (leftover.size() != 2)
    throw Error("internal: torus tree/cotree decomposition left " +
                std::to_string(leftover.size()) + " classes");

  // Parent pointers in the primal tree (paths are walked child -> parent).
  std::vector<int> up_he(static_cast<std::size_t>(S.vertex_class_count), -1);
  std::vector<int> order;
  {
    std::vector<std::vector<std::pair<int, int>>> adj(
        static_cast<std::size_t>(S.vertex_class_count));
    for (int e = 0; e < E; ++e) {
      if (!in_tree[static_cast<std::size_t>(e)]) continue;
      int h = S.canonical_half_edge[static_cast<std::size_t>(e)];
      adj[static_cast<std::size_t>(S.tail_vertex_class(h))].push_back(
          {S.head_vertex_class(h), h});
      adj[static_cast<std::size_t>(S.head_vertex_class(h))].push_back(
          {S.tail_vertex_class(h), S.twin[static_cast<std::size_t>(h)]});
    }
    std::vector<bool> seen(static_cast<std::size_t>(S.vertex_class_count), false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      int u = order[qi];
      for (auto [v, h] : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = true;
        up_he[static_cast<std::size_t>(v)] = S.twin[static_cast<std::size_t>(h)];  // v -> u
        order.push_back(v);
      }
    }
  }
  auto path_to_root = [&](int v) {
    std::vector<int> hes;
    while (up_he[static_cast<std::size_t>(v)] >= 0) {
      int h = up_he[static_cast<std::size_t>(v)];
      hes.push_back(h);
      v = S.head_vertex_class(h);
    }
    return hes;
  };
  auto cycle_for = [&](int e) {
    int h = S.canonical_half_edge[static_cast<std::size_t>(e)];
    std::vector<int> a = path_to_root(S.head_vertex_class(h));
    std::vector<int> b = path_to_root(S.tail_vertex_class(h));
    while (!a.empty() && !b.empty() && a.back() == b.back()) {
      a.pop_back();
      b.pop_back();
    }
    std::vector<int> walk;
    walk.push_back(h);
    for (int x : a) walk.push_back(x);
    for (auto it = b.rbegin(); it != b.rend(); ++it)
      walk.push_back(S.twin[static_cast<std::size_t>(*it)]);
    for (std::size_t k = 0; k < walk.size(); ++k)
      if (S.head_vertex_class(walk[k]) !=
          S.tail_vertex_class(walk[(k + 1) % walk.size()]))
        throw Error("internal: basis cycle is not a closed walk");
    return walk;
  };

  B.mu_walk = cycle_for(leftover[0]);
  B.lambda_walk = cycle_for(leftover[1]);
  B.mu = walk_coefficients(S, B.mu_walk);
  B.lambda = walk_coefficients(S, B.lambda_walk);
  B.intersection = pushoff_intersection(S, B.mu_walk, B.lambda);
  if (B.intersection != 1 && B.intersection != -1)
    throw Error("internal: basis intersection number is " +
                B.intersection.str() + ", expected +1 or -1");
  return B;
}

}  // namespace slopecert
