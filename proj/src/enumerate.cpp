#include "slopecert/enumerate.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "slopecert/errors.hpp"

namespace slopecert {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct Ray {
  IntVector x;
  ZeroSet zeros;  // bit i set <=> x(i) == 0
};

ZeroSet zero_set(const IntVector& x) {
  ZeroSet z(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) == 0) z.set(static_cast<std::size_t>(i));
  return z;
}

/** Support family containing every admissible final vector's support and
 *  closed under taking subsets, so pruning to it never removes an extreme
 *  ray of an admissible face of the cone. */
bool support_ok(const ZeroSet& zeros, int tet_count, PieceMode mode) {
  const int cpt = coords_per_tet(mode);
  int oct_nonzero = 0;
  for (int t = 0; t < tet_count; ++t) {
    int nonzero_types = 0;
    for (int k = 4; k < cpt; ++k) {
      std::size_t idx = static_cast<std::size_t>(t * cpt + k);
      if (!zeros.test(idx)) {
        ++nonzero_types;
        if (mode == PieceMode::Octagonal && k >= 7) ++oct_nonzero;
      }
    }
    if (nonzero_types > 1) return false;
  }
  return oct_nonzero <= 1;
}

std::vector<Int> key_of(const IntVector& x) {
  std::vector<Int> k(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    k[static_cast<std::size_t>(i)] = x(i);
  return k;
}

}  // namespace

std::vector<NormalCoordinateVector> enumerate_vertex_surfaces(
    const Triangulation& tri, const EnumerationOptions& options) {
  const int cpt = coords_per_tet(options.mode);
  const Eigen::Index dim = static_cast<Eigen::Index>(tri.tet_count) * cpt;
  const std::size_t cap = options.max_intermediate_rays;

  auto check_cap = [&](std::size_t count) {
    if (count > cap) throw ResourceLimitError(count, cap);
  };

  std::vector<Ray> rays;
  check_cap(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    Ray r;
    r.x = IntVector::Zero(dim);
    r.x(i) = 1;
    r.zeros = zero_set(r.x);
    rays.push_back(std::move(r));
  }

  IntMatrix eqs = matching_equations(tri, options.mode);

  for (Eigen::Index row = 0; row < eqs.rows(); ++row) {
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      Int s = 0;
      for (Eigen::Index j = 0; j < dim; ++j)
        if (eqs(row, j) != 0) s += eqs(row, j) * rays[i].x(j);
      val[i] = s;
      if (s == 0)
        next.push_back(rays[i]);
      else if (s > 0)
        pos.push_back(i);
      else
        neg.push_back(i);
    }
    check_cap(next.size());

    std::set<std::vector<Int>> seen;
    for (const Ray& r : next) seen.insert(key_of(r.x));

    for (std::size_t iu : pos) {
      for (std::size_t iv : neg) {
        // Combinatorial adjacency: no third ray's zero set contains the
        // common zero set of the pair.
        ZeroSet common = rays[iu].zeros & rays[iv].zeros;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size(); ++k) {
          if (k == iu || k == iv) continue;
          if (common.is_subset_of(rays[k].zeros)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;

        Ray w;
        w.x = val[iu] * rays[iv].x - val[iv] * rays[iu].x;
        make_primitive(w.x);
        w.zeros = zero_set(w.x);
        if (options.prune_during_pivot &&
            !support_ok(w.zeros, tri.tet_count, options.mode))
          continue;
        if (!seen.insert(key_of(w.x)).second) continue;
        next.push_back(std::move(w));
        check_cap(next.size());
      }
    }
    rays = std::move(next);
  }

  std::vector<NormalCoordinateVector> out;
  for (Ray& r : rays) {
    NormalCoordinateVector v;
    v.mode = options.mode;
    v.coords = std::move(r.x);
    if (is_enumeration_admissible(tri, v)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(),
            [](const NormalCoordinateVector& a, const NormalCoordinateVector& b) {
              for (Eigen::Index i = 0; i < a.coords.size(); ++i) {
                if (a.coords(i) != b.coords(i)) return a.coords(i) < b.coords(i);
              }
              return false;
            });
  return out;
}

}  // namespace slopecert
