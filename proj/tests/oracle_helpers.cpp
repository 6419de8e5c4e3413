#include "oracle_helpers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "corpus.hpp"

namespace oracle {

using slopecert::GluingMatrix;
using slopecert::Int;
using slopecert::NormalCoordinateVector;
using slopecert::PieceMode;
using slopecert::Slope;
using slopecert::Triangulation;

namespace {

/** Normalize an integer pair to slope normal form (q > 0, or (1, 0)). */
std::pair<long long, long long> norm(long long p, long long q) {
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

FareyGraph::FareyGraph(long long box) : box_(box) {
  index_.assign(static_cast<std::size_t>((2 * box + 1) * (box + 1)), -1);
  auto slot = [&](long long p, long long q) -> int& {
    return index_[static_cast<std::size_t>((p + box_) * (box_ + 1) + q)];
  };
  for (long long q = 0; q <= box; ++q)
    for (long long p = -box; p <= box; ++p) {
      if (q == 0 && p != 1) continue;
      if (p == 0 && q != 1) continue;
      if (q > 0 && gcd_ll(std::abs(p), q) != 1) continue;
      slot(p, q) = static_cast<int>(nodes_ll_.size());
      nodes_ll_.emplace_back(p, q);
      nodes_.push_back(slopecert::make_slope(Int(p), Int(q)));
    }
  adj_.resize(nodes_ll_.size());

  // Solutions (r, s) of p*s - q*r = 1 form the family (r0 + k p, s0 + k q);
  // together with their negations (the -1 family) these are exactly the
  // slopes at intersection number one from (p, q).
  for (std::size_t i = 0; i < nodes_ll_.size(); ++i) {
    auto [p, q] = nodes_ll_[i];
    slopecert::ExtendedGcd eg = slopecert::extended_gcd(Int(p), Int(q));
    // p*s + q*t = 1  ->  p*s - q*(-t) = 1.
    long long s0 = static_cast<long long>(eg.s);
    long long r0 = static_cast<long long>(-eg.t);
    for (long long k = -2 * box_ - 2; k <= 2 * box_ + 2; ++k) {
      long long r = r0 + k * p, s = s0 + k * q;
      auto [np, nq] = norm(r, s);
      if (nq > box_ || np > box_ || np < -box_) continue;
      int j = slot(np, nq);
      if (j >= 0 && j != static_cast<int>(i))
        adj_[i].push_back(j);
    }
    std::sort(adj_[i].begin(), adj_[i].end());
    adj_[i].erase(std::unique(adj_[i].begin(), adj_[i].end()), adj_[i].end());
  }
}

int FareyGraph::id(const Slope& s) const {
  long long p = static_cast<long long>(s.p), q = static_cast<long long>(s.q);
  if (q > box_ || p > box_ || p < -box_) return -1;
  return index_[static_cast<std::size_t>((p + box_) * (box_ + 1) + q)];
}

std::vector<int> FareyGraph::distances_from(const Slope& src) const {
  int s = id(src);
  if (s < 0) throw std::out_of_range("BFS source outside the Farey box");
  std::vector<int> dist(nodes_.size(), -1);
  std::deque<int> queue{s};
  dist[static_cast<std::size_t>(s)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] =
            dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

std::vector<NormalCoordinateVector> brute_force_solutions(
    const Triangulation& tri, PieceMode mode, int max_entry) {
  const int cpt = coords_per_tet(mode);
  const int dim = cpt * tri.tet_count;
  slopecert::IntMatrix eqs = matching_equations(tri, mode);
  std::vector<std::vector<long long>> rows(
      static_cast<std::size_t>(eqs.rows()));
  for (Eigen::Index r = 0; r < eqs.rows(); ++r) {
    rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(dim));
    for (Eigen::Index c = 0; c < eqs.cols(); ++c)
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          static_cast<long long>(eqs(r, c));
  }

  std::vector<NormalCoordinateVector> out;
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  while (true) {
    // Check the current assignment (skipping the zero vector).
    bool any = std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
    if (any) {
      bool ok = true;
      for (int t = 0; t < tri.tet_count && ok; ++t) {
        int quadlike = 0;
        for (int k = 4; k < cpt; ++k)
          if (v[static_cast<std::size_t>(cpt * t + k)] > 0) ++quadlike;
        ok = quadlike <= 1;
      }
      for (const auto& row : rows) {
        if (!ok) break;
        long long sum = 0;
        for (int c = 0; c < dim; ++c)
          sum += row[static_cast<std::size_t>(c)] *
                 v[static_cast<std::size_t>(c)];
        ok = sum == 0;
      }
      if (ok) {
        NormalCoordinateVector nv;
        nv.mode = mode;
        nv.coords = slopecert::IntVector::Zero(dim);
        for (int c = 0; c < dim; ++c)
          nv.coords(c) = v[static_cast<std::size_t>(c)];
        out.push_back(nv);
      }
    }
    // Odometer step.
    int pos = 0;
    while (pos < dim && v[static_cast<std::size_t>(pos)] == max_entry)
      v[static_cast<std::size_t>(pos++)] = 0;
    if (pos == dim) break;
    ++v[static_cast<std::size_t>(pos)];
  }
  return out;
}

bool brute_force_orientable(const Triangulation& tri) {
  const int n = tri.tet_count;
  if (n > 20) throw std::invalid_argument("too many tetrahedra");
  for (unsigned long sigma = 0; sigma < (1ul << n); ++sigma) {
    bool ok = true;
    for (const slopecert::FaceGluing& g : tri.gluings) {
      int sa = (sigma >> g.a.tet) & 1, sb = (sigma >> g.b.tet) & 1;
      bool opposite = sa != sb;
      if (opposite != (g.perm.sign() > 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Slope random_slope(std::mt19937& rng, long long box) {
  std::uniform_int_distribution<long long> d(-box, box);
  while (true) {
    long long p = d(rng), q = d(rng);
    if (p == 0 && q == 0) continue;
    long long g = gcd_ll(std::abs(p), std::abs(q));
    return slopecert::make_slope(Int(p / g), Int(q / g));
  }
}

GluingMatrix random_unimodular(std::mt19937& rng, int word_len) {
  GluingMatrix s = slopecert::make_gluing_matrix(0, -1, 1, 0);
  GluingMatrix t = slopecert::make_gluing_matrix(1, 1, 0, 1);
  GluingMatrix t_inv = slopecert::make_gluing_matrix(1, -1, 0, 1);
  GluingMatrix out = slopecert::make_gluing_matrix(1, 0, 0, 1);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < word_len; ++i) {
    switch (pick(rng)) {
      case 0: out = slopecert::compose(out, s); break;
      case 1: out = slopecert::compose(out, t); break;
      default: out = slopecert::compose(out, t_inv); break;
    }
  }
  return out;
}

}  // namespace oracle

namespace corpus {

std::vector<std::pair<std::string, std::string>> knot_shaped_corpus() {
  return {
      {"solid-torus-1", kSolidTorus},
      {"knot-2", kKnotTwoTet},
      {"knot-3", kKnotThreeTet},
  };
}

std::vector<std::pair<std::string, std::string>> small_corpus() {
  std::vector<std::pair<std::string, std::string>> out = {
      {"ball", kBall},
      {"bipyramid", kBipyramid},
      {"nonorientable-1", kNonorientableTet},
      {"closed-1", kClosedOneTet},
  };
  for (auto& e : knot_shaped_corpus()) out.push_back(e);
  return out;
}

}  // namespace corpus
