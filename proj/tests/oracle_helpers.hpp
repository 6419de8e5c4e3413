#ifndef SLOPECERT_TESTS_ORACLE_HELPERS_HPP
#define SLOPECERT_TESTS_ORACLE_HELPERS_HPP

#include <random>
#include <vector>

#include "slopecert/farey.hpp"
#include "slopecert/normal_coords.hpp"
#include "slopecert/triangulation.hpp"

namespace oracle {

/** The Farey graph restricted to normalized slopes with |p| <= box and
 *  q <= box, adjacency = geometric intersection number one.  Built once;
 *  breadth-first searched many times.  Entirely independent of the
 *  library's distance algorithm. */
class FareyGraph {
 public:
  explicit FareyGraph(long long box);

  /** Node index of a normalized slope, or -1 if outside the box. */
  int id(const slopecert::Slope& s) const;

  /** BFS distances from src to every node; -1 where unreachable. */
  std::vector<int> distances_from(const slopecert::Slope& src) const;

  const std::vector<slopecert::Slope>& nodes() const { return nodes_; }

 private:
  long long box_;
  std::vector<std::pair<long long, long long>> nodes_ll_;
  std::vector<slopecert::Slope> nodes_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> index_;  // (p + box) * (box + 1) + q -> node id
};

/** Every admissible non-zero solution of the matching equations with all
 *  coordinates in [0, max_entry], by exhaustive odometer search.  Use on
 *  small systems only. */
std::vector<slopecert::NormalCoordinateVector> brute_force_solutions(
    const slopecert::Triangulation& tri, slopecert::PieceMode mode,
    int max_entry);

/** Orientability by exhaustive search over all 2^t tetrahedron
 *  orientations (gluings with even permutations force opposite
 *  orientations, odd permutations force equal ones). */
bool brute_force_orientable(const slopecert::Triangulation& tri);

/** Uniform random normalized slope with |p|, q <= box. */
slopecert::Slope random_slope(std::mt19937& rng, long long box);

/** Random element of SL(2, Z): a word of the given length in the two
 *  standard generators and their inverses. */
slopecert::GluingMatrix random_unimodular(std::mt19937& rng, int word_len);

}  // namespace oracle

#endif  // SLOPECERT_TESTS_ORACLE_HELPERS_HPP
