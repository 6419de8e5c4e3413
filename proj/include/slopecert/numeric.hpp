#ifndef SLOPECERT_NUMERIC_HPP
#define SLOPECERT_NUMERIC_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

namespace slopecert {

/** Arbitrary-precision integer (GMP-backed).  Every quantity in the core
 *  pipelines is exact; no floating point is used anywhere. */
using Int = boost::multiprecision::mpz_int;

/** Arbitrary-precision rational, used by the genus-bound calculators. */
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = DenseVector<Int>;
using IntMatrix = DenseMatrix<Int>;
using Mat2 = Eigen::Matrix<Int, 2, 2>;
using Vec2 = Eigen::Matrix<Int, 2, 1>;

/** gcd of |a| and |b|; gcd(0, 0) = 0.  Always nonnegative. */
inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/** Result of the extended Euclidean algorithm: a*s + b*t = g >= 0. */
struct ExtendedGcd {
  Int g;
  Int s;
  Int t;
};

/** Extended gcd with g = gcd(|a|, |b|) and a*s + b*t = g. */
ExtendedGcd extended_gcd(const Int& a, const Int& b);

/** Divide a dense integer vector by the gcd of its entries.  The zero
 *  vector is left unchanged. */
template <typename Derived>
void make_primitive(Eigen::MatrixBase<Derived>& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
}

}  // namespace slopecert

#endif  // SLOPECERT_NUMERIC_HPP
