#include "slopecert/farey.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "slopecert/errors.hpp"

namespace slopecert {

Slope make_slope(Int p, Int q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("slope (0, 0) is not defined");
  Int g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{std::move(p), std::move(q)};
}

bool operator==(const Slope& a, const Slope& b) {
  return a.p == b.p && a.q == b.q;
}
bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
bool operator<(const Slope& a, const Slope& b) {
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

std::string format_slope(const Slope& s) {
  return s.p.str() + "/" + s.q.str();
}

namespace {

// Strict decimal integer with optional leading '-'.
Int parse_int_token(std::string_view text, const char* what) {
  if (text.empty()) throw ParseError(std::string("empty ") + what);
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw ParseError(std::string("malformed ") + what);
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9')
      throw ParseError(std::string("malformed ") + what + ": '" +
                       std::string(text) + "'");
  return Int(std::string(text));
}

}  // namespace

Slope parse_slope(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    throw ParseError("slope must be written p/q: '" + std::string(text) + "'");
  Int p = parse_int_token(text.substr(0, slash), "slope numerator");
  Int q = parse_int_token(text.substr(slash + 1), "slope denominator");
  if (p == 0 && q == 0)
    throw ParseError("slope 0/0 is not defined");
  return make_slope(std::move(p), std::move(q));
}

GluingMatrix make_gluing_matrix(const Int& a, const Int& b, const Int& c,
                                const Int& d) {
  Int det = a * d - b * c;
  if (det != 1 && det != -1)
    throw InvalidMatrixError("gluing matrix must have determinant +1 or -1, got " +
                             det.str());
  GluingMatrix m;
  m.m << a, b, c, d;
  return m;
}

Int determinant(const GluingMatrix& m) {
  return m.m(0, 0) * m.m(1, 1) - m.m(0, 1) * m.m(1, 0);
}

GluingMatrix inverse(const GluingMatrix& m) {
  Int det = determinant(m);
  // adj / det; det is +1 or -1 by the type invariant.
  return make_gluing_matrix(m.m(1, 1) / det, -m.m(0, 1) / det,
                            -m.m(1, 0) / det, m.m(0, 0) / det);
}

GluingMatrix compose(const GluingMatrix& a, const GluingMatrix& b) {
  Mat2 prod = a.m * b.m;
  return make_gluing_matrix(prod(0, 0), prod(0, 1), prod(1, 0), prod(1, 1));
}

bool operator==(const GluingMatrix& a, const GluingMatrix& b) {
  return a.m == b.m;
}

std::string format_matrix(const GluingMatrix& m) {
  return m.m(0, 0).str() + "," + m.m(0, 1).str() + ";" + m.m(1, 0).str() +
         "," + m.m(1, 1).str();
}

GluingMatrix parse_matrix(std::string_view text) {
  std::size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("matrix must be written a,b;c,d: '" + std::string(text) +
                     "'");
  std::string_view row0 = text.substr(0, semi);
  std::string_view row1 = text.substr(semi + 1);
  std::size_t c0 = row0.find(',');
  std::size_t c1 = row1.find(',');
  if (c0 == std::string_view::npos || c1 == std::string_view::npos)
    throw ParseError("matrix must be written a,b;c,d: '" + std::string(text) +
                     "'");
  return make_gluing_matrix(parse_int_token(row0.substr(0, c0), "matrix entry"),
                            parse_int_token(row0.substr(c0 + 1), "matrix entry"),
                            parse_int_token(row1.substr(0, c1), "matrix entry"),
                            parse_int_token(row1.substr(c1 + 1), "matrix entry"));
}

Int intersection_number(const Slope& x, const Slope& y) {
  Int v = x.p * y.q - x.q * y.p;
  return v < 0 ? Int(-v) : v;
}

namespace {

// d(infinity, a/b) for b >= 2, gcd(a, b) = 1, where infinity = 1/0.
// Translation x -> x + k is a graph automorphism fixing infinity, so a is
// first reduced mod b.  Fractions a/b with a = +-1 (mod b) are adjacent to
// an integer, hence at distance 2.  Otherwise one geodesic step descends
// to a Stern-Brocot parent: the two neighbors of a/b with denominator < b,
// namely (c, d) and (a - c, b - d) where a d - b c = 1 and 0 < d < b.
long long weight_from_infinity(Int a, Int b,
                               std::map<std::pair<Int, Int>, long long>& memo) {
  a %= b;
  if (a < 0) a += b;
  if (a == 1 || a == b - 1) return 2;
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  ExtendedGcd eg = extended_gcd(a, b);  // a*s + b*t = 1
  Int d = eg.s % b;
  if (d < 0) d += b;  // d != 0: b >= 2 and gcd(a, b) = 1
  Int c = (a * d - 1) / b;
  long long w1 = (d == 1) ? 1 : weight_from_infinity(c, d, memo);
  Int d2 = b - d;
  long long w2 = (d2 == 1) ? 1 : weight_from_infinity(a - c, d2, memo);
  long long res = 1 + std::min(w1, w2);
  memo.emplace(std::move(key), res);
  return res;
}

}  // namespace

long long distance(const Slope& x, const Slope& y) {
  Slope xn = make_slope(x.p, x.q);
  Slope yn = make_slope(y.p, y.q);
  if (xn == yn) return 0;
  // Unimodular map carrying x to (1, 0): rows (s, t) and (-q, p), where
  // s*p + t*q = 1.  Farey distance is invariant under GL(2, Z).
  ExtendedGcd eg = extended_gcd(xn.p, xn.q);
  Int a = eg.s * yn.p + eg.t * yn.q;
  Int b = -xn.q * yn.p + xn.p * yn.q;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (b == 0) return 0;  // y == x, already handled
  if (b == 1) return 1;  // integers are adjacent to infinity
  std::map<std::pair<Int, Int>, long long> memo;
  return weight_from_infinity(a, b, memo);
}

SetDistanceResult set_distance(const std::vector<Slope>& a,
                               const std::vector<Slope>& b) {
  if (a.empty() || b.empty())
    throw EmptySetError("set distance requires two nonempty slope sets");
  std::vector<Slope> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  SetDistanceResult best{-1, sa.front(), sb.front()};
  for (const Slope& x : sa) {
    for (const Slope& y : sb) {
      long long d = distance(x, y);
      if (best.distance < 0 || d < best.distance) {
        best = {d, x, y};
        if (d == 0) return best;
      }
    }
  }
  return best;
}

Slope apply_gluing(const GluingMatrix& m, const Slope& s) {
  Vec2 v;
  v << s.p, s.q;
  Vec2 w = m.m * v;
  return make_slope(w(0), w(1));
}

GluingMatrix dehn_twist(const Slope& about, const Int& n) {
  Slope s = make_slope(about.p, about.q);
  // I + n * [[-pq, p^2], [-q^2, pq]]: the conjugate of [[1,1],[0,1]] by any
  // unimodular matrix with first column (p, q); the conjugator drops out.
  return make_gluing_matrix(1 - n * s.p * s.q, n * s.p * s.p,
                            -n * s.q * s.q, 1 + n * s.p * s.q);
}

}  // namespace slopecert
