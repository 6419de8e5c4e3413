#include <doctest.h>

#include <random>

#include "slopecert/numeric.hpp"

using namespace slopecert;

TEST_CASE("gcd is nonnegative and handles zeros") {
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(-4, 0) == 4);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(-12, -18) == 6);
  CHECK(gcd(Int("123456789123456789"), Int("987654321987654321")) ==
        Int("9000000009"));
}

TEST_CASE("extended gcd certificate on fixed cases") {
  auto check = [](const Int& a, const Int& b) {
    ExtendedGcd e = extended_gcd(a, b);
    CHECK(e.g == gcd(a, b));
    CHECK(e.g >= 0);
    CHECK(a * e.s + b * e.t == e.g);
  };
  check(0, 0);
  check(0, 7);
  check(7, 0);
  check(-7, 0);
  check(1, 1);
  check(240, 46);
  check(-240, 46);
  check(240, -46);
  check(Int("123456789123456789"), Int("987654321987654321"));
  check(Int("-99999999999999999999999"), Int("1234567"));
}

TEST_CASE("extended gcd certificate on random pairs") {
  std::mt19937 rng(20260815);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    Int a(d(rng)), b(d(rng));
    ExtendedGcd e = extended_gcd(a, b);
    CHECK(e.g == gcd(a, b));
    CHECK(a * e.s + b * e.t == e.g);
  }
}

TEST_CASE("make_primitive divides by the content") {
  IntVector v(4);
  v << 6, -9, 12, 0;
  make_primitive(v);
  CHECK(v(0) == 2);
  CHECK(v(1) == -3);
  CHECK(v(2) == 4);
  CHECK(v(3) == 0);

  IntVector z = IntVector::Zero(3);
  make_primitive(z);
  CHECK(z(0) == 0);
  CHECK(z(2) == 0);

  IntVector p(2);
  p << 3, 5;
  make_primitive(p);
  CHECK(p(0) == 3);
  CHECK(p(1) == 5);
}
