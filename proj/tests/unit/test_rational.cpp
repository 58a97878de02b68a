#include <limits>
#include <random>

#include "crown/rational.hpp"
#include "doctest.h"

using crown::Rational;

TEST_CASE("rational normalization") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(-a < b);
  CHECK(abs(-a) == a);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("rational overflow is reported") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  // intermediate products beyond 64 bits that reduce back are fine
  const Rational x(std::int64_t{1} << 40, 3), y(3, std::int64_t{1} << 40);
  CHECK(x * y == Rational(1));
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(((a < b) || (b < a) || (a == b)));
  }
}
