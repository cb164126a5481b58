#include "doctest.h"

#include <sstream>

#include "csglab/errors.hpp"
#include "csglab/rational.hpp"

using csglab::Rational;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/8").str() == "3/4");
  CHECK(Rational::parse("-2/4").str() == "-1/2");
  CHECK(Rational::parse("7").str() == "7/1");
  CHECK(Rational::parse("0/5").str() == "0/1");
  CHECK(Rational::parse("inf").is_infinite());
  CHECK_THROWS_AS(Rational::parse("1/0"), csglab::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), csglab::ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), csglab::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), csglab::ParseError);
  CHECK_THROWS_AS(Rational::parse("0.5"), csglab::ParseError);
}

TEST_CASE("rational arithmetic matches integer cross-multiplication") {
  for (long a = -6; a <= 6; ++a) {
    for (long b = 1; b <= 5; ++b) {
      for (long c = -6; c <= 6; ++c) {
        for (long d = 1; d <= 5; ++d) {
          const Rational x(a, b), y(c, d);
          CHECK(x + y == Rational(a * d + c * b, b * d));
          CHECK(x - y == Rational(a * d - c * b, b * d));
          CHECK(x * y == Rational(a * c, b * d));
          if (c != 0) CHECK(x / y == Rational(a * d, b * c));
          CHECK((x < y) == (a * d < c * b));
        }
      }
    }
  }
}

TEST_CASE("infinity semantics") {
  const Rational inf = Rational::infinity();
  CHECK(inf > Rational(1'000'000));
  CHECK(inf == inf);
  CHECK((inf + Rational(3)).is_infinite());
  CHECK((inf * Rational(2)).is_infinite());
  CHECK((Rational(5) / inf).is_zero());
  CHECK(inf.str() == "inf");
  CHECK_THROWS(inf - inf);
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(inf.value());
  std::ostringstream os;
  os << Rational(3, 6);
  CHECK(os.str() == "1/2");
}
