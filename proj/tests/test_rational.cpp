#include "doctest.h"

#include <stdexcept>

#include "gqm/rational.hpp"

using gqm::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction reduces and normalizes the sign to the numerator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(1, -2).num() == -1);
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(6, 3) == Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("field operations") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a + Rational(-1, 3) == Rational(0));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparison is by cross-multiplication, not by parts") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("integer mixing through the implicit constructor") {
  CHECK(Rational(1, 2) + Rational(1, 2) == 1);
  CHECK(Rational(3, 2) * 2 == 3);
  CHECK(Rational(5) / 2 == Rational(5, 2));
}

TEST_CASE("abs and is_zero") {
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(2, 3).abs() == Rational(2, 3));
  CHECK(Rational(0).is_zero());
  CHECK_FALSE(Rational(1, 9).is_zero());
}

TEST_CASE("string rendering stays fractional") {
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-1).str() == "-1");
  CHECK(Rational(2, 3).str() == "2/3");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
}

}  // TEST_SUITE
