#include <doctest.h>

#include "rookmn/rational.hpp"

using rookmn::Int128;
using rookmn::Rational;

TEST_CASE("rationals reduce and normalize signs on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational());
  CHECK(Rational(91, 169) == Rational(7, 13));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("comparison and subtraction work on exact values") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0, 1));
  CHECK(Rational(7, 13) > Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(1, 2));

  CHECK(Rational(7, 13) - Rational(1, 2) == Rational(1, 26));
  CHECK(Rational(1, 2) - Rational(7, 13) == Rational(-1, 26));
  CHECK((Rational(1, 3) - Rational(1, 3)) == Rational());
}

TEST_CASE("fraction strings keep exact numerator and denominator") {
  CHECK(Rational(7, 13).to_fraction_string() == "7/13");
  CHECK(Rational(-5, 8).to_fraction_string() == "-5/8");
  CHECK(Rational(4, 2).to_fraction_string() == "2");
  CHECK(Rational().to_fraction_string() == "0");
}

TEST_CASE("decimal strings round half away from zero at the last place") {
  CHECK(Rational(1, 2).to_decimal_string() == "0.5000");
  CHECK(Rational(7, 13).to_decimal_string() == "0.5385");
  CHECK(Rational(455, 841).to_decimal_string() == "0.5410");
  CHECK(Rational(-1, 3).to_decimal_string() == "-0.3333");
  CHECK(Rational(1, 8).to_decimal_string(2) == "0.13");
  CHECK(Rational(12, 1).to_decimal_string(0) == "12");
  CHECK(Rational(1, 80000).to_decimal_string(4) == "0.0000");
}

TEST_CASE("double conversion is close for plotting use") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(7, 13).to_double() == doctest::Approx(0.538461538));
}

TEST_CASE("wide intermediate values stay exact") {
  // Cross-multiplying ~1e18-scale values must not wrap.
  const Rational a(Int128{1000000007LL} * 1000000009LL, 3);
  const Rational b(Int128{1000000007LL} * 1000000009LL, 4);
  CHECK(b < a);
  CHECK(a - b == Rational(Int128{1000000007LL} * 1000000009LL, 12));
}
