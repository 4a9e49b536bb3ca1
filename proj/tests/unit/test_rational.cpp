#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ultra/error.hpp"
#include "ultra/rational.hpp"

using ultra::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parsing integers, fractions and finite decimals") {
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("2.75") == Rational(11, 4));
  CHECK(Rational::parse("1.50") == Rational(3, 2));
  CHECK(Rational::parse("0.0") == Rational(0));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse(" 3 ") == Rational(3));
  CHECK(Rational::parse("12345678901234567890123456789") ==
        Rational(ultra::BigInt("12345678901234567890123456789"), ultra::BigInt(1)));
}

TEST_CASE("rejected inputs") {
  for (const char* bad : {"-1", "-1/2", "+1", "", "abc", "1.2.3", "1/2/3", "1/0", "1/", "/2",
                          "1e3", "1 2", "."}) {
    CAPTURE(bad);
    CHECK(!Rational::try_parse(bad).has_value());
    CHECK_THROWS_AS(Rational::parse(bad), ultra::Error);
  }
  CHECK_THROWS_AS(Rational(-1), std::domain_error);
  CHECK_THROWS_AS(Rational(1, -2), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("stored reduced and rendered reduced") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("0.500").str() == "1/2");
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(6, 4).denominator() == 2);
}

TEST_CASE("total order") {
  std::vector<Rational> values{Rational(1, 2), Rational(0), Rational(2), Rational(1, 3),
                               Rational(3, 2)};
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 2),
                                        Rational(3, 2), Rational(2)});
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 2) - Rational(1, 2) == Rational(1));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(3, 4) / Rational(3) == Rational(1, 4));
  CHECK(Rational(3).half() == Rational(3, 2));
  CHECK(ultra::midpoint(Rational(1), Rational(2)) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 2) - Rational(2, 3), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(3, 2).decimal_str() == "1.5");
  CHECK(Rational(1, 8).decimal_str() == "0.125");
  CHECK(Rational(2).decimal_str() == "2");
  CHECK(Rational(0).decimal_str() == "0");
  CHECK(Rational(1, 3).decimal_str(4) == "0.3333");
  CHECK(Rational(2, 3).decimal_str(4) == "0.6667");
  CHECK(Rational(1, 2).decimal_str(0) == "1");  // half rounds up
  CHECK(Rational(81, 2).decimal_str() == "40.5");
}

TEST_SUITE_END();
