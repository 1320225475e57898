#include <doctest.h>

#include <stdexcept>

#include "imptab/quadratic.hpp"

using namespace imptab;

TEST_SUITE("quadratic") {

TEST_CASE("decimal rendering of rationals") {
  CHECK(decimal_string(mpq_class(1, 2), 3) == "0.500");
  CHECK(decimal_string(mpq_class(1, 3), 6) == "0.333333");
  CHECK(decimal_string(mpq_class(2, 3), 6) == "0.666667");
  CHECK(decimal_string(mpq_class(0), 2) == "0.00");
  CHECK(decimal_string(mpq_class(7), 0) == "7");
  CHECK(decimal_string(mpq_class(-3, 4), 1) == "-0.8");
}

TEST_CASE("round half to even") {
  CHECK(decimal_string(mpq_class(1, 8), 2) == "0.12");   // 0.125 -> even neighbour 2
  CHECK(decimal_string(mpq_class(3, 8), 2) == "0.38");   // 0.375 -> even neighbour 8
  CHECK(decimal_string(mpq_class(5, 2), 0) == "2");      // 2.5 -> 2
  CHECK(decimal_string(mpq_class(7, 2), 0) == "4");      // 3.5 -> 4
  CHECK(decimal_string(mpq_class(-1, 8), 2) == "-0.12");
  CHECK(decimal_string(mpq_class(-1, 800), 2) == "0.00");  // never "-0.00"
}

TEST_CASE("decimal rendering guards") {
  CHECK_THROWS_AS(decimal_string(mpq_class(1), -1), std::invalid_argument);
  CHECK_THROWS_AS(decimal_string(mpq_class(1), 401), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  const QuadExt s2 = QuadExt::sqrt_of(2);
  const QuadExt one(1);
  CHECK((one + s2) * (one - s2) == QuadExt(-1));
  CHECK((one + s2) + (QuadExt(2) - s2) == QuadExt(3));
  CHECK(s2 * s2 == QuadExt(2));
  CHECK(one / (one + s2) == s2 - one);
  CHECK(QuadExt(mpq_class(1, 2)) + QuadExt(mpq_class(1, 3)) == QuadExt(mpq_class(5, 6)));
}

TEST_CASE("mixing distinct radicands is rejected") {
  const QuadExt s2 = QuadExt::sqrt_of(2);
  const QuadExt s3 = QuadExt::sqrt_of(3);
  CHECK_THROWS_AS(s2 + s3, std::domain_error);
  CHECK_THROWS_AS(s2 * s3, std::domain_error);
  CHECK_THROWS_AS(QuadExt::sqrt_of(5), std::invalid_argument);
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), std::domain_error);
}

TEST_CASE("exact sign and comparisons") {
  const QuadExt s2 = QuadExt::sqrt_of(2);
  const QuadExt s10 = QuadExt::sqrt_of(10);
  CHECK((s2 - QuadExt(mpq_class(141421356, 100000000))).sign() > 0);
  CHECK((s2 - QuadExt(mpq_class(141421357, 100000000))).sign() < 0);
  CHECK((s2 - s2).sign() == 0);
  CHECK((QuadExt(3) - s10).sign() < 0);       // 3 < sqrt(10)
  CHECK((QuadExt(4) - s10).sign() > 0);
  CHECK((QuadExt(0) - s2).sign() < 0);        // -sqrt(2) < 0
  CHECK(QuadExt(mpq_class(1, 2)).sign() > 0);
  CHECK(QuadExt(0).sign() == 0);
  CHECK((-s2).abs() == s2);
  CHECK(QuadExt(1) < s2);
  CHECK(s2 <= s2);
}

TEST_CASE("canonical symbolic forms") {
  const QuadExt s2 = QuadExt::sqrt_of(2);
  const QuadExt s3 = QuadExt::sqrt_of(3);
  CHECK(QuadExt(mpq_class(1, 2)).exact_form() == "1/2");
  CHECK(QuadExt(0).exact_form() == "0");
  CHECK(QuadExt(5).exact_form() == "5");
  CHECK((s2 / QuadExt(2)).exact_form() == "sqrt(2)/2");
  CHECK((QuadExt(2) + QuadExt(2) * s2).exact_form() == "2 + 2*sqrt(2)");
  CHECK(((QuadExt(3) - s3) / QuadExt(6)).exact_form() == "(3 - sqrt(3))/6");
  CHECK(((s3 - QuadExt(1)) / QuadExt(2)).exact_form() == "(sqrt(3) - 1)/2");
  const QuadExt c = QuadExt(mpq_class(-3, 2)) +
                    QuadExt(mpq_class(11, 20)) * QuadExt::sqrt_of(10);
  CHECK(c.exact_form() == "(11*sqrt(10) - 30)/20");
}

TEST_CASE("decimal rendering of irrationals") {
  const QuadExt s2 = QuadExt::sqrt_of(2);
  CHECK(s2.decimal(12) == "1.414213562373");
  CHECK((s2 / QuadExt(2)).decimal(12) == "0.707106781187");
  const QuadExt f_over_g = (QuadExt(3) - QuadExt::sqrt_of(3)) / QuadExt(6);
  CHECK(f_over_g.decimal(12) == "0.211324865405");
  CHECK((QuadExt(1) - s2).decimal(3) == "-0.414");
  CHECK(QuadExt(mpq_class(1, 2)).decimal(4) == "0.5000");
  CHECK(f_over_g.decimal(30) == "0.211324865405187117745425609749");
}

}  // TEST_SUITE
