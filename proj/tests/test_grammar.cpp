#include <doctest.h>

#include "pghopf/grammar.hpp"
#include "support.hpp"

using namespace pghopf;

TEST_CASE("field specs") {
  CHECK(parse_field_spec("p=3") == Field::prime(3));
  const Field f4 = parse_field_spec("p=2;k=2;mod=a^2+a+1");
  CHECK(f4.order() == 4);
  CHECK(f4 == Field::extension(2, {1, 1, 1}));
  CHECK(parse_field_spec(" p = 5 ") == Field::prime(5));
  CHECK_THROWS_AS(parse_field_spec("p=6"), ParseError);
  CHECK_THROWS_AS(parse_field_spec("q=3"), ParseError);
  CHECK_THROWS_AS(parse_field_spec("p=2;k=2;mod=a^2+1"), ParseError);
  CHECK_THROWS_AS(parse_field_spec("p=2;k=3;mod=a^2+a+1"), ParseError);
}

TEST_CASE("elements") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const RatFunc x = parse_element("T^3/(1+T)", f2);
  CHECK(x.valuation() == Valuation(3));
  CHECK(parse_element("(T^2-1)/(T-1)", f3) == parse_element("T+1", f3));
  CHECK(parse_element("T^-2", f3) == RatFunc::pi_power(f3, -2));
  CHECK(parse_element("5*T", f3) == parse_element("2*T", f3));
  CHECK(parse_element("-T", f3) == parse_element("2 * T", f3));
  CHECK(parse_element("(1+T)^-1 * (1+T)", f3).is_one());

  CHECK(format(parse_element("T^3 + 2*T", f3)) == "2*T + T^3");
  CHECK(format(parse_element("T^-2", f3)) == "1/T^2");
  CHECK(format(parse_element("(1+T)/(T^2+T^3)", f3)) == "1/T^2");
  CHECK(format(parse_element("T/(1+T)", f3)) == "T/(1 + T)");
  CHECK(format(RatFunc(f3)) == "0");

  const Field f4 = parse_field_spec("p=2;k=2;mod=a^2+a+1");
  CHECK(parse_element("a*a", f4) == parse_element("a+1", f4));
  CHECK(format(parse_element("a*T + a^2", f4)) == "1 + a + a*T");
}

TEST_CASE("parse errors carry a position") {
  const Field f = Field::prime(3);
  try {
    parse_element("T + x", f);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_element("T +", f), ParseError);
  CHECK_THROWS_AS(parse_element("(T", f), ParseError);
  CHECK_THROWS_AS(parse_element("T/0", f), ParseError);
  CHECK_THROWS_AS(parse_element("a", f), ParseError);
  CHECK_THROWS_AS(parse_element("T^2^3", f), ParseError);
  CHECK_THROWS_AS(parse_element("", f), ParseError);
}

TEST_CASE("matrices") {
  const Field f = Field::prime(2);
  const MatK B = parse_matrix("[0,1;0,0]", f);
  CHECK(B.size() == 2);
  CHECK(B(0, 1).is_one());
  CHECK(format(parse_matrix("[T,0;1+T,T^2]", f)) == "[T, 0; 1 + T, T^2]");
  CHECK_THROWS_AS(parse_matrix("[1,2;3]", f), MatrixParseError);
  CHECK_THROWS_AS(parse_matrix("[1,2,3;4,5,6]", f), MatrixParseError);
  CHECK_THROWS_AS(parse_matrix("1,2;3,4", f), MatrixParseError);
  try {
    parse_matrix("[1,0;T+,1]", f);
    FAIL("expected a parse error");
  } catch (const MatrixParseError& e) {
    CHECK(e.row() == 2);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("print/parse round trip, randomized") {
  testing::Gen gen(0x7E57);
  for (const Field& f : {Field::prime(2), Field::prime(5), Field::extension(3, {1, 0, 1})}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const RatFunc x = gen.ratfunc(f, 4, 4);
      const std::string text = format(x);
      CHECK(parse_element(text, f) == x);
      CHECK(format(parse_element(text, f)) == text);
    }
    for (int trial = 0; trial < 100; ++trial) {
      const MatK m = gen.matrix(f, 3);
      CHECK(parse_matrix(format(m), f) == m);
    }
  }
}
