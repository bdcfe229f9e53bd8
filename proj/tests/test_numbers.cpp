#include <doctest.h>

#include "csurg/abelian.hpp"
#include "csurg/errors.hpp"
#include "csurg/numbers.hpp"

using namespace csurg;

TEST_CASE("floor division") {
    CHECK(floor_div(Integer(7), Integer(2)) == 3);
    CHECK(floor_div(Integer(-7), Integer(2)) == -4);
    CHECK(floor_div(Integer(7), Integer(-2)) == -4);
    CHECK(floor_div(Integer(-7), Integer(-2)) == 3);
    CHECK(floor_div(Integer(6), Integer(3)) == 2);
    CHECK(floor_div(Integer(-6), Integer(3)) == -2);
}

TEST_CASE("rational floor") {
    CHECK(rational_floor(Rational(-5, 2)) == -3);
    CHECK(rational_floor(Rational(5, 2)) == 2);
    CHECK(rational_floor(Rational(-4, 2)) == -2);
    CHECK(is_integral(Rational(-4, 2)));
    CHECK_FALSE(is_integral(Rational(-5, 2)));
}

TEST_CASE("rational formatting stays exact") {
    CHECK(format_rational(Rational(-5, 2)) == "-5/2");
    CHECK(format_rational(Rational(10, 4)) == "5/2");
    CHECK(format_rational(Rational(-6, 3)) == "-2");
    CHECK(format_rational(parse_rational("3/-2")) == "-3/2");  // sign normalizes to the numerator
    CHECK(format_rational(Rational(0)) == "0");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-5/2") == Rational(-5, 2));
    CHECK(parse_rational(" 10/4 ") == Rational(5, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-0") == Rational(0));
    CHECK(parse_rational("3/-2") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("abelian group formatting and parsing") {
    AbelianGroup trivial;
    CHECK(trivial.str() == "0");
    CHECK(trivial.is_trivial());

    AbelianGroup g{1, {Integer(5)}};
    CHECK(g.str() == "Z + Z/5");
    CHECK(AbelianGroup::parse("Z + Z/5") == g);
    CHECK(AbelianGroup::parse("0") == trivial);

    AbelianGroup two5{0, {Integer(5), Integer(5)}};
    CHECK(two5.str() == "Z/5 + Z/5");
    CHECK(two5.torsion_order() == 25);
    CHECK(AbelianGroup::parse(two5.str()) == two5);

    CHECK_THROWS_AS(AbelianGroup::parse("Z/6 + Z/4"), ParseError);  // no divisibility
    CHECK_THROWS_AS(AbelianGroup::parse("Q"), ParseError);
}

TEST_CASE("group from diagonal drops units and keeps zeros free") {
    AbelianGroup g = group_from_diagonal({Integer(1), Integer(5), Integer(0)}, 1);
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<Integer>{Integer(5)});
    CHECK(g.well_formed());
}
