#include "n2vx/half_int.hpp"
#include "n2vx/rational.hpp"

#include "doctest.h"

#include <sstream>

using namespace n2vx;

TEST_CASE("rational parse and print round trips") {
    CHECK(Rational::parse("3/4").value() == Rational(3, 4));
    CHECK(Rational::parse("-3/4").value() == Rational(-3, 4));
    CHECK(Rational::parse("7").value() == Rational(7));
    CHECK(Rational::parse("0").value() == Rational(0));
    CHECK(Rational::parse("6/8").value().str() == "3/4");
    CHECK(Rational::parse("-6/8").value().str() == "-3/4");
    CHECK(Rational::parse("6/-8").value().str() == "-3/4");
    CHECK(Rational::parse("-6/-8").value().str() == "3/4");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(0, 17).str() == "0");
}

TEST_CASE("rational parse rejects malformed input") {
    CHECK(!Rational::parse("").has_value());
    CHECK(!Rational::parse("1/0").has_value());
    CHECK(!Rational::parse("a").has_value());
    CHECK(!Rational::parse("1/").has_value());
    CHECK(!Rational::parse("/2").has_value());
    CHECK(!Rational::parse("1.5").has_value());
    CHECK(!Rational::parse("1 / 2").has_value());
    CHECK(!Rational::parse("--2").has_value());
    CHECK(!Rational::parse("1/2/3").has_value());
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 7) / Rational(2, 21) == Rational(3, 2));
    CHECK(-Rational(5, 9) == Rational(-5, 9));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));

    // No silent overflow: build a value past 64 bits and come back exactly.
    Rational big = Rational::parse("123456789012345678901234567890/7").value();
    CHECK((big * Rational(7)).str() == "123456789012345678901234567890");
    CHECK(big - big == Rational(0));
}

TEST_CASE("rational accessors") {
    Rational r(-6, 8);
    CHECK(r.num().get_si() == -3);
    CHECK(r.den().get_si() == 4);
    CHECK(r.sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(5).sign() == 1);
    CHECK(Rational(12, 4).is_integer());
    CHECK(!r.is_integer());
    CHECK(Rational(12, 4).to_long() == 3);
    std::ostringstream os;
    os << r;
    CHECK(os.str() == "-3/4");
}

TEST_CASE("half integers") {
    CHECK(HalfInt::whole(3).twice() == 6);
    CHECK(HalfInt::halves(3).str() == "3/2");
    CHECK(HalfInt::whole(-2).str() == "-2");
    CHECK(HalfInt::halves(-1).str() == "-1/2");
    CHECK(HalfInt::whole(2).is_integer());
    CHECK(!HalfInt::halves(5).is_integer());
    CHECK(HalfInt::halves(5).is_half_odd());
    CHECK(HalfInt::whole(4).whole_part() == 4);
    CHECK((HalfInt::halves(1) + HalfInt::halves(1)) == HalfInt::whole(1));
    CHECK((HalfInt::whole(2) - HalfInt::halves(1)) == HalfInt::halves(3));
    CHECK(-HalfInt::halves(3) == HalfInt::halves(-3));
    CHECK(HalfInt::halves(-1) < HalfInt::whole(0));
    CHECK(HalfInt::halves(3).to_rational() == Rational(3, 2));

    CHECK(HalfInt::parse("3/2").value() == HalfInt::halves(3));
    CHECK(HalfInt::parse("-1/2").value() == HalfInt::halves(-1));
    CHECK(HalfInt::parse("2").value() == HalfInt::whole(2));
    CHECK(!HalfInt::parse("1/3").has_value());
    CHECK(!HalfInt::parse("x").has_value());
}
