#include "geoplan/errors.hpp"
#include "geoplan/rational.hpp"

#include <gtest/gtest.h>

using namespace geoplan;

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("+2"), Rational(2));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("-3.5"), Rational(-7, 2));
    EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
}

TEST(Rational, RejectsMalformedInput) {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.2.3", "1/2/3", "--1", "0x10"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ParsesLists) {
    const auto v = parse_rational_list("1/2, 0.3,-1");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[1], Rational(3, 10));
    EXPECT_EQ(v[2], Rational(-1));
    EXPECT_THROW(parse_rational_list("1,,2"), ParseError);
}

TEST(Rational, Printing) {
    EXPECT_EQ(to_string(make_rational(4, 2)), "2");
    EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
}

TEST(Rational, FloorAndFrac) {
    EXPECT_EQ(floor(Rational(-1, 2)), Integer(-1));
    EXPECT_EQ(frac(Rational(-1, 4)), Rational(3, 4));
    EXPECT_EQ(frac(Rational(7, 3)), Rational(1, 3));
}

TEST(Rational, ExactSquareRoots) {
    EXPECT_EQ(exact_sqrt(Rational(9, 4)), Rational(3, 2));
    EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
    EXPECT_FALSE(exact_sqrt(Rational(-1)).has_value());
    EXPECT_EQ(from_double(0.375), Rational(3, 8));
}
