#include <catch2/catch_amalgamated.hpp>

#include "lsa/scalar.hpp"

using lsa::Rational;
using lsa::Scalar;

TEST_CASE("gaussian rational arithmetic is exact") {
    Scalar a = Scalar::gaussian(Rational(1, 2), Rational(3, 4));
    Scalar b = Scalar::gaussian(Rational(-2, 3), Rational(1));

    CHECK((a + b) == Scalar::gaussian(Rational(-1, 6), Rational(7, 4)));
    CHECK((a - b) == Scalar::gaussian(Rational(7, 6), Rational(-1, 4)));
    // (1/2 + 3/4 i)(-2/3 + i) = -1/3 - 3/4 + (1/2 - 1/2) i
    CHECK((a * b) == Scalar::gaussian(Rational(-13, 12), Rational(0)));
    CHECK((a / a) == Scalar::integer(1));
    CHECK((Scalar::i() * Scalar::i()) == Scalar::integer(-1));
    CHECK(a.conj() == Scalar::gaussian(Rational(1, 2), Rational(-3, 4)));
    CHECK(a.norm_sq() == Scalar::rational(Rational(13, 16)));
    CHECK_THROWS_AS(a / Scalar(), lsa::Error);
}

TEST_CASE("scalar strings round-trip") {
    const char* cases[] = {"0",  "1",       "-1",  "2/3",   "-7/5", "i",
                           "-i", "3i",      "-2/3i", "1/2+3/4i", "1-i",  "-5+2i"};
    for (const char* c : cases) {
        Scalar s = Scalar::parse(c);
        CHECK(s.to_string() == c);
        CHECK(Scalar::parse(s.to_string()) == s);
    }
    CHECK(Scalar::parse(" 1/2 + 3/4 i ") == Scalar::gaussian(Rational(1, 2), Rational(3, 4)));
    CHECK(Scalar::parse("+i") == Scalar::i());
    CHECK_THROWS_AS(Scalar::parse(""), lsa::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), lsa::ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), lsa::ParseError);
}

TEST_CASE("numeric scalars promote and compare with tolerance") {
    Scalar x = Scalar::numeric(0.5, -0.25);
    Scalar y = Scalar::rational(Rational(1, 2));
    Scalar sum = x + y;
    CHECK(!sum.is_exact());
    CHECK(sum.approx_equal(Scalar::numeric(1.0, -0.25)));
    CHECK(Scalar::numeric(1e-12).is_zero(1e-10));
    CHECK(!Scalar::numeric(1e-8).is_zero(1e-10));

    Scalar z = Scalar::parse("(0.5,-0.25)");
    CHECK(z == x);
    CHECK(Scalar::parse(z.to_string()) == z);
}

TEST_CASE("lexicographic order sorts by real then imaginary part") {
    Scalar a = Scalar::integer(-1), b = Scalar::integer(0), c = Scalar::i();
    CHECK(a < b);
    CHECK(b < c);
    CHECK(!(c < b));
    CHECK(Scalar::gaussian(Rational(1), Rational(-1)) < Scalar::gaussian(Rational(1), Rational(1)));
}
