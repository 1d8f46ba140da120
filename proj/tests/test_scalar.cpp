#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jumploci/scalar.hpp"

using namespace jumploci;

TEST_CASE("rational parse and print") {
    CHECK(Scalar::parse("2").str() == "2");
    CHECK(Scalar::parse("-3/7").str() == "-3/7");
    CHECK(Scalar::parse("6/4").str() == "3/2");
    CHECK(Scalar::parse(" 1 / 3 ").str() == "1/3");
    CHECK(Scalar::parse("\xE2\x88\x92""5").str() == "-5"); // U+2212 minus
    CHECK_THROWS_AS(Scalar::parse(""), input_error);
    CHECK_THROWS_AS(Scalar::parse("1//2"), input_error);
    CHECK_THROWS_AS(Scalar::parse("x"), input_error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), input_error);
}

TEST_CASE("quadratic parse and print") {
    Scalar a = Scalar::parse("1+2\xE2\x88\x9A""2");
    CHECK(a.rational_part() == 1);
    CHECK(a.radical_part() == 2);
    CHECK(a.extension() == 2);
    CHECK(a.str() == "1+2\xE2\x88\x9A""2");
    CHECK(Scalar::parse("sqrt(2)") == Scalar::sqrt_of(2));
    CHECK(Scalar::parse("sqrt2") == Scalar::sqrt_of(2));
    CHECK(Scalar::parse("-\xE2\x88\x9A""3").str() == "-\xE2\x88\x9A""3");
    CHECK(Scalar::parse("1/2\xE2\x88\x9A""2").str() == "1/2\xE2\x88\x9A""2");
    CHECK(Scalar::parse("2-\xE2\x88\x9A""5") == Scalar(Rational(2), Rational(-1), 5));
    CHECK(Scalar::parse("sqrt(-1)") == Scalar(Rational(0), Rational(1), -1));
    // squarefree discriminants only
    CHECK_THROWS_AS(Scalar::sqrt_of(4), input_error);
    CHECK_THROWS_AS(Scalar::sqrt_of(12), input_error);
    CHECK_THROWS_AS(Scalar::sqrt_of(1), input_error);
}

TEST_CASE("quadratic arithmetic") {
    Scalar r2 = Scalar::sqrt_of(2);
    CHECK(r2 * r2 == Scalar(2));
    Scalar x = Scalar(1) + Scalar(2) * r2;
    CHECK(x * x == Scalar(9) + Scalar(4) * r2);
    CHECK(x * x.inverse() == Scalar(1));
    CHECK((x - x).is_zero());
    // norms never vanish on nonzero elements
    Scalar y = Scalar(3) - r2;
    CHECK((x / y) * y == x);
    // distinct extensions cannot mix
    CHECK_THROWS_AS(r2 + Scalar::sqrt_of(3), input_error);
    // pure rationals mix with anything
    CHECK(Scalar(2) * r2 == Scalar(Rational(0), Rational(2), 2));
    CHECK(Scalar::sqrt_of(-1) * Scalar::sqrt_of(-1) == Scalar(-1));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        Scalar r = Scalar::sqrt_of(2);
        auto rand = [&] {
            return Scalar(testutil::random_rational(rng)) + r * testutil::random_rational(rng);
        };
        Scalar a = rand(), b = rand(), c = rand();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("power and comparison key") {
    CHECK(Scalar(2).pow(10) == Scalar(1024));
    CHECK(Scalar(2).pow(-2) == Scalar(Rational(1, 4)));
    CHECK(Scalar(1).pow(0) == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).pow(-1), input_error);
    CHECK(Scalar::compare_key(Scalar(1), Scalar(2)) < 0);
    CHECK(Scalar::compare_key(Scalar(2), Scalar(2)) == 0);
    CHECK(Scalar::compare_key(Scalar(2), Scalar(2) + Scalar::sqrt_of(2)) < 0);
}
