#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jumploci/words.hpp"

using namespace jumploci;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> X4{"x1", "x2", "x3", "x4"};
} // namespace

TEST_CASE("word grammar") {
    GroupWord c = parse_word("(x1,x2)", X4);
    CHECK(c.length() == 4);
    CHECK(c.letters() == std::vector<Letter>{{0, 1}, {1, 1}, {0, -1}, {1, -1}});

    CHECK(parse_word("(x1, x3^2 x4)", X4).length() == 8);
    CHECK(parse_word("((x1,x2),x1)", X4).length() == 10);
    CHECK(parse_word("x^0", XY).is_identity());
    CHECK(parse_word("", XY).is_identity());
    CHECK(parse_word("x y y^-1 x^-1", XY).is_identity());
    CHECK(parse_word("x*y*x*y^-1*x^-1*y^-1", XY).length() == 6);
    CHECK(parse_word("x^-3", XY) == parse_word("x^3", XY).inverse());
    CHECK(parse_word("(x,y)^2", XY).length() == 8);

    CHECK_THROWS_AS(parse_word("z", XY), input_error);
    CHECK_THROWS_AS(parse_word("xy", XY), input_error); // names need separators
    CHECK_THROWS_AS(parse_word("(x1 x2", X4), input_error);
    CHECK_THROWS_AS(parse_word("(x1)", X4), input_error); // grouping is only via commutators
    CHECK_THROWS_AS(parse_word("x^", XY), input_error);
}

TEST_CASE("rendering round trip") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        GroupWord w = testutil::random_word(rng, 4, 12);
        CHECK(parse_word(w.str(X4), X4) == w);
    }
    CHECK(GroupWord().str(XY) == "1");
}

TEST_CASE("parsing is a homomorphism") {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 50; ++it) {
        GroupWord u = testutil::random_word(rng, 4, 8);
        GroupWord v = testutil::random_word(rng, 4, 8);
        CHECK(parse_word(u.str(X4) + " " + v.str(X4), X4) == u * v);
    }
}

TEST_CASE("Fox derivatives on pinned words") {
    GroupWord x = parse_word("x", XY);
    CHECK(fox_derivative_ab(x, 0, 2) == MultiPoly::constant(2, Scalar(1)));
    CHECK(fox_derivative_ab(x, 1, 2).is_zero());

    GroupWord c = parse_word("(x,y)", XY);
    CHECK(fox_derivative_ab(c, 0, 2) == MultiPoly::parse("1-t2", 2));
    CHECK(fox_derivative_ab(c, 1, 2) == MultiPoly::parse("t1-1", 2));

    GroupWord trefoil = parse_word("x*y*x*y^-1*x^-1*y^-1", XY);
    CHECK(fox_derivative_ab(trefoil, 0, 2) == MultiPoly::parse("1+t1*t2-t1", 2));
    // both derivatives specialize to units times t^2 - t + 1 on the diagonal
    std::vector<Scalar> at2{Scalar(2), Scalar(2)};
    CHECK(fox_derivative_ab(trefoil, 0, 2).eval(at2) == Scalar(3));
    CHECK(fox_derivative_ab(trefoil, 1, 2).eval(at2) == Scalar(-3));
}

TEST_CASE("Fox fundamental identity") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 50; ++it) {
        int n = 3;
        GroupWord w = testutil::random_word(rng, n, 10);
        std::vector<Scalar> rho;
        for (int i = 0; i < n; ++i) rho.push_back(testutil::random_nonzero_scalar(rng));
        Scalar lhs(0);
        for (int i = 0; i < n; ++i)
            lhs += fox_derivative_ab(w, i, n).eval(rho) * (rho[static_cast<std::size_t>(i)] - Scalar(1));
        Scalar rhow(1);
        for (const Letter& l : w.letters())
            rhow *= l.exp == 1 ? rho[static_cast<std::size_t>(l.gen)]
                               : rho[static_cast<std::size_t>(l.gen)].inverse();
        CHECK(lhs == rhow - Scalar(1));
    }
}

TEST_CASE("Magnus expansion degree two") {
    MagnusQuad c = magnus_degree2(parse_word("(x1,x2)", X4), 4);
    CHECK(c.eps_zero());
    CHECK(c.c(0, 1) == Scalar(1));
    CHECK(c.c(1, 0) == Scalar(-1));
    CHECK(c.c(2, 3) == Scalar(0));

    MagnusQuad q = magnus_degree2(parse_word("(x1,x4)*(x2^-2,x3)", X4), 4);
    CHECK(q.eps_zero());
    CHECK(q.c(0, 3) - q.c(3, 0) == Scalar(2));  // e1 ^ e4
    CHECK(q.c(1, 2) - q.c(2, 1) == Scalar(-4)); // -2 e2 ^ e3, antisymmetrized
    CHECK(q.c(0, 3) == Scalar(1));
    CHECK(q.c(1, 2) == Scalar(-2));

    MagnusQuad h = magnus_degree2(parse_word("((x1,x2),x1)", X4), 4);
    CHECK(h.eps_zero());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(h.c(i, j) == Scalar(0));

    MagnusQuad p = magnus_degree2(parse_word("x1^2*x2", X4), 4);
    CHECK(p.eps == std::vector<long long>{2, 1, 0, 0});
}

TEST_CASE("Magnus properties on commutator words") {
    std::mt19937_64 rng(24);
    for (int it = 0; it < 50; ++it) {
        GroupWord w = testutil::random_commutator_word(rng, 3);
        MagnusQuad q = magnus_degree2(w, 3);
        REQUIRE(q.eps_zero());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(q.c(i, j) == -q.c(j, i));
        MagnusQuad qi = magnus_degree2(w.inverse(), 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(qi.c(i, j) == -q.c(i, j));
    }
    // eps negates under inversion in general
    std::mt19937_64 rng2(25);
    for (int it = 0; it < 20; ++it) {
        GroupWord w = testutil::random_word(rng2, 3, 9);
        MagnusQuad q = magnus_degree2(w, 3);
        MagnusQuad qi = magnus_degree2(w.inverse(), 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(qi.eps[i] == -q.eps[i]);
    }
}

TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(Presentation::make({"x", "x"}, {}), input_error);
    CHECK_THROWS_AS(Presentation::make({"1x"}, {}), input_error);
    Presentation p = Presentation::make({"x", "y"}, {"(x,y)"});
    CHECK(p.rank() == 2);
    CHECK(p.relators.size() == 1);
}
