#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chowlab/polynomial.hpp"

using namespace chow;

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(2) == Rational(4));
}

TEST_CASE("parse and print round trip") {
    auto ctx = VarContext::ambient_cube(1, 2);
    std::string s = "3/2*x1^2*y2 - 1";
    Polynomial p = Polynomial::parse(ctx, s);
    CHECK(p.str() == s);
    CHECK(Polynomial(ctx).str() == "0");
    CHECK(Polynomial::parse(ctx, "y1 - y1").is_zero());
    CHECK(Polynomial::parse(ctx, "2*y1*y1").str() == "2*y1^2");
    CHECK(Polynomial::parse(ctx, "-x1 + y1").str() == "-x1 + y1");
    CHECK(Polynomial::parse(ctx, "(x1 + 1)^2").str() == "x1^2 + 2*x1 + 1");
    CHECK_THROWS(Polynomial::parse(ctx, "z9"));
    CHECK_THROWS(Polynomial::parse(ctx, "1.5*x1"));
    CHECK_THROWS(Polynomial::parse(ctx, "x1 +"));
}

TEST_CASE("coefficient slash binds as rational coefficient") {
    auto ctx = VarContext::ambient_cube(1, 0);
    Polynomial p = Polynomial::parse(ctx, "3/2*x1");
    Polynomial q = Polynomial::parse(ctx, "x1 + x1/2");
    CHECK(p == q);
}

TEST_CASE("substitution of a cube coordinate") {
    // (1-(1-c)*(1-z))*y with z := 0 becomes c*y.
    auto ctx = VarContext::make({}, {"y", "z"}, {}, {"c"});
    Polynomial p = Polynomial::parse(ctx, "(1-(1-c)*(1-z))*y");
    Polynomial r = p.substituted_value(*ctx->index_of("z"), Rational(0));
    CHECK(r == Polynomial::parse(ctx, "c*y"));
    Polynomial r1 = p.substituted_value(*ctx->index_of("z"), Rational(1));
    CHECK(r1 == Polynomial::parse(ctx, "y"));
}

TEST_CASE("substitution is a ring homomorphism") {
    auto ctx = VarContext::ambient_cube(1, 2);
    std::mt19937_64 rng(20240711);
    auto rand_rat = [&]() {
        long n = (long)(rng() % 19) - 9;
        long d = (long)(rng() % 6) + 1;
        return Rational(n, d);
    };
    auto rand_poly = [&]() {
        Polynomial p(ctx);
        for (int t = 0; t < 4; ++t) {
            Monomial m(ctx->total(), 0);
            for (int v = 0; v < ctx->total(); ++v) m[v] = rng() % 3;
            p.add_term(m, rand_rat());
        }
        return p;
    };
    // substituted values stay linear in x1 so the cross multiplied equality
    // checks stay small
    auto rand_linear = [&]() {
        Polynomial p(ctx);
        Monomial x(ctx->total(), 0);
        x[*ctx->index_of("x1")] = 1;
        p.add_term(x, rand_rat());
        p.add_term(Monomial(ctx->total(), 0), rand_rat() + Rational(1, 7));
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = rand_poly(), q = rand_poly();
        std::vector<std::optional<RationalFunction>> sub(ctx->total());
        sub[*ctx->index_of("y1")] = RationalFunction(rand_linear(), rand_linear());
        sub[*ctx->index_of("y2")] = RationalFunction(rand_linear(), rand_linear());
        RationalFunction lhs = (p * q).substituted(ctx, sub);
        RationalFunction rhs = p.substituted(ctx, sub) * q.substituted(ctx, sub);
        CHECK(lhs.equals(rhs));
        RationalFunction lhs2 = (p + q).substituted(ctx, sub);
        RationalFunction rhs2 = p.substituted(ctx, sub) + q.substituted(ctx, sub);
        CHECK(lhs2.equals(rhs2));
    }
}

TEST_CASE("rational functions reduce and compare exactly") {
    auto ctx = VarContext::ambient_cube(0, 2);
    auto rf = [&](const std::string& s) { return RationalFunction::parse(ctx, s); };
    CHECK(rf("(y1^2 - y2^2)/(y1 - y2)").equals(rf("y1 + y2")));
    CHECK(rf("(y1*y2)/(y1)").is_polynomial());
    // canonical display: integer coefficients, coprime contents, positive
    // leading coefficient on the denominator
    CHECK(rf("(y1)/(1 - y2)").str() == "(-y1)/(y2 - 1)");
    CHECK(rf("(2*y1)/(4*y2)").str() == "(y1)/(2*y2)");
    CHECK(rf("(1/2*y1)/(y2)").str() == "(y1)/(2*y2)");
    CHECK(rf("(3/2*y1)/(5/7*y2)").str() == "(21*y1)/(10*y2)");
    CHECK_THROWS(rf("1/(y1 - y1)"));
    // denominator vanishing under substitution is an error
    RationalFunction f = rf("1/(1 - y1)");
    std::vector<std::optional<RationalFunction>> sub(ctx->total());
    sub[*ctx->index_of("y1")] = RationalFunction::constant(ctx, Rational(1));
    CHECK_THROWS(f.substituted(ctx, sub));
}

TEST_CASE("rational function evaluation") {
    auto ctx = VarContext::ambient_cube(0, 2);
    RationalFunction f = RationalFunction::parse(ctx, "(y1 + 1)/(y2 - 2)");
    CHECK(f.evaluated({Rational(1), Rational(3)}) == Rational(2));
    CHECK_THROWS(f.evaluated({Rational(1), Rational(2)}));
}

TEST_CASE("derivative and primitive normalization") {
    auto ctx = VarContext::ambient_cube(2, 0);
    Polynomial p = Polynomial::parse(ctx, "x1^3*x2 - 2*x1");
    Polynomial d = p.derivative(*ctx->index_of("x1"));
    CHECK(d == Polynomial::parse(ctx, "3*x1^2*x2 - 2"));
    MonomialOrder ord = MonomialOrder::grevlex(*ctx);
    CHECK(Polynomial::parse(ctx, "2*x1 - 4").primitive_normalized(ord).str() == "x1 - 2");
    CHECK(Polynomial::parse(ctx, "-1/2*x1 + 1").primitive_normalized(ord).str() == "x1 - 2");
    CHECK(Polynomial::parse(ctx, "2/3*x1*x2 + 4/9").primitive_normalized(ord).str() ==
          "3*x1*x2 + 2");
}

TEST_CASE("exact division") {
    auto ctx = VarContext::ambient_cube(2, 0);
    MonomialOrder ord = MonomialOrder::grevlex(*ctx);
    Polynomial p = Polynomial::parse(ctx, "x1^2 - x2^2");
    Polynomial d = Polynomial::parse(ctx, "x1 - x2");
    auto q = divide_exact(p, d, ord);
    REQUIRE(q.has_value());
    CHECK(*q == Polynomial::parse(ctx, "x1 + x2"));
    CHECK(!divide_exact(Polynomial::parse(ctx, "x1^2 + 1"), d, ord).has_value());
}

TEST_CASE("monomial orders") {
    auto ctx = VarContext::make({"x"}, {"y1", "y2"}, {}, {"c"});
    MonomialOrder grev = MonomialOrder::grevlex(*ctx);
    MonomialOrder lex = MonomialOrder::lex(*ctx);
    auto mono = [&](std::initializer_list<uint32_t> e) { return Monomial(e); };
    // grevlex: degree first, then reverse lex tie break (x > y1 > y2)
    CHECK(grev.greater(mono({2, 0, 0, 0}), mono({1, 1, 0, 0})));
    CHECK(grev.greater(mono({1, 1, 0, 0}), mono({0, 0, 2, 0})));
    CHECK(grev.greater(mono({1, 0, 1, 0}), mono({0, 1, 1, 0})));
    // parameters are smaller than any main variable
    CHECK(grev.greater(mono({0, 0, 1, 0}), mono({0, 0, 0, 5})));
    CHECK(lex.greater(mono({1, 0, 0, 0}), mono({0, 3, 3, 0})));
    // lex within the main block
    CHECK(lex.greater(mono({0, 1, 0, 0}), mono({0, 0, 2, 0})));
}

TEST_CASE("grevlex tie break") {
    auto ctx = VarContext::ambient_cube(3, 0);
    MonomialOrder ord = MonomialOrder::grevlex(*ctx);
    // x1*x3 vs x2^2: same degree; last nonzero of difference (1,-2,1) is +1
    // at x3, so x1*x3 is smaller.
    CHECK(ord.less(Monomial{1, 0, 1}, Monomial{0, 2, 0}));
    CHECK(ord.greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
}

TEST_CASE("embedding between contexts") {
    auto small = VarContext::ambient_cube(1, 1);
    auto big = VarContext::make({"x1"}, {"y1"}, {"_t"}, {"c1"});
    Polynomial p = Polynomial::parse(small, "x1*y1 - 2");
    Polynomial q = p.embedded(big);
    CHECK(q.str() == "x1*y1 - 2");
    Polynomial back = q.embedded(small);
    CHECK(back == p);
    Polynomial with_aux = Polynomial::variable(big, big->aux_index(0));
    CHECK_THROWS(with_aux.embedded(small));
}
