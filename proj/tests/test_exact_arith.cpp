#include "doctest.h"
#include "generators.hpp"

#include "futaki/error.hpp"
#include "futaki/poly_algo.hpp"
#include "futaki/rational_function.hpp"

using namespace futaki;
using futaki::testing::random_nonzero_poly;
using futaki::testing::random_nonzero_rational;
using futaki::testing::random_poly;
using futaki::testing::random_rational;
using futaki::testing::random_ratfun;

namespace {
ParamPoly P(const char* text) { return ParamPoly::parse(text); }
}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("\xE2\x88\x92" "1/2") == Rational(-1, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(factorial(4) == Rational(24));
}

TEST_CASE("rational field axioms on random triples") {
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("polynomial parsing and printing") {
    CHECK(P("112c-6").coefficients() == std::vector<Rational>{-6, 112});
    CHECK(P("2c\xE2\x88\x92" "1/2") == ParamPoly({Rational(-1, 2), 2}));
    CHECK(P("(3/4)c") == P("3/4*c"));
    CHECK(P("3/4c") == P("(3/4)c"));
    CHECK(P("c^2+1").degree() == 2);
    CHECK(P("0").is_zero());
    CHECK(P("112c^2-112c+23").to_string() == "112c^2-112c+23");
    CHECK(P("-1/2+2c").to_string() == "2c-1/2");
    CHECK(P("(3/4)c").to_string() == "(3/4)c");
    CHECK(ParamPoly::parse("t^2-t", "").name() == "t");
    CHECK_THROWS_AS(P("2x+1"), ParseError);
    CHECK_THROWS_AS(P("c^"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("poly_arith examples") {
    CHECK(P("112c-6") + P("106-112c") == ParamPoly(Rational(100)));
    CHECK((P("c^2+3") * ParamPoly()).is_zero());
    CHECK(P("-30c+12") * P("53-56c") + P("30c-18") * P("56c-3") == Rational(30) * P("112c^2-112c+23"));
    CHECK_THROWS_AS(ParamPoly::parse("t+1", "t") + P("c"), UsageError);
    // constants mix with any parameter
    CHECK((ParamPoly::parse("t+1", "t") + ParamPoly(Rational(2))).name() == "t");
}

TEST_CASE("poly_gcd examples") {
    CHECK(gcd(P("112c^2-112c+23"), P("56c-3")) == ParamPoly(Rational(1)));
    CHECK(gcd(P("4c-2"), ParamPoly()) == P("c-1/2"));
    CHECK(gcd(P("c^2-1"), P("c-1")) == P("c-1"));
    CHECK_THROWS_AS(gcd(ParamPoly(), ParamPoly()), DomainError);
}

TEST_CASE("ratfun_reduce examples") {
    const ParamPoly num = Rational(30) * P("112c^2-112c+23");
    const ParamPoly den = Rational(-2) * P("56c-3") * P("56c-53");
    const RationalFunction f = RationalFunction::reduce(num, den);
    CHECK(f.den().leading() == Rational(1));
    CHECK(f.num() == Rational(-15, 3136) * P("112c^2-112c+23"));
    CHECK(f.to_factored_string() == "-15(112c^2-112c+23)/((56c-3)(56c-53))");

    const ParamPoly p = P("c^3-2c+5");
    CHECK(RationalFunction::reduce(p, p) == RationalFunction(Rational(1)));
    CHECK(RationalFunction::reduce(P("c^2-1"), P("c-1")) == RationalFunction(P("c+1")));
    CHECK_THROWS_AS(RationalFunction::reduce(p, ParamPoly()), DomainError);
}

TEST_CASE("ratfun_eval examples") {
    const RationalFunction fut = RationalFunction::reduce(Rational(-3) * P("112c^2-112c+23"), P("56c-3") * P("56c-53"));
    CHECK(fut.eval(Rational(1, 2)) == Rational(-3, 125));
    CHECK(RationalFunction(P("112c-6")).eval(Rational(1, 2)) == Rational(50));
    const RationalFunction pole = RationalFunction::reduce(ParamPoly(Rational(1)), P("56c-3"));
    CHECK_THROWS_AS(pole.eval(Rational(3, 56)), PoleError);
    try {
        pole.eval(Rational(3, 56));
    } catch (const PoleError& e) {
        CHECK(std::string(e.what()).find("3/56") != std::string::npos);
    }
}

TEST_CASE("factored rendering") {
    CHECK(RationalFunction(P("112c-6")).to_factored_string() == "2(56c-3)");
    CHECK(RationalFunction(P("112c-6")).to_string() == "112c-6");
    CHECK(RationalFunction(P("c")).to_factored_string() == "c");
    CHECK(RationalFunction(P("2c^2-4c+2")).to_factored_string() == "2(c-1)^2");
    CHECK(RationalFunction::reduce(P("c"), P("c+1")).to_factored_string() == "c/(c+1)");
    CHECK(RationalFunction::reduce(P("1"), P("2c")).to_factored_string() == "(1/2)/c");
    CHECK(RationalFunction(Rational(-3, 125)).to_factored_string() == "-3/125");
    CHECK(RationalFunction().to_factored_string() == "0");
}

TEST_CASE("interpolation recovers polynomials exactly") {
    for (int i = 0; i < 50; ++i) {
        const ParamPoly p = random_poly(4);
        std::vector<std::pair<Rational, Rational>> pts;
        for (int x = 0; x < 5; ++x) pts.emplace_back(Rational(x, 3), p.eval(Rational(x, 3)));
        CHECK(ParamPoly::interpolate(pts) == p);
    }
}

TEST_CASE("rational function properties") {
    for (int i = 0; i < 100; ++i) {
        const ParamPoly p = random_poly(3);
        const ParamPoly q = random_nonzero_poly(3);
        // reduce(p q, q) == reduce(p, 1)
        CHECK(RationalFunction::reduce(p * q, q) == RationalFunction::reduce(p, ParamPoly(Rational(1))));

        const RationalFunction f = random_ratfun();
        const RationalFunction g = random_ratfun();
        // canonical form idempotence
        CHECK(RationalFunction::reduce(f.num(), f.den()) == f);
        // eval commutes with addition and multiplication where defined
        const Rational x = random_rational(7);
        if (!f.den().eval(x).is_zero() && !g.den().eval(x).is_zero()) {
            CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
            CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
        }
    }
}

TEST_CASE("square-free decomposition and Sturm counts") {
    const ParamPoly p = P("c-1") * P("c-1") * P("c+2") * P("c^2+1");
    const auto sf = square_free_decomposition(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].multiplicity == 1);
    CHECK(sf[0].factor == P("c+2") * P("c^2+1"));
    CHECK(sf[1].multiplicity == 2);
    CHECK(sf[1].factor == P("c-1"));

    const auto seq = sturm_sequence(P("112c^2-112c+23"));
    CHECK(sturm_count(seq, Rational(1, 4), Rational(3, 4)) == 2);
    CHECK(sturm_count(seq, Rational(1, 4), Rational(1, 2)) == 1);
    CHECK(sturm_count(sturm_sequence(P("c^2+1")), Rational(-10), Rational(10)) == 0);

    CHECK(rational_roots(P("3136c^2-3136c+159")) == std::vector<Rational>{Rational(3, 56), Rational(53, 56)});
    CHECK(rational_roots(P("c^3-c")) == std::vector<Rational>{-1, 0, 1});
    CHECK(rational_roots(P("112c^2-112c+23")).empty());
}
