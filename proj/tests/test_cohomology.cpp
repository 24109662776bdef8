#include "doctest.h"
#include "generators.hpp"

#include "futaki/cohomology.hpp"
#include "futaki/error.hpp"

using namespace futaki;
using futaki::testing::p1xp2;
using futaki::testing::random_class;

namespace {

// Builds sum of (coefficient, monomial) pairs in `ring`.
NilpotentClass cls(const Ring& ring, std::initializer_list<std::pair<const char*, const char*>> terms) {
    NilpotentClass out(ring);
    for (const auto& [mono, coef] : terms)
        out.add_term(ring->parse_monomial(mono), RationalFunction(ParamPoly::parse(coef)));
    return out;
}

RationalFunction rf(const char* text) { return RationalFunction(ParamPoly::parse(text)); }

}  // namespace

TEST_CASE("ring_create") {
    const Ring r = p1xp2();
    CHECK(r->dimension() == 3);
    CHECK(r->top() == Exponents{1, 2});
    CHECK(r->parse_monomial("a*b^2") == Exponents{1, 2});
    CHECK(r->parse_monomial("ab^2") == Exponents{1, 2});
    CHECK(r->monomial_to_string({1, 2}) == "a*b^2");

    const Ring pt = RingSpec::create({{"x", 1, 2}}, {0}, 0);
    CHECK(pt->dimension() == 0);

    CHECK_THROWS_AS(RingSpec::create({{"a", 2, 2}, {"b", 3, 2}}, {2, 0}, 2), ValidationError);
    CHECK_THROWS_AS(RingSpec::create({{"a", 2, 2}, {"b", 3, 2}}, {1, 2}, 4), ValidationError);
    CHECK_THROWS_AS(RingSpec::create({{"a", 2, 3}}, {1}, 1), ValidationError);
    CHECK_THROWS_AS(RingSpec::create({{"a", 2, 2}, {"a", 2, 2}}, {1, 0}, 1), ValidationError);
    CHECK_THROWS_AS(r->parse_monomial("z"), ParseError);
}

TEST_CASE("class_mul examples") {
    const Ring r = p1xp2();
    const auto a4b = cls(r, {{"a", "1"}, {"b", "4"}});
    CHECK(class_mul(a4b, a4b) == cls(r, {{"ab", "8"}, {"b^2", "16"}}));
    CHECK(class_mul(a4b, NilpotentClass(r)).is_zero());
    CHECK(class_mul(cls(r, {{"a", "-1"}, {"b", "1"}}), cls(r, {{"a", "1"}, {"b", "-1"}})) ==
          cls(r, {{"ab", "2"}, {"b^2", "-1"}}));

    const Ring other = RingSpec::create({{"a", 2, 2}}, {1}, 1);
    CHECK_THROWS_AS(class_mul(a4b, NilpotentClass::generator(other, 0)), UsageError);
}

TEST_CASE("equiv_pow examples") {
    const Ring r = p1xp2();
    const EquivariantClass x(RationalFunction(Rational(-1, 2)), cls(r, {{"a", "1"}, {"b", "4"}}));
    // frozen from an independent symbolic expansion with a^2 = b^3 = 0
    const EquivariantClass cube = equiv_pow(x, 3);
    CHECK(cube.scalar() == RationalFunction(Rational(-1, 8)));
    CHECK(cube.nilpotent() == cls(r, {{"a", "3/4"}, {"b", "3"}, {"ab", "-12"}, {"b^2", "-24"}, {"ab^2", "48"}}));

    CHECK(equiv_pow(x, 0) == EquivariantClass::one(r));
    const EquivariantClass pure_a(RationalFunction(), cls(r, {{"a", "1"}}));
    CHECK(equiv_pow(pure_a, 2).scalar().is_zero());
    CHECK(equiv_pow(pure_a, 2).nilpotent().is_zero());
}

TEST_CASE("invert_unit examples") {
    const Ring r = p1xp2();
    const EquivariantClass half(RationalFunction(Rational(1, 2)), NilpotentClass(r));
    CHECK(invert_unit(half) == EquivariantClass(RationalFunction(Rational(2)), NilpotentClass(r)));

    const EquivariantClass one_a(RationalFunction(Rational(1)), cls(r, {{"a", "1"}}));
    CHECK(invert_unit(one_a) == EquivariantClass(RationalFunction(Rational(1)), cls(r, {{"a", "-1"}})));

    const EquivariantClass euler(RationalFunction(Rational(-1, 2)), cls(r, {{"a", "-1"}, {"b", "1"}}));
    const EquivariantClass inv = invert_unit(euler);
    CHECK(inv.scalar() == RationalFunction(Rational(-2)));
    CHECK(inv.nilpotent() == cls(r, {{"a", "4"}, {"b", "-4"}, {"ab", "16"}, {"b^2", "-8"}, {"ab^2", "48"}}));
    CHECK(euler * inv == EquivariantClass::one(r));

    const EquivariantClass degenerate(RationalFunction(), cls(r, {{"a", "1"}}));
    CHECK_THROWS_AS(invert_unit(degenerate), DegenerateError);
}

TEST_CASE("integrate examples") {
    const Ring r = p1xp2();
    CHECK(integrate(EquivariantClass(RationalFunction(), cls(r, {{"ab^2", "48"}}))) == RationalFunction(Rational(48)));
    CHECK(integrate(EquivariantClass(RationalFunction(), cls(r, {{"a", "1"}, {"b", "4"}}))).is_zero());
    const Ring pt = RingSpec::point();
    CHECK(integrate(EquivariantClass(rf("2c-1"), NilpotentClass(pt))) == rf("2c-1"));
}

TEST_CASE("scalar part is folded out of the nilpotent part") {
    const Ring r = p1xp2();
    const EquivariantClass x(RationalFunction(Rational(1)), cls(r, {{"1", "2"}, {"a", "1"}}));
    CHECK(x.scalar() == RationalFunction(Rational(3)));
    CHECK(x.nilpotent().coefficient(r->unit_exponents()).is_zero());
}

TEST_CASE("ring algebra properties on random instances") {
    const Ring r = p1xp2();
    const Ring r2 = RingSpec::create({{"u", 4, 2}, {"v", 2, 4}}, {1, 1}, 3);
    for (int i = 0; i < 120; ++i) {
        const Ring& ring = i % 2 == 0 ? r : r2;
        const NilpotentClass x = random_class(ring), y = random_class(ring), z = random_class(ring);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);

        // integrate is linear
        const EquivariantClass ex(x), ey(y);
        CHECK(integrate(ex + ey) == integrate(ex) + integrate(ey));

        // truncation soundness: nothing stored above the top degree
        const NilpotentClass xyz = x * y * z;
        for (const auto& [e, c] : xyz.terms()) CHECK(ring->complex_degree(e) <= ring->dimension());
    }
}

TEST_CASE("invert_unit and equiv_pow properties") {
    const Ring r = p1xp2();
    int checked = 0;
    while (checked < 120) {
        const NilpotentClass n = random_class(r, false);
        const RationalFunction s(futaki::testing::random_poly(1, 5));
        if (s.is_zero()) continue;
        const EquivariantClass x(s, n);
        CHECK(x * invert_unit(x) == EquivariantClass::one(r));
        const unsigned p = static_cast<unsigned>(checked % 4), q = static_cast<unsigned>(checked % 3);
        CHECK(equiv_pow(x, p + q) == equiv_pow(x, p) * equiv_pow(x, q));
        ++checked;
    }
}
