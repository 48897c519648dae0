// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "ahg/scalar.hpp"

using namespace ahg;
using Catch::Matchers::ContainsSubstring;

namespace {

ScalarContext q_ctx(long d = 0) {
    ScalarContext c;
    c.d = d;
    c.parameters = {"q"};
    return c;
}

Scalar rnd(std::mt19937& rng, long d) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Term> raw;
    for (int e = 0; e < 3; ++e) {
        Term t;
        if (e > 0) t.mono = Monomial::variable(0, e);
        t.p = Rational(num(rng), den(rng));
        t.q = d ? Rational(num(rng), den(rng)) : Rational(0);
        t.p.canonicalize();
        t.q.canonicalize();
        raw.push_back(t);
    }
    return Scalar::normalize(raw, d);
}

}  // namespace

TEST_CASE("normalize reduces fractions and drops zeros", "[scalars]") {
    const Scalar a = Scalar::normalize({{Monomial(), Rational(2, 4), 0}}, 0);
    CHECK(a == Scalar(Rational(1, 2)));
    CHECK(a.terms().front().p.get_den() == 2);

    CHECK(Scalar::normalize({{Monomial(), 0, 0}}, 0).is_zero());
    CHECK(Scalar::normalize({{Monomial(), 0, 0}}, 0).terms().empty());

    const Scalar b = Scalar::normalize({{Monomial::variable(0), Rational(3, 6), Rational(2, 4)}}, 3);
    REQUIRE(b.terms().size() == 1);
    CHECK(b.terms().front().p == Rational(1, 2));
    CHECK(b.terms().front().q == Rational(1, 2));

    const Scalar c = Scalar::normalize({{Monomial(), 1, 1}, {Monomial(), -1, -1}}, 5);
    CHECK(c.is_zero());
    CHECK(c.extension() == 0);
}

TEST_CASE("normalize rejects a non-square-free extension", "[scalars]") {
    CHECK_THROWS_WITH(Scalar::quadratic(0, 1, 12), ContainsSubstring("square-free"));
    CHECK_THROWS_AS(Scalar::normalize({{Monomial(), 1, 1}}, 8), ScalarError);
}

TEST_CASE("ring operations", "[scalars]") {
    const Scalar r3 = Scalar::root(3);
    const Scalar a = Scalar(Rational(1, 2)) + Scalar::quadratic(0, Rational(1, 2), 3);
    CHECK(a * r3 == Scalar::quadratic(Rational(3, 2), Rational(1, 2), 3));

    const Scalar q = Scalar::parameter(0);
    CHECK(q * q == Scalar::parameter(0, 2));

    const Scalar h = Scalar::quadratic(0, Rational(-1, 2), 3);
    CHECK(h * h == Scalar(Rational(3, 4)));
    CHECK((h * h).extension() == 0);

    CHECK_THROWS_WITH(Scalar::root(2) * Scalar::root(3), ContainsSubstring("extension mismatch"));
    CHECK(Scalar::root(2) * Scalar(3) == Scalar::quadratic(0, 3, 2));
}

TEST_CASE("division by constants", "[scalars]") {
    CHECK(Scalar(9) / Scalar(4) == Scalar(Rational(9, 4)));
    CHECK((Scalar(1) + Scalar::root(3)) / Scalar(2) == Scalar::quadratic(Rational(1, 2), Rational(1, 2), 3));
    CHECK(Scalar(1) / (Scalar(1) + Scalar::root(2)) == Scalar::quadratic(-1, 1, 2));
    CHECK_THROWS_WITH(Scalar(3) / Scalar::parameter(0), ContainsSubstring("non-constant divisor"));
    CHECK_THROWS_WITH(Scalar(3) / Scalar(), ContainsSubstring("division by zero"));
}

TEST_CASE("evaluation at parameter values", "[scalars]") {
    const auto ctx = q_ctx();
    const Scalar s = parse_scalar("-5/2 + -1/2*q^2", ctx);
    CHECK(evaluate(s, ctx, {{"q", Rational(1)}}) == Scalar(-3));
    const Scalar t = parse_scalar("-7/2 + -3/2*q^2", ctx);
    CHECK(evaluate(t, ctx, {{"q", Rational(0)}}) == Scalar(Rational(-7, 2)));
    CHECK(evaluate(Scalar(5), ctx, {{"q", Rational(11)}}) == Scalar(5));
    CHECK_THROWS_WITH(evaluate(s, ctx, {}), ContainsSubstring("q"));
}

TEST_CASE("literal grammar round trip", "[scalars]") {
    const auto ctx = q_ctx(3);
    for (const char* text : {"-1/2 + 1/2*r", "-q", "3/4*q^2", "0", "r*q", "-2 + -1/3*r*q^3"}) {
        const Scalar a = parse_scalar(text, ctx);
        CHECK(parse_scalar(to_literal(a, ctx), ctx) == a);
    }
    CHECK(to_literal(parse_scalar("1/2*r + -1/2", ctx), ctx) == "-1/2 + 1/2*r");
    CHECK(to_literal(parse_scalar("-q", ctx), ctx) == "-q");
    CHECK_THROWS_AS(parse_scalar("1/0", ctx), ScalarError);
    CHECK_THROWS_AS(parse_scalar("2*p", ctx), ScalarError);
    CHECK_THROWS_AS(parse_scalar("r", q_ctx(0)), ScalarError);
}

TEST_CASE("coefficient text for reports", "[scalars]") {
    const ScalarContext ctx{3, {}};
    const auto c = coefficient_text(Scalar::quadratic(0, Rational(-1, 2), 3), ctx);
    CHECK(c.negative);
    CHECK(c.magnitude == "(1/2)*r");
    CHECK(coefficient_text(Scalar(1), ctx).magnitude.empty());
}

TEST_CASE("rational roots of univariate polynomials", "[scalars]") {
    const auto ctx = q_ctx();
    const auto roots = rational_roots(parse_scalar("q^3 + -1/4*q", ctx), 0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-1, 2));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(1, 2));
    CHECK(rational_roots(parse_scalar("q^2 + 1", ctx), 0).empty());
}

TEST_CASE("ring axioms on random scalars", "[scalars][property]") {
    std::mt19937 rng(20260);
    for (long d : {0L, 3L, 5L}) {
        for (int k = 0; k < 60; ++k) {
            const Scalar a = rnd(rng, d), b = rnd(rng, d), c = rnd(rng, d);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == Scalar());
            const Scalar k0 = Scalar::quadratic(Rational(k + 1, 3), d ? Rational(1, k + 2) : Rational(0), d);
            CHECK((a * k0) / k0 == a);
            const auto ctx = q_ctx(d);
            const std::map<std::string, Rational> at{{"q", Rational(k - 30, 7)}};
            CHECK(evaluate(a * b, ctx, at) == evaluate(a, ctx, at) * evaluate(b, ctx, at));
            CHECK(parse_scalar(to_literal(a, ctx), ctx) == a);
        }
    }
}
