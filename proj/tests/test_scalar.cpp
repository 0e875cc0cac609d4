// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "helpers.hpp"

#include "solitonkit/error.hpp"

using namespace sk;
using namespace testing;

TEST_CASE("rational normalization")
{
    CHECK(Rational(10, -4).str() == "-5/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).denominator() == "1");
    CHECK(Rational(9, 5).str() == "9/5");
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational big values do not overflow")
{
    Rational x(1);
    for (int i = 0; i < 40; ++i)
        x *= Rational(1'000'000'007);
    CHECK(x.str().size() > 300);
    CHECK((x / x) == Rational(1));
}

TEST_CASE("normalize is idempotent")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Rational r = random_rational(rng, 1000, 1000);
        CHECK(normalize(normalize(r)) == normalize(r));
        CHECK(normalize(r) == r);
    }
}

TEST_CASE("param scalar arithmetic")
{
    const ParamScalar lam = ps("p/2 + 9/5");
    CHECK(lam.str() == "1/2*p + 9/5");
    CHECK((lam - ps("p/2")) == ParamScalar(q(9, 5)));
    CHECK((P() * ParamScalar(0)).is_zero());
    CHECK(((P() + 1) * (P() - 1)) == ps("p^2 - 1"));
    CHECK(((P() + 1) * (P() - 1)).str() == "p^2 + -1");
    CHECK(ps("2*(p - 3)/4").str() == "1/2*p + -3/2");
    CHECK_THROWS_AS(ps("1/p"), Error);
    CHECK_THROWS_AS(ps("p +"), Error);
}

TEST_CASE("param scalar evaluation")
{
    CHECK(ps("p/2 + 9/5").evaluate({{"p", q(2)}}) == q(14, 5));
    CHECK(ParamScalar(4).evaluate({{"p", q(-7)}}) == q(4));
    CHECK(ParamScalar(4).evaluate({}) == q(4));
    CHECK(P().evaluate({{"p", q(-52, 5)}}) == q(-52, 5));
    CHECK_THROWS_AS((void)P().evaluate({}), Error);
    try {
        (void)ps("p + t").evaluate({{"p", q(1)}});
        FAIL("expected an unbound-parameter error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unknown_name);
        CHECK(std::string(e.what()).find("'t'") != std::string::npos);
    }
}

TEST_CASE("solve linear")
{
    auto lambda = ParamScalar::symbol("lambda");
    auto solve = [&](const ParamScalar& expr) { return solve_linear(to_linear_form(expr, "lambda")); };
    CHECK(solve(Rational(10) * lambda + (Rational(-5) * P() - 18)) == ps("p/2 + 9/5"));
    CHECK(solve(Rational(2) * lambda) == ParamScalar(0));
    CHECK(solve(Rational(10) * lambda + (Rational(-5) * P() + 6)) == ps("p/2 - 3/5"));

    auto kind_of = [&](const ParamScalar& expr) {
        try {
            (void)solve(expr);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::io;
    };
    CHECK(kind_of(ParamScalar(3)) == ErrorKind::inconsistent);
    CHECK(kind_of(ParamScalar(0)) == ErrorKind::underdetermined);
    CHECK(kind_of(lambda * lambda) == ErrorKind::unsupported);
    CHECK(kind_of(lambda * P()) == ErrorKind::unsupported);
}

namespace {

ParamScalar random_scalar(std::mt19937& rng)
{
    static const std::vector<std::string> names{"p", "t"};
    std::uniform_int_distribution<int> terms(0, 4), deg(0, 2), which(0, 1);
    ParamScalar s;
    for (int k = terms(rng); k > 0; --k) {
        ParamScalar::Monomial mono;
        for (int d = deg(rng); d > 0; --d)
            mono.push_back(names[which(rng)]);
        s += ParamScalar::term(mono, random_rational(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(2024);
    for (int t = 0; t < 300; ++t) {
        ParamScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a - a).is_zero());
        CHECK((a * ParamScalar(1)) == a);
        CHECK(ParamScalar::parse(a.str()) == a);
    }
}

TEST_CASE("solve then back-substitute gives zero")
{
    std::mt19937 rng(99);
    const auto lambda = ParamScalar::symbol("lambda");
    for (int t = 0; t < 200; ++t) {
        Rational a = random_rational(rng);
        if (a.is_zero())
            a = Rational(3, 7);
        ParamScalar rest = random_rational(rng) * P() + ParamScalar(random_rational(rng));
        ParamScalar expr = a * lambda + rest;
        ParamScalar sol = solve_linear(to_linear_form(expr, "lambda"));
        CHECK(expr.substitute("lambda", sol).is_zero());
    }
}
