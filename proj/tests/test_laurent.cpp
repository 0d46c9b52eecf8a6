// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "hecke/laurent.hpp"
#include "hecke/rational_function.hpp"
#include "hecke/series.hpp"

using namespace hecke;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }
const LaurentPoly q = LaurentPoly::q();

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exps(-4, 4), coeffs(-5, 5), count(0, 5);
    std::vector<std::pair<int, Rational>> terms;
    for (int t = count(rng); t > 0; --t) terms.emplace_back(exps(rng), Rational(coeffs(rng), 1 + (coeffs(rng) + 5) % 3));
    return LaurentPoly::from_terms(terms);
}

} // namespace

TEST(LaurentText, CanonicalRendering) {
    EXPECT_EQ(P("q^3+2*q^2+3*q-2-q^-1").to_string(), "q^3+2*q^2+3*q-2-q^-1");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    EXPECT_EQ(LaurentPoly(Rational(-3, 2)).to_string(), "-3/2");
    EXPECT_EQ((q.pow(2) * Rational(1, 2) - LaurentPoly::q(-2)).to_string(), "1/2*q^2-q^-2");
}

TEST(LaurentText, ParseAcceptsSpacingAndRepeatedExponents) {
    EXPECT_EQ(P(" q^2 + q^2 "), q.pow(2) * Rational(2));
    EXPECT_EQ(P("2q-1"), q * Rational(2) - LaurentPoly(1));
    EXPECT_EQ(P("-q^-3"), -LaurentPoly::q(-3));
    EXPECT_THROW(P("q^"), ParseError);
    EXPECT_THROW(P("x+1"), ParseError);
    EXPECT_THROW(P(""), ParseError);
}

TEST(LaurentArithmetic, Addition) {
    EXPECT_TRUE((q + (-q)).is_zero());
    EXPECT_EQ(P("q^2+3*q-1") + LaurentPoly(), P("q^2+3*q-1"));
    EXPECT_EQ(P("q^3+2*q^2+3*q-2-q^-1") - P("q^2+3*q-1"), P("q^3+q^2-1-q^-1"));
}

TEST(LaurentArithmetic, Multiplication) {
    EXPECT_EQ(q * LaurentPoly::q(-1), LaurentPoly(1));
    EXPECT_EQ((q - LaurentPoly(1)) * (q + LaurentPoly(1)), P("q^2-1"));
    EXPECT_EQ((q + LaurentPoly(1)) * f_coeff(2), P("q^2-1"));
}

TEST(LaurentArithmetic, ExactDivision) {
    EXPECT_EQ(exact_div(P("q^2-1"), P("q-1")), P("q+1"));
    EXPECT_EQ(exact_div(P("q^3+1"), P("q+1")), P("q^2-q+1"));
    EXPECT_EQ(exact_div(P("q^3+1"), P("q+1")), f_coeff(3));
    EXPECT_THROW(exact_div(q, P("q-1")), NotDivisible);
    EXPECT_THROW(exact_div(q, LaurentPoly()), DivisionByZero);
    EXPECT_EQ(exact_div(P("q^-2+q^-1"), P("1+q")), LaurentPoly::q(-2));
    EXPECT_FALSE(try_exact_div(q, P("q-1")).has_value());
}

TEST(LaurentArithmetic, RingAxiomsOnRandomTriples) {
    std::mt19937 rng(20260101);
    for (int t = 0; t < 300; ++t) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        if (!b.is_zero()) EXPECT_EQ(exact_div(a * b, b), a);
    }
}

TEST(LaurentArithmetic, ExponentOverflowIsAnError) {
    LaurentPoly big = LaurentPoly::q(std::numeric_limits<int>::max() - 1);
    EXPECT_THROW(big * q.pow(5), ExponentOverflow);
}

TEST(QBracket, Values) {
    EXPECT_TRUE(q_bracket(0).is_zero());
    EXPECT_EQ(q_bracket(2), P("1+q"));
    EXPECT_EQ(q_bracket(-1), P("-q^-1"));
    EXPECT_EQ(q_bracket(-3), P("-q^-1-q^-2-q^-3"));
}

TEST(QBracket, TimesQMinusOne) {
    for (int m = -50; m <= 50; ++m) EXPECT_EQ(q_bracket(m) * (q - LaurentPoly(1)), LaurentPoly::q(m) - LaurentPoly(1));
}

TEST(FExpansion, Values) {
    EXPECT_TRUE(f_coeff(0).is_zero());
    EXPECT_EQ(f_coeff(1), LaurentPoly(1));
    EXPECT_EQ(f_coeff(3), P("q^2-q+1"));
    for (int p = 0; p <= 50; ++p)
        EXPECT_EQ(f_coeff(p) * (q + LaurentPoly(1)), q.pow(static_cast<unsigned>(p)) - LaurentPoly(p % 2 ? -1 : 1));
}

TEST(FExpansion, PowerExpandSatisfiesTheQuadraticRelation) {
    EXPECT_EQ(power_expand(1), std::make_pair(LaurentPoly(1), LaurentPoly()));
    EXPECT_EQ(power_expand(2), std::make_pair(P("q-1"), q));
    // both roots of v^2 = (q-1)v + q
    for (const LaurentPoly& v : {q, LaurentPoly(-1)}) {
        for (int p = 1; p <= 12; ++p) {
            auto [fp, qfp1] = power_expand(p);
            EXPECT_EQ(v.pow(static_cast<unsigned>(p)), fp * v + qfp1) << "p = " << p;
        }
    }
}

TEST(Evaluation, AtRationalPoints) {
    EXPECT_EQ(P("q^2+3*q-1").eval_at(1), 3);
    EXPECT_EQ(P("q^3+2*q^2+3*q-2-q^-1").eval_at(1), 3);
    EXPECT_EQ(P("q^-1").eval_at(Rational(1, 2)), 2);
    EXPECT_THROW(P("q^-1").eval_at(0), ZeroBase);
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        LaurentPoly a = random_poly(rng);
        EXPECT_EQ(a.eval_at(1), a.coefficient_sum());
    }
}

TEST(Evaluation, SubstitutePower) {
    EXPECT_EQ(P("q^2+3*q-1").substitute_power(2), P("q^4+3*q^2-1"));
    EXPECT_EQ(P("q^-1").substitute_power(-1), q);
}

TEST(DeltaSeriesTest, Examples) {
    DeltaSeries s = to_delta_series(q, 2);
    EXPECT_EQ(s.order(), 2);
    EXPECT_EQ(s[0], 1);
    EXPECT_EQ(s[1], 1);
    EXPECT_EQ(s[2], Rational(1, 2));
    DeltaSeries t = to_delta_series((LaurentPoly(1) - LaurentPoly::q(-1)) * q, 1);
    EXPECT_EQ(t[0], 0);
    EXPECT_EQ(t[1], 1);
}

TEST(DeltaSeriesTest, RespectsProducts) {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(to_delta_series(a * b, 4), to_delta_series(a, 4) * to_delta_series(b, 4));
    }
}

TEST(RationalFunctionTest, CrossMultiplicationEquality) {
    RationalFunction a(P("q^2-1"), P("q-1"));
    EXPECT_EQ(a, RationalFunction(P("q+1")));
    EXPECT_EQ(a.reduced().denominator(), LaurentPoly(1));
    EXPECT_EQ(RationalFunction(q, P("q+1")) + RationalFunction(LaurentPoly(1), P("q+1")), RationalFunction(1));
    EXPECT_EQ((RationalFunction(q) / RationalFunction(P("q-1"))).eval_at(2), 2);
    EXPECT_THROW(RationalFunction(q, LaurentPoly()), DivisionByZero);
}

TEST(RationalFunctionTest, GcdIsMonic) {
    LaurentPoly g = gcd(P("q^2-1"), P("2*q^2+2*q"));
    EXPECT_EQ(g, P("q+1"));
}
