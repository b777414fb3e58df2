#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "supercurve/poly.hpp"
#include "supercurve/poly_io.hpp"

using namespace supercurve;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

IntPoly from_oracle(const std::vector<oracle::Z>& c) { return IntPoly(std::vector<Integer>(c.begin(), c.end())); }

}  // namespace

TEST(ContentPrimitive, Examples) {
    auto a = content_primitive(P("3*x^2 - 6*x + 9"));
    EXPECT_EQ(a.content, 3);
    EXPECT_EQ(a.primitive, P("x^2 - 2*x + 3"));
    auto b = content_primitive(parse_ratpoly("1/2*x^3 + 2"));
    EXPECT_EQ(b.content, Rational(1, 2));
    EXPECT_EQ(b.primitive, P("x^3 + 4"));
    auto c = content_primitive(P("x^5 + x + 1"));
    EXPECT_EQ(c.content, 1);
    EXPECT_EQ(c.primitive, P("x^5 + x + 1"));
}

TEST(ContentPrimitive, NegativeLeadGoesToContent) {
    auto a = content_primitive(P("-2*x + 4"));
    EXPECT_EQ(a.content, -2);
    EXPECT_EQ(a.primitive, P("x - 2"));
}

TEST(ContentPrimitive, ZeroRejected) { EXPECT_THROW(content_primitive(IntPoly()), ZeroPolynomialError); }

TEST(Squarefree, Examples) {
    auto a = squarefree_decomposition(P("x^2*(x^3 - 1)"));
    ASSERT_EQ(a.parts.size(), 2u);
    EXPECT_EQ(a.parts[0].factor, P("x^3 - 1"));
    EXPECT_EQ(a.parts[0].multiplicity, 1u);
    EXPECT_EQ(a.parts[1].factor, P("x"));
    EXPECT_EQ(a.parts[1].multiplicity, 2u);

    auto b = squarefree_decomposition(P("x^2 - 1"));
    ASSERT_EQ(b.parts.size(), 1u);
    EXPECT_EQ(b.parts[0].factor, P("x^2 - 1"));

    auto c = squarefree_decomposition(P("(x - 1)^2*(x + 2)^3"));
    ASSERT_EQ(c.parts.size(), 2u);
    EXPECT_EQ(c.parts[0].factor, P("x - 1"));
    EXPECT_EQ(c.parts[0].multiplicity, 2u);
    EXPECT_EQ(c.parts[1].factor, P("x + 2"));
    EXPECT_EQ(c.parts[1].multiplicity, 3u);
}

TEST(Squarefree, RandomProductsReconstruct) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> mult(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        // product of random low-degree factors raised to random powers, times a scalar
        const long scalars[] = {-3, -2, -1, 1, 2, 3, 5};
        IntPoly f = IntPoly::constant(Integer(scalars[trial % 7]));
        int k = 1 + trial % 3;
        for (int i = 0; i < k; ++i) f = f * pow(from_oracle(oracle::random_poly(rng, 1 + trial % 2, 4)), static_cast<unsigned long>(mult(rng)));
        auto sq = squarefree_decomposition(f);
        EXPECT_EQ(sq.reconstruct(), to_rational(f));
        for (std::size_t i = 0; i < sq.parts.size(); ++i) {
            const auto& pi = sq.parts[i].factor;
            ASSERT_GE(pi.degree(), 1);
            if (pi.degree() >= 2) {
                EXPECT_NE(oracle::discriminant(pi.coeffs()), 0) << format_poly(pi);
            }
            if (i) {
                EXPECT_LT(sq.parts[i - 1].multiplicity, sq.parts[i].multiplicity);
            }
            for (std::size_t j = i + 1; j < sq.parts.size(); ++j)
                EXPECT_NE(oracle::sylvester_resultant(pi.coeffs(), sq.parts[j].factor.coeffs()), 0);
        }
    }
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(P("x^2 - 1")), 4);
    EXPECT_EQ(discriminant(P("x^2")), 0);
    EXPECT_EQ(discriminant(P("x^3 - 1")), -27);
    EXPECT_EQ(discriminant(P("x^10 + x + 1")), Rational(Integer("-9612579511")));
    EXPECT_THROW(discriminant(P("7")), DegreeTooSmallError);
}

TEST(Discriminant, MatchesSylvesterOracle) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        int d = 2 + trial % 9;
        auto c = oracle::random_poly(rng, d, 6);
        EXPECT_EQ(discriminant(from_oracle(c)), oracle::discriminant(c)) << format_poly(from_oracle(c));
    }
}

TEST(Resultant, MatchesSylvesterOracle) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = oracle::random_poly(rng, 1 + trial % 6, 5);
        auto b = oracle::random_poly(rng, 1 + (trial / 6) % 5, 5);
        EXPECT_EQ(resultant(from_oracle(a), from_oracle(b)), oracle::sylvester_resultant(a, b));
    }
}

TEST(Gcd, CommonFactorRecovered) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_poly(rng, 1 + trial % 3, 3);
        auto a = oracle::random_poly(rng, 1 + trial % 4, 3);
        auto b = oracle::random_poly(rng, 1 + trial % 5, 3);
        IntPoly G = from_oracle(g);
        IntPoly r = gcd(from_oracle(oracle::multiply(g, a)), from_oracle(oracle::multiply(g, b)));
        // G divides the result
        EXPECT_TRUE(divmod(to_rational(r), to_rational(G)).second.is_zero());
    }
}

TEST(Mobius, Examples) {
    EXPECT_EQ(mobius_transform(P("x"), Mobius::translation(Integer(1)), 1), P("x + 1"));
    EXPECT_EQ(mobius_transform(P("x^2 + 1"), Mobius::inversion(), 2), P("x^2 + 1"));
    EXPECT_EQ(mobius_transform(P("x^5 + x + 1"), Mobius::translation(Integer(3)), 5),
              P("x^5 + 15*x^4 + 90*x^3 + 270*x^2 + 406*x + 247"));
    EXPECT_THROW(mobius_transform(P("x"), Mobius{1, 2, 2, 4}, 1), DegenerateTransformError);
    EXPECT_THROW(mobius_transform(P("x^3"), Mobius::identity(), 2), DegreeTooSmallError);
}

TEST(Mobius, TranslationMatchesBinomialExpansion) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> tdist(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_poly(rng, 1 + trial % 10, 9);
        long t = tdist(rng);
        EXPECT_EQ(mobius_transform(from_oracle(c), Mobius::translation(Integer(t)), static_cast<unsigned long>(c.size() - 1)),
                  from_oracle(oracle::translate(c, t)));
    }
}

TEST(Mobius, CompositionIsMatrixProduct) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> e(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Mobius m1{e(rng), e(rng), e(rng), e(rng)}, m2{e(rng), e(rng), e(rng), e(rng)};
        if (m1.det() == 0 || m2.det() == 0) continue;
        IntPoly f = from_oracle(oracle::random_poly(rng, 4, 5));
        EXPECT_EQ(mobius_transform(mobius_transform(f, m1, 6), m2, 6), mobius_transform(f, m1 * m2, 6));
    }
}

TEST(Mobius, RationalTranslationAndScaling) {
    // (2x + 1)^2 = 4 (x + 1/2)^2
    EXPECT_EQ(mobius_transform(P("x^2"), Mobius::translation(Rational(1, 2)), 2), P("4*x^2 + 4*x + 1"));
    EXPECT_EQ(mobius_transform(P("x^2 + 1"), Mobius::scaling(Rational(2, 3)), 2), P("4*x^2 + 9"));
}

TEST(RationalRoots, Examples) {
    std::vector<Rational> want{Rational(-1), Rational(1, 2), Rational(3)};
    EXPECT_EQ(rational_roots(P("(2*x - 1)*(x + 1)*(x - 3)*(x^2 + 1)")), want);
    std::vector<Rational> zero{Rational(0)};
    EXPECT_EQ(rational_roots(P("x^3")), zero);
    EXPECT_TRUE(rational_roots(P("x^2 - 2")).empty());
}

TEST(Text, ParseAndFormat) {
    EXPECT_EQ(format_poly(P("x^5 + 15*x^4 + 247")), "x^5 + 15*x^4 + 247");
    EXPECT_EQ(format_poly(parse_ratpoly("x^3/2")), "1/2*x^3");
    EXPECT_EQ(format_poly(P("3 - x^2")), "-x^2 + 3");
    EXPECT_EQ(format_poly(IntPoly()), "0");
    EXPECT_EQ(P("x^{10} - 1"), P("x^10 - 1"));
    EXPECT_EQ(P("2x(x+1)"), P("2*x^2 + 2*x"));
    EXPECT_THROW(parse_poly("x^"), ParseError);
    EXPECT_THROW(parse_poly("(x + 1"), ParseError);
    EXPECT_THROW(parse_poly("x/x"), ParseError);
    EXPECT_THROW(parse_poly("x/2"), ParseError);  // not integral
    EXPECT_THROW(parse_poly("y + 1"), ParseError);
}

TEST(Text, RoundTripRandom) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly f = from_oracle(oracle::random_poly(rng, trial % 12, 1000));
        EXPECT_EQ(parse_poly(format_poly(f)), f);
    }
}

TEST(Template, ParametersAndSubstitution) {
    TemplatePoly t = parse_template("x*(x-1)*(x-$l)");
    EXPECT_EQ(template_parameters(t), std::set<std::string>{"l"});
    EXPECT_EQ(substitute(t, {{"l", Rational(2)}}), parse_ratpoly("x^3 - 3*x^2 + 2*x"));
    EXPECT_THROW(substitute(t, {}), ParameterError);
}
