#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "supercurve/heights.hpp"

using namespace supercurve;

namespace {

// max |a_i| / gcd(a_i), computed without the library
Integer oracle_height(const IntPoly& f) {
    Integer g = 0, m = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (abs(c) > m) m = abs(c);
    }
    return m / g;
}

}  // namespace

TEST(PolyHeight, Examples) {
    EXPECT_EQ(poly_height(parse_poly("x^5 + x + 1")), 1);
    EXPECT_EQ(poly_height(parse_poly("6*x^3 - 4*x + 2")), 3);
    EXPECT_EQ(poly_height(parse_poly("x^5 + 15*x^4 + 90*x^3 + 270*x^2 + 406*x + 247")), 406);
    EXPECT_THROW(poly_height(IntPoly()), ZeroPolynomialError);
}

TEST(PolyHeight, MatchesOracle) {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_poly(rng, 1 + trial % 9, 50);
        IntPoly f(std::vector<Integer>(c.begin(), c.end()));
        EXPECT_EQ(poly_height(f), oracle_height(f));
    }
}

TEST(CurveHeight, NormalizedContent) {
    EXPECT_EQ(curve_height(new_curve(2, parse_poly("4*x^6 + 4"))), 1);
    EXPECT_EQ(curve_height(new_curve(2, parse_poly("2*x^6 + 6"))), 3);
}

TEST(Reduce, InflatedQuinticReturnsToHeightOne) {
    auto c = new_curve(2, parse_poly("x^5 + 15*x^4 + 90*x^3 + 270*x^2 + 406*x + 247"));
    auto r = reduce_model(c);
    EXPECT_EQ(r.input_height, 406);
    EXPECT_EQ(r.best_height, 1);
    EXPECT_EQ(format_curve(r.best_model), "y^2 = x^5 + x + 1");
    ASSERT_EQ(r.trail.size(), 1u);
    EXPECT_EQ(r.trail[0].kind, MoveKind::Translate);
    EXPECT_EQ(r.trail[0].parameter, -3);
}

TEST(Reduce, ContentScalingIsAbsorbed) {
    auto r = reduce_model(new_curve(2, parse_poly("4*x^6 + 4")));
    EXPECT_EQ(format_curve(r.best_model), "y^2 = x^6 + 1");
    EXPECT_TRUE(r.trail.empty());
}

TEST(Reduce, MinimalModelIsFixedPoint) {
    auto c = new_curve(2, parse_poly("x^5 + x + 1"));
    auto r = reduce_model(c);
    EXPECT_EQ(r.best_model, c);
    EXPECT_TRUE(r.trail.empty());
    EXPECT_GT(r.nodes_visited, 0);
}

TEST(Reduce, BudgetMustBePositive) {
    auto c = new_curve(2, parse_poly("x^5 + x + 1"));
    EXPECT_THROW(reduce_model(c, {0, 2}), PreconditionError);
    EXPECT_THROW(reduce_model(c, {3, 0}), PreconditionError);
}

TEST(Reduce, InflationRoundTrip) {
    // height <= 2 squarefree models, moved by a translation and a y-scaling
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coef(-2, 2), shift(-3, 3), yscale(1, 3);
    int done = 0;
    while (done < 100) {
        long n = 2 + done % 2;
        int d = n == 2 ? 5 + done % 2 : 4 + done % 2;
        std::vector<Integer> a(d + 1);
        for (auto& x : a) x = coef(rng);
        if (a.back() == 0) continue;
        IntPoly f(a);
        if (oracle::discriminant(f.coeffs()) == 0) continue;
        SuperellipticCurve base = new_curve(n, f);
        long t = shift(rng);
        Rational lam = yscale(rng);
        Rational scale = 1;
        for (long i = 0; i < n; ++i) scale *= lam;
        SuperellipticCurve moved = apply_transform(base, Mobius::translation(Integer(t)), scale);
        auto r = reduce_model(moved);
        EXPECT_LE(r.best_height, curve_height(base)) << format_curve(base) << " t=" << t;
        EXPECT_LE(r.best_height, r.input_height);
        EXPECT_EQ(replay(moved, r.trail), r.best_model);
        ++done;
    }
}

TEST(Reduce, IdempotentAndReplayable) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto c = oracle::random_poly(rng, 5 + trial % 2, 9);
        IntPoly f(std::vector<Integer>(c.begin(), c.end()));
        if (oracle::discriminant(f.coeffs()) == 0) continue;
        auto curve = new_curve(2, f);
        auto r = reduce_model(curve);
        EXPECT_EQ(replay(curve, r.trail), r.best_model);
        auto again = reduce_model(r.best_model);
        EXPECT_TRUE(again.trail.empty()) << format_curve(r.best_model);
        EXPECT_EQ(genus(r.best_model), genus(curve));
    }
}

TEST(Reduce, JsonReport) {
    auto r = reduce_model(new_curve(2, parse_poly("x^5 + 15*x^4 + 90*x^3 + 270*x^2 + 406*x + 247")));
    auto j = to_json(r);
    EXPECT_EQ(j["best_height"], "1");
    EXPECT_EQ(j["trail"][0]["move"], "translate");
    EXPECT_EQ(j["trail"][0]["parameter"], -3);
    EXPECT_EQ(j["upper_bound_only"], true);
    EXPECT_EQ(j["search_budget"]["translation_radius"], 3);
}

TEST(Projective, Examples) {
    EXPECT_EQ(projective_height(parse_projective_point("(2/3 : 1 : 5)")), 15);
    EXPECT_EQ(projective_height(parse_projective_point("(0 : 0 : 1)")), 1);
    EXPECT_EQ(projective_height(parse_projective_point("(4 : -6 : 10)")), 5);
    EXPECT_THROW(parse_projective_point("(0 : 0)"), PreconditionError);
    EXPECT_THROW(parse_projective_point("(1 : x)"), ParseError);
}

TEST(Projective, ScaleInvariant) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> e(-20, 20), s(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> p{Rational(e(rng), s(rng)), Rational(e(rng), s(rng)), Rational(1 + s(rng))};
        for (auto& q : p) q.canonicalize();
        Rational k(e(rng) == 0 ? 3 : e(rng), s(rng));
        k.canonicalize();
        if (k == 0) k = 7;
        std::vector<Rational> kp;
        for (const auto& q : p) kp.push_back(q * k);
        EXPECT_EQ(projective_height(ProjectivePoint(p)), projective_height(ProjectivePoint(kp)));
        EXPECT_EQ(ProjectivePoint(p), ProjectivePoint(kp));
    }
}
