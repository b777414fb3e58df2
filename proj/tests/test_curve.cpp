#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "supercurve/curve.hpp"

using namespace supercurve;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

IntPoly from_oracle(const std::vector<oracle::Z>& c) { return IntPoly(std::vector<Integer>(c.begin(), c.end())); }

}  // namespace

TEST(NewCurve, Examples) {
    EXPECT_NO_THROW(new_curve(5, P("x*(x-1)*(x-2)")));
    EXPECT_NO_THROW(new_curve(2, P("x^3 + 1")));
    try {
        new_curve(4, P("x^2*(x-1)^2"));
        FAIL() << "expected a reducible model";
    } catch (const ReducibleModelError& e) {
        EXPECT_EQ(e.witness(), 2);
    }
    EXPECT_THROW(new_curve(2, IntPoly()), ZeroPolynomialError);
    EXPECT_THROW(new_curve(2, P("5")), DegreeTooSmallError);
    EXPECT_THROW(new_curve(1, P("x")), PreconditionError);
}

TEST(NewCurve, ContentNormalization) {
    EXPECT_EQ(new_curve(2, P("4*x^6 + 4")).f(), P("x^6 + 1"));
    EXPECT_EQ(new_curve(3, P("-8*x^3 + 16")).f(), P("x^3 - 2"));    // -8 is a cube
    EXPECT_EQ(new_curve(2, P("-x^5 - 1")).f(), P("-x^5 - 1"));      // -1 is not a square
    EXPECT_EQ(new_curve(2, parse_ratpoly("x^5/3 + 1/3")).f(), P("3*x^5 + 3"));  // 1/3 ~ 3 mod squares
    EXPECT_EQ(new_curve(3, parse_ratpoly("x^3/2 - 1")).f(), P("4*x^3 - 8"));   // 1/2 ~ 4 mod cubes
    EXPECT_EQ(new_curve(2, P("12*x^2 + 12*x + 12")).content(), 3);
}

TEST(NewCurve, EqualUpToNthPowers) {
    EXPECT_EQ(new_curve(3, P("27*x^4 + 27")), new_curve(3, P("x^4 + 1")));
    EXPECT_NE(new_curve(2, P("2*x^4 + 2")), new_curve(2, P("x^4 + 1")));
}

TEST(Irreducible, Examples) {
    EXPECT_FALSE(is_irreducible(6, P("(x^2 - 1)^3")));
    EXPECT_TRUE(is_irreducible(5, P("x*(x-1)*(x-2)")));
    EXPECT_TRUE(is_irreducible(4, P("x^2*(x^3 - 1)")));
}

TEST(Ramification, SquarefreeDegreeTen) {
    auto prof = ramification_profile(new_curve(2, P("x^10 + x + 1")));
    ASSERT_EQ(prof.affine_branches.size(), 1u);
    EXPECT_EQ(prof.affine_branches[0].count, 10u);
    EXPECT_EQ(prof.affine_branches[0].index, 2u);
    EXPECT_FALSE(prof.infinity_branch.has_value());
    EXPECT_EQ(prof.ramification_degree, 10);
}

TEST(Ramification, RepeatedRoot) {
    auto prof = ramification_profile(new_curve(4, P("x^2*(x^3 - 1)")));
    ASSERT_EQ(prof.affine_branches.size(), 2u);
    EXPECT_EQ(prof.affine_branches[0].multiplicity, 1u);
    EXPECT_EQ(prof.affine_branches[0].count, 3u);
    EXPECT_EQ(prof.affine_branches[0].index, 4u);
    EXPECT_EQ(prof.affine_branches[1].multiplicity, 2u);
    EXPECT_EQ(prof.affine_branches[1].fiber, 2u);
    EXPECT_EQ(prof.affine_branches[1].index, 2u);
    ASSERT_TRUE(prof.infinity_branch.has_value());
    EXPECT_EQ(prof.infinity_branch->fiber, 1u);
    EXPECT_EQ(prof.infinity_branch->index, 4u);
    EXPECT_EQ(prof.ramification_degree, 14);
}

TEST(Ramification, InfinityUnramifiedWhenNDividesDegree) {
    auto prof = ramification_profile(new_curve(3, P("x^3 - 1")));
    ASSERT_EQ(prof.affine_branches.size(), 1u);
    EXPECT_EQ(prof.affine_branches[0].count, 3u);
    EXPECT_EQ(prof.affine_branches[0].index, 3u);
    EXPECT_FALSE(prof.infinity_branch.has_value());
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus(new_curve(5, P("x*(x-1)*(x-2)"))), 4);
    EXPECT_EQ(genus(new_curve(4, P("x^2*(x^3-1)"))), 4);
    EXPECT_EQ(genus(new_curve(2, P("x^3 + 1"))), 1);
    EXPECT_EQ(genus(new_curve(6, P("x*(x-1)*(x-3)"))), 4);
    EXPECT_EQ(genus(new_curve(5, P("x^3 - 1"))), 4);
}

TEST(Genus, ClosedFormExamples) {
    EXPECT_EQ(genus_closed_form(2, 10), 4);
    EXPECT_EQ(genus_closed_form(5, 3), 4);
    EXPECT_EQ(genus_closed_form(2, 3), 1);
}

TEST(Genus, RepeatedRootsMatchRiemannHurwitzOracle) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> ndist(2, 7), mdist(1, 6), kdist(1, 5);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        long n = ndist(rng);
        std::vector<long> mults;
        IntPoly f = IntPoly::constant(1);
        long k = kdist(rng);
        for (long r = 0; r < k; ++r) {
            long m = mdist(rng);
            mults.push_back(m);
            f = f * pow(IntPoly({Integer(-(r * 3 - 5)), Integer(1)}), static_cast<unsigned long>(m));
        }
        long g = 0;
        for (long m : mults) g = std::gcd(g, m);
        if (std::gcd(g, n) != 1) {
            EXPECT_THROW(new_curve(n, f), ReducibleModelError);
            continue;
        }
        EXPECT_EQ(genus(new_curve(n, f)), oracle::genus_from_roots(n, mults));
        ++checked;
    }
    EXPECT_GT(checked, 200);
}

TEST(Genus, ClosedFormAgreesOnRandomSquarefree) {
    std::mt19937_64 rng(77);
    for (long n = 2; n <= 6; ++n)
        for (int d = static_cast<int>(n) + 1; d <= 12; ++d)
            for (int k = 0; k < 10; ++k) {
                IntPoly f = from_oracle(oracle::random_poly(rng, d, 20));
                if (oracle::discriminant(f.coeffs()) == 0) continue;
                EXPECT_EQ(genus(new_curve(n, f)), genus_closed_form(n, d)) << n << " " << format_poly(f);
            }
}

TEST(Transform, Examples) {
    auto c = new_curve(2, P("x^6 + 1"));
    EXPECT_EQ(apply_transform(c, Mobius::identity()), c);
    auto big = new_curve(2, P("4*x^6 + 4"));
    EXPECT_EQ(apply_transform(big, Mobius::identity(), Rational(1, 2)).f(), P("x^6 + 1"));
    auto pal = new_curve(2, P("x^10 + 3*x^5 + 1"));
    EXPECT_EQ(apply_transform(pal, Mobius::inversion()), pal);
    EXPECT_THROW(apply_transform(c, Mobius{1, 1, 1, 1}), DegenerateTransformError);
}

TEST(Transform, InversionMovesBranchPointToInfinity) {
    auto c = new_curve(2, P("x*(x^4 - 1)"));
    auto t = apply_transform(c, Mobius::inversion());  // weight 6
    EXPECT_EQ(t.degree(), 5);
    EXPECT_EQ(genus(t), 2);
}

TEST(Transform, GenusInvariantUnderSmallMatrices) {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> e(-3, 3);
    const Rational scales[] = {1, -1, Rational(1, 2), Rational(-1, 2), 2, -2};
    int done = 0;
    for (int trial = 0; trial < 300; ++trial) {
        long n = 2 + trial % 5;
        IntPoly f = from_oracle(oracle::random_poly(rng, 3 + trial % 7, 5));
        SuperellipticCurve c = [&] {
            try {
                return new_curve(n, f);
            } catch (const ReducibleModelError&) {
                return new_curve(n, P("x^5 + x + 1"));
            }
        }();
        Mobius m{e(rng), e(rng), e(rng), e(rng)};
        if (m.det() == 0) continue;
        auto t = apply_transform(c, m, scales[trial % 6]);
        EXPECT_EQ(genus(t), genus(c));
        ++done;
    }
    EXPECT_GT(done, 200);
}

TEST(Text, CurveRoundTrip) {
    auto c = parse_curve("y^5 = x^3 - 1");
    EXPECT_EQ(c.n(), 5);
    EXPECT_EQ(format_curve(c), "y^5 = x^3 - 1");
    EXPECT_EQ(parse_curve("y^{2} = x^{10} - 1").f(), P("x^10 - 1"));
    EXPECT_THROW(parse_curve("x^3 - 1"), ParseError);
    EXPECT_THROW(parse_curve("y^a = x"), ParseError);
    EXPECT_THROW(parse_curve("z^2 = x"), ParseError);
    EXPECT_THROW(parse_curve("y^3 = x^6"), ReducibleModelError);
}
