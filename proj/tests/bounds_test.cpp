#include <gtest/gtest.h>

#include "circum/bounds.hpp"
#include "circum/generators.hpp"

namespace circum {
namespace {

TEST(RationalTest, ReducedAndExact) {
    Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.num(), BigInt(-3));
    EXPECT_EQ(r.den(), BigInt(2));
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_LT(Rational(1, 3), Rational(34, 100));
    EXPECT_EQ(Rational::parse("0.4"), Rational(2, 5));
    EXPECT_EQ(Rational::parse("10/3"), Rational(10, 3));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Theorem1, Examples) {
    EXPECT_EQ(bound_theorem1(3, 2, 2), Rational(6));
    EXPECT_EQ(bound_theorem1(3, 3, 1), Rational(10, 3));
    EXPECT_EQ(bound_theorem1(5, 0, 1), Rational(0));
    EXPECT_THROW(bound_theorem1(3, 2, 0), PreconditionError);
}

TEST(ClassicalBounds, Examples) {
    EXPECT_EQ(bound_dirac(3), Rational(4));
    EXPECT_EQ(bound_dirac2(5, 4), Rational(5));
    EXPECT_EQ(bound_dirac2(10, 3), Rational(6));
    EXPECT_EQ(bound_theoremD(20, 5, 2), Rational(13));
    EXPECT_EQ(bound_theoremD(6, 5, 5), Rational(6));
    EXPECT_EQ(bound_theoremD(8, 3, 2), Rational(7));
    EXPECT_EQ(bound_theoremE(3, -1), Rational(4));
    EXPECT_EQ(bound_theoremF(3, 2), Rational(6));
    EXPECT_EQ(bound_theoremE(4, 4), Rational(0));
}

TEST(Conjecture1, Examples) {
    EXPECT_EQ(*bound_conjecture1(3, 2, 1), Rational(6));
    EXPECT_EQ(*bound_conjecture1(3, 3, 0), Rational(0));
    // branch 1 (3 >= 1): 5*2*7/7
    EXPECT_EQ(*bound_conjecture1(5, 2, 3), Rational(10));
    EXPECT_FALSE(bound_conjecture1(5, 2, -1));
    EXPECT_TRUE(bound_conjecture1(5, 0, -1));
}

// The kappa = 2 family is 2-connected with n = 3(d-1)+2 and c = 2d, so
// min(n, 3d-2) exceeds c for every d > 2.
TEST(TheoremD, FamilyFallsBelowTheStatedBound) {
    Graph g = kappa_family(2, 3);
    auto p = compute_profile(g);
    ASSERT_EQ(p.kappa, 2);
    ASSERT_EQ(p.c, 6);
    auto report = evaluate_all(p);
    const auto* d = report.find("theoremD");
    ASSERT_TRUE(d && d->applicable);
    EXPECT_EQ(d->value, Rational(7));
    EXPECT_FALSE(d->satisfied);
}

TEST(EvaluateAll, SharpFamilyAndSmallGraphs) {
    auto fam = evaluate_all(compute_profile(kappa_family(2, 3)));
    EXPECT_EQ(fam.find("theorem1")->slack, Rational(0));
    EXPECT_EQ(fam.find("conjecture1")->slack, Rational(0));

    auto c5 = evaluate_all(compute_profile(cycle_graph(5)));
    EXPECT_FALSE(c5.find("theorem1")->applicable);
    EXPECT_EQ(c5.find("dirac")->slack, Rational(2));

    auto pet = evaluate_all(compute_profile(petersen_graph()));
    EXPECT_EQ(pet.find("theorem1")->value, Rational(10, 3));
    EXPECT_EQ(pet.find("theorem1")->slack, Rational(17, 3));
    for (const auto& e : pet.entries) {
        if (e.applicable) {
            EXPECT_EQ(e.satisfied, e.slack >= Rational(0)) << e.name;
        }
    }
}

TEST(EvaluateAll, InjectedFormula) {
    auto p = compute_profile(petersen_graph());
    auto r = evaluate_all(p, [](int, int, int) { return std::optional<Rational>(Rational(100)); });
    EXPECT_FALSE(r.find("conjecture1")->satisfied);
}

TEST(TheoremC, Dichotomy) {
    Graph k6 = complete_graph(6);
    auto pk = compute_profile(k6);
    auto all = all_longest_cycles(k6);
    auto rk = check_theoremC(k6, pk, &all);
    EXPECT_TRUE(rk.applicable);
    EXPECT_FALSE(rk.first);
    EXPECT_TRUE(rk.second);
    EXPECT_FALSE(rk.violation());

    Graph pet = petersen_graph();
    auto pp = compute_profile(pet);
    auto allp = all_longest_cycles(pet);
    auto rp = check_theoremC(pet, pp, &allp);
    EXPECT_TRUE(rp.first);
    EXPECT_FALSE(rp.violation());

    auto fam = compute_profile(kappa_family(2, 3));
    EXPECT_FALSE(check_theoremC(kappa_family(2, 3), fam, nullptr).applicable);
}

TEST(Monotonicity, Theorem1GridWithinBranches) {
    for (int d = 1; d <= 20; ++d) {
        for (int k = 1; k <= 20; ++k) {
            for (int cb = 1; cb <= 20; ++cb) {
                Rational v = bound_theorem1(d, k, cb);
                const bool branch1 = cb >= k;
                if (d < 20) {
                    EXPECT_LE(v, bound_theorem1(d + 1, k, cb));
                }
                if (k < 20 && (k + 1 <= cb) == branch1) {
                    EXPECT_LE(v, bound_theorem1(d, k + 1, cb));
                }
                if (cb < 20 && (cb + 1 >= k) == branch1) {
                    EXPECT_LE(v, bound_theorem1(d, k, cb + 1));
                }
            }
            // seam: branch 2 at cbar = k-1 never exceeds branch 1 at cbar = k
            if (k >= 2) {
                EXPECT_LE(bound_theorem1(d, k, k - 1), bound_theorem1(d, k, k));
            }
        }
    }
}

TEST(Monotonicity, TheoremEDecreasesPastHalfDelta) {
    for (int d = 1; d <= 20; ++d) {
        for (int p = 0; p < 20; ++p) {
            if (2 * p >= d - 2) {
                EXPECT_GT(bound_theoremE(d, p), bound_theoremE(d, p + 1));
            }
        }
    }
}

TEST(Sharpness, KappaFamilyGrid) {
    for (int k = 2; k <= 4; ++k) {
        for (int d = 2 * k - 1; d <= k + 5; ++d) {
            auto p = compute_profile(kappa_family(k, d));
            auto r = evaluate_all(p);
            EXPECT_EQ(r.find("theorem1")->slack, Rational(0)) << k << "," << d;
        }
    }
}

}  // namespace
}  // namespace circum
