#include "common.hpp"
#include "oracles/oracles.hpp"

#include <random>

using namespace lcs;

TEST(Numdata, UpsilonZeroIsTrivial) {
    auto mu = Q({"3/2", "5", "7/3"});
    auto d = associated_data(mu, 0);
    EXPECT_EQ(d.alpha, (IntVec{0, 0, 0}));
    EXPECT_EQ(d.rho, mu);
    EXPECT_EQ(d.I, Subset::full(3));
    EXPECT_EQ(d.level, 0);
}

TEST(Numdata, SmallExamples) {
    auto a = associated_data(Qi({1, 1}), 1);
    EXPECT_EQ(a.alpha, (IntVec{1, 1}));
    EXPECT_EQ(a.rho, Qi({1, 1}));
    EXPECT_EQ(a.I, Subset::full(2));
    EXPECT_EQ(a.level, 1);

    auto b = associated_data(Qi({1, 2}), 1);
    EXPECT_EQ(b.alpha, (IntVec{1, 0}));
    EXPECT_EQ(b.rho, Qi({1, 1}));
    EXPECT_EQ(b.I, S({0}));
    EXPECT_EQ(b.level, 1);
}

TEST(Numdata, MarkedPointOnTheLine) {
    for (long gy = 1; gy <= 8; ++gy) {
        auto d = associated_data(Qi({1, gy}), gy);
        EXPECT_EQ(d.alpha, (IntVec{gy, 1}));
        EXPECT_EQ(sum(d.alpha), gy + 1);
        EXPECT_EQ(d.I, Subset::full(2));
    }
}

TEST(Numdata, MatchesScanOracle) {
    auto mu = Qi({3, 5, 7});
    auto d = associated_data(mu, 4);
    auto o = oracle::scan_oracle(mu, 4);
    EXPECT_EQ(d.alpha, o.alpha);
    EXPECT_EQ(d.rho, o.rho);
    EXPECT_EQ(d.I, o.I);
    EXPECT_EQ(d.level, o.level);
    EXPECT_TRUE(verify_conditions(mu, 4, d));
}

TEST(Numdata, VerifyRejects) {
    NumericalData bad{{2, 0}, Qi({1, 1}), Subset::full(2), 1};
    EXPECT_FALSE(verify_conditions(Qi({1, 1}), 1, bad));
    NumericalData bad2{{1, 0}, Qi({1, 2}), Subset::full(2), 1};
    EXPECT_FALSE(verify_conditions(Qi({1, 2}), 1, bad2));
    EXPECT_TRUE(verify_conditions(Qi({1, 1}), 1, associated_data(Qi({1, 1}), 1)));
}

TEST(Numdata, Errors) {
    EXPECT_THROW(associated_data(RatVec{}, 1), MathError);
    EXPECT_THROW(associated_data(Q({"1", "0"}), 1), MathError);
    EXPECT_THROW(associated_data(Q({"1", "-1/2"}), 1), MathError);
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("x"), InvalidInput);
}

TEST(Numdata, RandomRationalPropertiesAndUniqueness) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(rng() % 5);
        RatVec mu;
        for (int i = 0; i < n; ++i) mu.push_back(make_rational(1 + rng() % 20, 1 + rng() % 4));
        long u = static_cast<long>(rng() % 30) - 10;
        auto d = associated_data(mu, u);
        ASSERT_TRUE(verify_conditions(mu, u, d));
        auto o = oracle::scan_oracle(mu, u);
        EXPECT_EQ(d.level, o.level);
        // no second level works within a long window
        EXPECT_FALSE(oracle::scan_oracle(mu, u, 1, 4000).has_value());
        // sign laws
        if (u >= 1 - n) {
            for (long a : d.alpha) EXPECT_GE(a, 0);
        }
        bool nonneg = std::all_of(d.alpha.begin(), d.alpha.end(), [](long a) { return a >= 0; });
        bool zero_on_I = false;
        for (int p : d.I.elements()) zero_on_I = zero_on_I || d.alpha[p] == 0;
        if (nonneg && zero_on_I) {
            EXPECT_EQ(d.alpha, IntVec(n, 0));
            EXPECT_EQ(d.I, Subset::full(n));
        }
        // homogeneity
        Rational t = make_rational(1 + rng() % 9, 1 + rng() % 9);
        RatVec tmu;
        for (const auto& x : mu) tmu.push_back(t * x);
        auto e = associated_data(tmu, u);
        EXPECT_EQ(e.alpha, d.alpha);
        EXPECT_EQ(e.I, d.I);
        EXPECT_EQ(e.level, t * d.level);
        for (int p = 0; p < n; ++p) EXPECT_EQ(e.rho[p], t * d.rho[p]);
    }
}

TEST(Numdata, HugeEntriesStayExact) {
    RatVec mu{parse_rational("123456789012345678901234567891/11"), Rational(3), parse_rational("98765432109876543210/3")};
    auto d = associated_data(mu, 5);
    EXPECT_TRUE(verify_conditions(mu, 5, d));
}
