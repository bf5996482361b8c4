#include "common.hpp"
#include "oracles/oracles.hpp"

using namespace lcs;

TEST(Tripartitions, CountAndOrder) {
    EXPECT_EQ(tripartitions(Subset::full(3)).size(), 27u);
    EXPECT_EQ(tripartitions(Subset()).size(), 1u);
    for (const auto& t : tripartitions(S({0, 2, 4}))) EXPECT_EQ((t.first | t.middle | t.last), S({0, 2, 4}));
}

TEST(Poset, ClosureContainsSelf) {
    auto c = CurveConfig::make(2, 4, 3);
    for (const auto& s : enumerate_strata(c)) EXPECT_TRUE(closure_of(c, s).count(key_of(c, s)));
}

TEST(Poset, ClosureMatchesConeFaces) {
    for (auto [gx, gy, d] : std::vector<std::tuple<long, long, int>>{{2, 4, 3}, {3, 3, 3}, {0, 3, 3}, {2, 4, 2}, {1, 1, 4}}) {
        auto c = CurveConfig::make(gx, gy, d);
        auto all = enumerate_strata(c);
        for (const auto& s : all) EXPECT_EQ(closure_of(c, s), oracle::closure_by_cones(c, s, all));
    }
}

TEST(Poset, LineExample) {
    auto c = CurveConfig::make(2, 4, 2);
    int seen = 0;
    for (const auto& s : enumerate_strata(c))
        if (sum(s.alpha) == 5 && s.I == Subset::full(2)) {
            ++seen;
            auto cl = closure_of(c, s);
            EXPECT_EQ(cl.size(), 3u);
            auto P = build_poset(c);
            for (const auto& k : cl)
                if (k != key_of(c, s)) {
                    EXPECT_EQ(P.dims[P.index_of(k)], 0);
                }
        }
    EXPECT_GE(seen, 1);
}

TEST(Poset, DiscCenter) {
    auto c = CurveConfig::make(3, 3, 3);
    auto s = stratum_of(c, Qi({2, 2, 1}));
    auto P = build_poset(c);
    std::map<long, int> by_dim;
    for (const auto& k : closure_of(c, s))
        if (k != key_of(c, s)) ++by_dim[P.dims[P.index_of(k)]];
    EXPECT_EQ(by_dim[1], 3);
    EXPECT_EQ(by_dim[0], 3);
}

TEST(Poset, TrivialPoset) {
    auto P = build_poset(CurveConfig::make(0, 0, 3));
    EXPECT_EQ(P.strata.size(), 1u);
    EXPECT_TRUE(P.covers.empty());
    EXPECT_EQ(components(P).count, 1);
}

TEST(Poset, TransitiveAndAntisymmetric) {
    auto c = CurveConfig::make(2, 4, 3);
    auto P = build_poset(c);
    const int n = int(P.strata.size());
    std::vector<std::set<int>> cl(n);
    for (int i = 0; i < n; ++i) cl[i].insert(P.contains[i].begin(), P.contains[i].end());
    for (int i = 0; i < n; ++i)
        for (int j : cl[i]) {
            EXPECT_FALSE(cl[j].count(i));
            EXPECT_LT(P.dims[j], P.dims[i]);
            for (int k : cl[j]) EXPECT_TRUE(cl[i].count(k));
        }
}

TEST(Poset, Counts) {
    EXPECT_EQ(components(CurveConfig::make(3, 3, 3)).count, 9);
    EXPECT_EQ(components(CurveConfig::make(2, 4, 3)).count, 25);
    EXPECT_EQ(components(CurveConfig::make(2, 4, 2)).count, 6);
}

TEST(Poset, Formulas) {
    auto f = count_formulas(CurveConfig::make(2, 4, 3));
    EXPECT_EQ(f.lower_bound, 19);
    EXPECT_FALSE(f.statement1_value.has_value());
    auto g = count_formulas(CurveConfig::make(3, 3, 3));
    EXPECT_EQ(*g.statement1_value, n_delta(3, 3));
    auto h = count_formulas(CurveConfig::make(1, 1, 2));
    EXPECT_EQ(*h.closed_form_delta2, 1);
    EXPECT_TRUE(h.irreducible);
    EXPECT_FALSE(count_formulas(CurveConfig::make(2, 1, 2)).irreducible);
    EXPECT_EQ(n_delta(2, 4), 4);  // C(5,2) - C(4,2)
}

TEST(Poset, LowerBoundHolds) {
    for (long gx = 0; gx <= 3; ++gx)
        for (long gy = gx; gy <= 4; ++gy) {
            auto c = CurveConfig::make(gx, gy, 3);
            EXPECT_GE(Integer(components(c).count), count_formulas(c).lower_bound) << gx << "," << gy;
        }
}

TEST(Poset, NeighborhoodSampling) {
    auto c = CurveConfig::make(3, 3, 3);
    auto s = stratum_of(c, Qi({2, 2, 1}));
    auto rep = neighborhood_sample_check(c, s, 200, 5);
    EXPECT_TRUE(rep.violations.empty());
    EXPECT_EQ(rep.samples, 200u);
    EXPECT_TRUE(rep.reached.count(key_of(c, s)));
}

TEST(Poset, DotOutputIsDeterministic) {
    auto c = CurveConfig::make(2, 4, 2);
    auto a = poset_dot(c, build_poset(c));
    auto b = poset_dot(c, build_poset(c, {1'000'000, 3}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("digraph closure {", 0), 0u);
}
