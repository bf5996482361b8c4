// One PASS/FAIL line per acceptance criterion.

#include "lcs/lcs.hpp"
#include "oracles/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <thread>

using namespace lcs;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome c1_numdata() {
    std::mt19937_64 rng(20261016);
    std::size_t bad = 0;
    for (int it = 0; it < 10000; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        RatVec mu;
        for (int p = 0; p < n; ++p) mu.emplace_back(static_cast<long>(1 + rng() % 50));
        long u = static_cast<long>(rng() % 81) - 30;
        auto d = associated_data(mu, u);
        auto o = oracle::scan_oracle(mu, u);
        if (!verify_conditions(mu, u, d) || d.alpha != o.alpha || d.rho != o.rho || d.I != o.I || d.level != o.level)
            ++bad;
    }
    return {bad == 0, "10000 random cases, " + std::to_string(bad) + " mismatches"};
}

Outcome c2_delta2() {
    int checked = 0, bad = 0;
    for (long gx = 0; gx <= 8; ++gx)
        for (long gy = gx; gy <= 8; ++gy) {
            auto c = CurveConfig::make(gx, gy, 2);
            long n = components(c, {1'000'000, jobs()}).count;
            long expect = (gx == 0 && gy == 0) ? 1 : gx + gy - std::gcd(gx + 1, gy + 1) + 1;
            ++checked;
            if (n != expect || Integer(n) != *count_formulas(c).closed_form_delta2) ++bad;
        }
    return {bad == 0, std::to_string(checked) + " genus pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome c3_delta3() {
    long a = components(CurveConfig::make(3, 3, 3), {1'000'000, jobs()}).count;
    long b = components(CurveConfig::make(2, 4, 3), {1'000'000, jobs()}).count;
    Integer lb = count_formulas(CurveConfig::make(2, 4, 3)).lower_bound;
    return {a == 9 && b == 25 && lb == 19,
            "N(3,3)=" + std::to_string(a) + " N(2,4)=" + std::to_string(b) + " bound(2,4)=" + lb.get_str()};
}

Outcome c4_statement1() {
    int checked = 0, bad = 0;
    for (int d = 2; d <= 3; ++d)
        for (long gx = 0; gx <= 6; ++gx)
            for (long gy = 0; gy <= 6; ++gy) {
                if (!(gx * gy == 0 || gx == gy) || (gx == 0 && gy == 0)) continue;
                auto c = CurveConfig::make(gx, gy, d);
                ++checked;
                if (Integer(components(c, {1'000'000, jobs()}).count) != n_delta(d, std::max(gx, gy))) ++bad;
            }
    return {bad == 0, std::to_string(checked) + " configs (both genera 0 excluded: a point), " + std::to_string(bad) +
                          " mismatches"};
}

Outcome c5_purity() {
    int checked = 0, bad = 0;
    for (int d = 2; d <= 3; ++d)
        for (long gx = 0; gx <= 5; ++gx)
            for (long gy = 0; gy <= 5; ++gy) {
                auto c = CurveConfig::make(gx, gy, d);
                auto P = build_poset(c, {1'000'000, jobs()});
                auto comp = components(P);
                ++checked;
                bool ok = true;
                if (gx + gy > 0)
                    for (int i : comp.indices) ok = ok && P.dims[i] == d - 1;
                std::vector<bool> covered(P.strata.size(), false);
                for (std::size_t i = 0; i < P.strata.size(); ++i)
                    if (P.dims[i] == d - 1) {
                        covered[i] = true;
                        for (int j : P.contains[i]) covered[j] = true;
                    }
                if (gx + gy > 0)
                    for (bool x : covered) ok = ok && x;
                bad += !ok;
            }
    return {bad == 0, std::to_string(checked) + " configs, " + std::to_string(bad) + " impure"};
}

Outcome c6_multidegree() {
    std::mt19937_64 rng(6);
    int bad = 0;
    for (int it = 0; it < 1000; ++it) {
        int delta = 1 + static_cast<int>(rng() % 5);
        long gx = static_cast<long>(rng() % 6), gy = static_cast<long>(rng() % 6);
        if (delta == 1 && gx * gy == 0) gx = 1 + gx, gy = 1 + gy;
        auto c = CurveConfig::make(gx, gy, delta);
        IntVec mu;
        for (int p = 0; p < delta; ++p) mu.push_back(1 + static_cast<long>(rng() % 12));
        auto m = build_model(c, mu);
        auto x = associated_data(to_rational(mu), gy);
        auto md = multidegree_of_twisted_dualizing(m, twist_divisor_focus_X(m, x));
        bool ok = md.total() == 2 * c.genus() - 2;
        ok = ok && md.degrees[SemistableModel::kX] == 2 * gx - 2 + delta + sum(x.alpha);
        ok = ok && md.degrees[SemistableModel::kY] == 2 * gy - 2 + long(x.I.size()) - sum(x.alpha);
        for (int p = 0; p < delta; ++p)
            for (long j = 1; j < mu[p]; ++j) {
                bool one = !x.I.contains(p) && Rational(j) == x.rho[p];
                ok = ok && md.degrees[m.chain(p, j)] == (one ? 1 : 0);
            }
        auto y = associated_data(to_rational(mu), gx);
        auto my = multidegree_of_twisted_dualizing(m, twist_divisor_focus_Y(m, y));
        ok = ok && my.total() == 2 * c.genus() - 2;
        ok = ok && my.degrees[SemistableModel::kY] == 2 * gy - 2 + delta + sum(y.alpha);
        ok = ok && my.degrees[SemistableModel::kX] == 2 * gx - 2 + long(y.I.size()) - sum(y.alpha);
        bad += !ok;
    }
    return {bad == 0, "1000 random models, " + std::to_string(bad) + " failures"};
}

Outcome c7_weierstrass() {
    long strata = 0, bad = 0;
    for (int d = 1; d <= 3; ++d)
        for (long gx = 0; gx <= 8; ++gx)
            for (long gy = 0; gx + gy + d - 1 <= 8; ++gy) {
                if (d == 1 && gx * gy == 0) continue;
                auto c = CurveConfig::make(gx, gy, d);
                for (const auto& s : enumerate_strata(c, {1'000'000, jobs()})) {
                    auto w = weierstrass_degrees(c, s);
                    bool ok = w.twisted.total == w.expected_total && w.normalized.total == w.expected_total;
                    for (int p = 0; p < d; ++p)
                        ok = ok && w.twisted.node_coeffs[p] - w.normalized.node_coeffs[p] == w.base_change[p];
                    ++strata;
                    bad += !ok;
                }
            }
    return {bad == 0, std::to_string(strata) + " strata, " + std::to_string(bad) + " failures"};
}

Subspace random_general(std::mt19937_64& rng, const std::vector<int>& ambient, std::size_t h) {
    for (;;) {
        RatMatrix rows(h, RatVec(ambient.size()));
        for (auto& r : rows)
            for (auto& x : r) x = make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
        Subspace V(ambient, rows);
        if (V.dim() == h && all_nonzero(pluecker(V))) return V;
    }
}

Subspace scaled(const Subspace& V, const RatVec& t) {
    RatMatrix rows = V.basis();
    for (auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j) r[j] *= t[j];
    return Subspace(V.ambient(), rows);
}

Rational nonzero(std::mt19937_64& rng) {
    long n = 1 + static_cast<long>(rng() % 7);
    return make_rational(rng() % 2 ? n : -n, 1 + rng() % 5);
}

// inside the closure (degenerate, then move by the torus), a perturbation of such a point,
// or a random sparse subspace of the same shape
Subspace query(std::mt19937_64& rng, const Subspace& V) {
    const auto kind = rng() % 3;
    if (kind == 2)
        for (;;) {
            RatMatrix rows(V.dim(), RatVec(V.width()));
            for (auto& r : rows)
                for (auto& x : r) x = rng() % 5 < 2 ? Rational(0) : nonzero(rng);
            Subspace X(V.ambient(), rows);
            if (X.dim() == V.dim()) return X;
        }
    auto ts = qualifying_tripartitions(V.labels(), V.dim());
    auto W = tripartition_degenerate(V, ts[rng() % ts.size()]);
    RatVec t;
    for (std::size_t j = 0; j < V.width(); ++j) t.push_back(nonzero(rng));
    W = scaled(W, t);
    if (kind == 1) {
        RatMatrix rows = W.basis();
        auto& r = rows[rng() % rows.size()];
        r[rng() % r.size()] += nonzero(rng);
        Subspace X(W.ambient(), rows);
        if (X.dim() == V.dim()) return X;
    }
    return W;
}

Outcome c8_single() {
    std::mt19937_64 rng(8);
    std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2},
                                                            {4, 3}, {5, 1}, {5, 2}, {5, 3}};
    std::vector<Subspace> bases;
    std::vector<std::set<OrbitFingerprint>> reached;
    bool ok = true;
    std::size_t predicted_total = 0;
    for (auto [n, h] : shapes) {
        std::vector<int> amb(n);
        for (std::size_t i = 0; i < n; ++i) amb[i] = static_cast<int>(i);
        auto V = random_general(rng, amb, h);
        auto predicted = closure_orbit_set(V);
        auto brute = sample_limit_orbits(V, 3);
        ok = ok && brute.reached == predicted;
        predicted_total += predicted.size();
        bases.push_back(V);
        reached.push_back(brute.reached);
    }
    int agree = 0, inside = 0;
    for (int q = 0; q < 500; ++q) {
        const auto& V = bases[q % bases.size()];
        auto W = query(rng, V);
        bool brute = reached[q % bases.size()].count(orbit_fingerprint(W)) > 0;
        bool pred = in_closure(W, V);
        agree += brute == pred;
        inside += pred;
    }
    ok = ok && agree == 500;
    return {ok, std::to_string(shapes.size()) + " subspaces, " + std::to_string(predicted_total) +
                    " predicted orbits all reached and nothing else; " + std::to_string(agree) +
                    "/500 queries agree (" + std::to_string(inside) + " inside)"};
}

Outcome c9_pairs() {
    std::mt19937_64 rng(9);
    struct Shape {
        std::vector<int> I, J;
        std::size_t h1, h2;
    };
    std::vector<Shape> shapes{{{0, 1}, {0, 1}, 1, 1},       {{0, 1, 2}, {0, 1}, 1, 1}, {{0, 1, 2}, {1, 2, 3}, 2, 1},
                              {{0, 1, 2}, {0, 1, 2}, 1, 2}, {{0, 1}, {2, 3}, 1, 1},    {{0, 1, 2}, {0, 1, 2}, 2, 2}};
    std::vector<std::pair<long, long>> lt{{1, 1}, {1, 2}, {2, 3}};
    bool ok = true;
    int runs = 0, agree = 0, queries = 0, inside = 0;
    for (const auto& sh : shapes)
        for (auto [l, t] : lt) {
            SubspacePair base{random_general(rng, sh.I, sh.h1), random_general(rng, sh.J, sh.h2)};
            auto predicted = pair_closure_orbit_set_generic(base, l, t);
            auto brute = sample_pair_limit_orbits(base, l, t, 3);
            ok = ok && brute.reached == predicted;
            ++runs;
            TorusCoupling tc{base.first.labels() & base.second.labels(), l, t};
            for (int q = 0; q < 20; ++q) {
                // element of the coupled torus: s = c^l, t = c^t on shared labels
                RatVec s1, s2;
                for (std::size_t j = 0; j < base.first.width(); ++j) s1.push_back(nonzero(rng));
                for (std::size_t j = 0; j < base.second.width(); ++j) s2.push_back(nonzero(rng));
                for (int k : tc.coupled.elements()) {
                    Rational c = nonzero(rng);
                    s1[base.first.position(k)] = pow(c, l);
                    s2[base.second.position(k)] = pow(c, t);
                }
                auto A = qualifying_tripartitions(base.first.labels(), sh.h1);
                auto B = qualifying_tripartitions(base.second.labels(), sh.h2);
                SubspacePair cand{scaled(tripartition_degenerate(base.first, A[rng() % A.size()]), s1),
                                  scaled(tripartition_degenerate(base.second, B[rng() % B.size()]), s2)};
                if (rng() % 3 == 0) {
                    RatMatrix rows = cand.second.basis();
                    rows[0][rng() % rows[0].size()] += nonzero(rng);
                    Subspace X(cand.second.ambient(), rows);
                    if (X.dim() == sh.h2) cand.second = X;
                }
                auto f = pair_orbit_fingerprint(pluecker(cand.first), pluecker(cand.second), base.first.labels(),
                                                base.second.labels(), tc);
                bool b = brute.reached.count(f) > 0;
                bool p = in_pair_closure_generic(cand, base, l, t);
                agree += b == p;
                inside += p;
                ++queries;
            }
        }
    ok = ok && agree == queries;
    return {ok, std::to_string(runs) + " pair closures match brute force; " + std::to_string(agree) + "/" +
                    std::to_string(queries) + " queries agree (" + std::to_string(inside) + " inside)"};
}

Outcome c10_sampling() {
    long strata = 0, violations = 0, mismatched = 0;
    for (auto [gx, gy] : std::vector<std::pair<long, long>>{{3, 3}, {2, 4}, {0, 3}, {1, 2}}) {
        auto c = CurveConfig::make(gx, gy, 3);
        auto all = enumerate_strata(c, {1'000'000, jobs()});
        for (const auto& s : all) {
            auto rep = neighborhood_sample_check(c, s, 200, 10 + strata);
            violations += static_cast<long>(rep.violations.size());
            mismatched += closure_of(c, s) != oracle::closure_by_cones(c, s, all);
            ++strata;
        }
    }
    return {violations == 0 && mismatched == 0, std::to_string(strata) + " strata x 200 samples, " +
                                                    std::to_string(violations) + " violations; cone-face oracle " +
                                                    std::to_string(mismatched) + " mismatches"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;  // seconds, 0 = none
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "numerical data equals the scan oracle", 5, c1_numdata},
        {2, "delta=2 component count closed form", 10, c2_delta2},
        {3, "delta=3 counts 9 and 25, lower bound 19", 60, c3_delta3},
        {4, "count n_delta(max genus) when g_X g_Y = 0 or g_X = g_Y", 0, c4_statement1},
        {5, "pure dimension delta-1", 0, c5_purity},
        {6, "twisted multidegree pattern", 0, c6_multidegree},
        {7, "Weierstrass degree conservation and form equivalence", 0, c7_weierstrass},
        {8, "single orbit closures against brute force", 120, c8_single},
        {9, "pair orbit closures against brute force", 0, c9_pairs},
        {10, "neighborhood sampling stays in the closure", 0, c10_sampling},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.budget == 0 || secs < c.budget;
        bool pass = o.ok && in_time;
        failed += !pass;
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", secs);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.detail << " ["
                  << t << (in_time ? "" : ", over budget") << "]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
