#pragma once

#include "lcs/strata.hpp"
#include "lcs/tripartition.hpp"

#include <random>
#include <set>

namespace lcs {

namespace detail {

// upsilon + |last| <= |coef| < upsilon + |I - first|
inline bool admissible(const Tripartition& t, long total, long upsilon, Subset I) {
    return upsilon + t.last.size() <= total && total < upsilon + (I - t.first).size();
}

inline IntVec lower_on(IntVec v, Subset s) {
    for (int p : s.elements()) --v[p];
    return v;
}

}  // namespace detail

// keys of all strata in the closure of s, s included
inline std::set<StratumKey> closure_of(const CurveConfig& config, const StratumData& s) {
    const long ta = sum(s.alpha), tb = sum(s.beta);
    std::vector<Tripartition> xs, ys;
    for (const auto& t : tripartitions(s.I))
        if (detail::admissible(t, ta, config.g_Y, s.I)) xs.push_back(t);
    for (const auto& t : tripartitions(s.J))
        if (detail::admissible(t, tb, config.g_X, s.J)) ys.push_back(t);
    const bool coupled = config.g_X * config.g_Y > 0;
    std::set<StratumKey> out;
    for (const auto& a : xs)
        for (const auto& b : ys) {
            if (coupled && !compatible(a, s.I, b, s.J)) continue;
            out.insert(make_key(config, detail::lower_on(s.alpha, a.last), a.middle, detail::lower_on(s.beta, b.last),
                                b.middle));
        }
    return out;
}

struct ClosurePoset {
    std::vector<StratumData> strata;
    std::vector<StratumKey> keys;
    std::vector<long> dims;
    std::vector<std::vector<int>> contains;  // j in contains[i]: stratum j lies in the closure of i, j != i
    std::vector<std::pair<int, int>> covers;  // Hasse diagram edges (upper, lower)

    int index_of(const StratumKey& k) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it == keys.end() || *it != k) return -1;
        return static_cast<int>(it - keys.begin());
    }
};

inline ClosurePoset build_poset(const CurveConfig& config, const EnumerateOptions& opt = {}) {
    ClosurePoset P;
    P.strata = enumerate_strata(config, opt);
    for (const auto& s : P.strata) {
        P.keys.push_back(key_of(config, s));
        P.dims.push_back(stratum_dim(config, s).dim);
    }
    const int n = static_cast<int>(P.strata.size());
    P.contains.resize(n);
    for (int i = 0; i < n; ++i) {
        for (const auto& k : closure_of(config, P.strata[i])) {
            int j = P.index_of(k);
            if (j < 0) throw std::logic_error("closure target is not an enumerated stratum");
            if (j != i) P.contains[i].push_back(j);
        }
    }
    std::vector<std::set<int>> reach(n);
    for (int i = 0; i < n; ++i) reach[i].insert(P.contains[i].begin(), P.contains[i].end());
    for (int i = 0; i < n; ++i)
        for (int j : P.contains[i]) {
            bool covered = true;
            for (int k : P.contains[i])
                if (k != j && reach[k].count(j)) covered = false;
            if (covered) P.covers.emplace_back(i, j);
        }
    return P;
}

struct ComponentSummary {
    long count;
    std::vector<StratumKey> maximal;
    std::vector<int> indices;
};

inline ComponentSummary components(const ClosurePoset& P) {
    std::vector<bool> below(P.strata.size(), false);
    for (const auto& c : P.contains)
        for (int j : c) below[j] = true;
    ComponentSummary out{0, {}, {}};
    for (std::size_t i = 0; i < P.strata.size(); ++i)
        if (!below[i]) {
            out.maximal.push_back(P.keys[i]);
            out.indices.push_back(static_cast<int>(i));
        }
    out.count = static_cast<long>(out.maximal.size());
    return out;
}

inline ComponentSummary components(const CurveConfig& config, const EnumerateOptions& opt = {}) {
    return components(build_poset(config, opt));
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

struct CountFormulas {
    Integer n_delta_gX;
    Integer n_delta_gY;
    std::vector<std::vector<long>> gcd_table;  // [i-1][j-1] = gcd(g_X + i, g_Y + j)
    Integer lower_bound;
    std::optional<Integer> closed_form_delta2;
    std::optional<Integer> statement1_value;
    bool irreducible;
};

inline Integer n_delta(long delta, long h) { return binomial(h + delta - 1, delta) - binomial(h, delta); }

inline CountFormulas count_formulas(const CurveConfig& config) {
    config.validate();
    const long d = config.delta, gx = config.g_X, gy = config.g_Y;
    if (d < 2) throw MathError("count formulas need delta > 1");
    CountFormulas f;
    f.n_delta_gX = n_delta(d, gx);
    f.n_delta_gY = n_delta(d, gy);
    Integer correction = 0;
    for (long i = 1; i < d; ++i) {
        f.gcd_table.emplace_back();
        for (long j = 1; j < d; ++j) {
            long g = std::gcd(gx + i, gy + j);
            f.gcd_table.back().push_back(g);
            correction += binomial(g - 1, d - 1);
        }
    }
    if (gx * gy == 0 || gx == gy) f.statement1_value = (gx == 0 && gy == 0) ? Integer(1) : n_delta(d, std::max(gx, gy));
    f.lower_bound = gx * gy > 0 ? f.n_delta_gX + f.n_delta_gY - correction : *f.statement1_value;
    if (d == 2) f.closed_form_delta2 = (gx == 0 && gy == 0) ? Integer(1) : Integer(gx + gy - std::gcd(gx + 1, gy + 1) + 1);
    f.irreducible = gx <= 1 && gy <= 1;
    return f;
}

// half-width of the cube around the witness inside which every point classifies into the closure
inline Rational neighborhood_radius(const StratumData& s) {
    std::optional<Rational> m;
    long top = 0;
    for (std::size_t q = 0; q < s.witness_mu.size(); ++q) {
        const auto& mu = s.witness_mu[q];
        const Rational cand[] = {s.rho[q], mu - s.rho[q], s.sigma[q], mu - s.sigma[q]};
        for (const auto& v : cand)
            if (sgn(v) != 0 && (!m || v < *m)) m = v;
        top = std::max({top, s.alpha[q], s.beta[q]});
    }
    if (!m) throw std::logic_error("degenerate neighborhood");
    return *m / (3 * (1 + top));
}

struct SampleReport {
    std::size_t samples = 0;
    std::vector<RatVec> violations;
    std::set<StratumKey> reached;
};

inline SampleReport neighborhood_sample_check(const CurveConfig& config, const StratumData& s, std::size_t samples,
                                              std::uint64_t seed = 1) {
    const auto closure = closure_of(config, s);
    const Rational r = neighborhood_radius(s);
    std::mt19937_64 rng(seed);
    constexpr long kSteps = 1000;
    std::uniform_int_distribution<long> step(-(kSteps - 1), kSteps - 1);
    SampleReport rep;
    for (std::size_t k = 0; k < samples; ++k) {
        RatVec mu = s.witness_mu;
        if (k > 0)
            for (auto& x : mu) x += r * make_rational(step(rng), kSteps);
        auto key = key_of(config, stratum_of(config, mu));
        rep.reached.insert(key);
        if (!closure.count(key)) rep.violations.push_back(mu);
        ++rep.samples;
    }
    return rep;
}

}  // namespace lcs
