#pragma once

#include "lcs/curve.hpp"
#include "lcs/feasibility.hpp"
#include "lcs/numdata.hpp"

#include <algorithm>
#include <atomic>
#include <compare>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

namespace lcs {

struct StratumKey {
    IntVec alpha;
    IntVec beta;
    std::optional<Subset> I_eff;  // empty when |alpha| = g_Y
    std::optional<Subset> J_eff;  // empty when |beta| = g_X

    auto operator<=>(const StratumKey&) const = default;
    bool operator==(const StratumKey&) const = default;
};

struct StratumData {
    IntVec alpha;
    Subset I;
    IntVec beta;
    Subset J;
    Rational gamma;
    Rational epsilon;
    std::optional<long> alpha_tilde;
    std::optional<long> beta_tilde;
    RatVec witness_mu;
    RatVec rho;
    RatVec sigma;  // mu - sigma' where sigma' is the rho of the Y-side data
};

inline StratumKey make_key(const CurveConfig& c, const IntVec& alpha, Subset I, const IntVec& beta, Subset J) {
    StratumKey k{alpha, beta, std::nullopt, std::nullopt};
    if (sum(alpha) > c.g_Y) k.I_eff = I;
    if (sum(beta) > c.g_X) k.J_eff = J;
    return k;
}

inline StratumKey key_of(const CurveConfig& c, const StratumData& s) { return make_key(c, s.alpha, s.I, s.beta, s.J); }

inline StratumData stratum_of(const CurveConfig& config, const RatVec& mu) {
    config.validate();
    if (static_cast<int>(mu.size()) != config.delta) throw InvalidInput("mu length must equal delta");
    auto x = associated_data(mu, config.g_Y);
    auto y = associated_data(mu, config.g_X);
    StratumData s;
    s.alpha = x.alpha;
    s.I = x.I;
    s.beta = y.alpha;
    s.J = y.I;
    s.gamma = x.level;
    s.epsilon = y.level;
    s.witness_mu = mu;
    s.rho = x.rho;
    for (std::size_t p = 0; p < mu.size(); ++p) s.sigma.push_back(mu[p] - y.rho[p]);
    if (config.g_X * config.g_Y > 0) {
        Rational r = s.gamma / s.epsilon;
        s.alpha_tilde = to_long(r.get_num());
        s.beta_tilde = to_long(r.get_den());
    }
    return s;
}

struct StratumDim {
    long dim;
    long dim_X;
    long dim_Y;
};

inline StratumDim stratum_dim(const CurveConfig& c, const StratumData& s) {
    const bool big_x = sum(s.alpha) > c.g_Y;
    const bool big_y = sum(s.beta) > c.g_X;
    StratumDim d{0, big_x ? s.I.size() - 1L : 0L, big_y ? s.J.size() - 1L : 0L};
    if (big_x && big_y)
        d.dim = (s.I | s.J).size() - ((s.I & s.J).empty() ? 2L : 1L);
    else if (big_x)
        d.dim = d.dim_X;
    else if (big_y)
        d.dim = d.dim_Y;
    return d;
}

// Linear conditions on mu for one side. coef plays alpha (X side, upsilon = g_Y) or
// beta (Y side, upsilon = g_X).
struct SideRegion {
    IntVec coef;
    Subset I;
    bool collapsed = false;  // |coef| = upsilon: union over all I
    std::vector<LinearConstraint> constraints;
};

namespace detail {

inline LinearConstraint two_term(int n, int p, const Rational& a, int q, const Rational& b, Rel rel) {
    LinearConstraint c{RatVec(n), 0, rel};
    c.coeffs[p] += a;
    c.coeffs[q] += b;
    return c;
}

inline std::vector<LinearConstraint> cell_constraints(const IntVec& coef, Subset I) {
    const int n = static_cast<int>(coef.size());
    std::vector<LinearConstraint> out;
    const int p0 = I.elements().front();
    for (int p : I.elements())
        if (p != p0) out.push_back(two_term(n, p, coef[p], p0, -coef[p0], Rel::Eq));
    for (int q = 0; q < n; ++q) {
        if (I.contains(q)) continue;
        out.push_back(two_term(n, p0, coef[p0], q, -coef[q], Rel::Gt));
        out.push_back(two_term(n, q, coef[q] + 1, p0, -coef[p0], Rel::Gt));
    }
    return out;
}

inline std::vector<LinearConstraint> collapsed_constraints(const IntVec& coef) {
    const int n = static_cast<int>(coef.size());
    std::vector<LinearConstraint> out;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q) out.push_back(two_term(n, q, coef[q] + 1, p, -coef[p], Rel::Gt));
    return out;
}

inline std::vector<LinearConstraint> positivity(int n) {
    std::vector<LinearConstraint> out;
    for (int p = 0; p < n; ++p) {
        LinearConstraint c{RatVec(n), 0, Rel::Gt};
        c.coeffs[p] = 1;
        out.push_back(c);
    }
    return out;
}

// pin mu_base = 1 and solve
inline std::optional<RatVec> solve_pinned(std::vector<LinearConstraint> cs, int n, int base) {
    auto pos = positivity(n);
    cs.insert(cs.end(), pos.begin(), pos.end());
    LinearConstraint pin{RatVec(n), -1, Rel::Eq};
    pin.coeffs[base] = 1;
    cs.push_back(pin);
    return find_feasible_point(std::move(cs), n);
}

template <class F>
void for_each_vector(int n, long lo, long hi, F&& f) {
    IntVec v(n, lo);
    if (n == 0 || lo > hi) return;
    for (;;) {
        f(v);
        int i = n - 1;
        while (i >= 0 && v[i] == hi) v[i--] = lo;
        if (i < 0) return;
        ++v[i];
    }
}

}  // namespace detail

inline void check_candidate(int delta, long upsilon, const IntVec& coef, Subset I) {
    if (static_cast<int>(coef.size()) != delta) throw InvalidInput("vector length must equal delta");
    if (I.empty()) throw InvalidInput("index set must be nonempty");
    if (I.bits() >> delta) throw InvalidInput("index set outside node range");
    for (long a : coef)
        if (a < 0 || a > upsilon) throw InvalidInput("entry outside [0, genus bound]");
    long s = sum(coef);
    if (s < upsilon || s >= upsilon + I.size()) throw InvalidInput("sum outside [bound, bound + |I|)");
}

// All (coef, I) cells of one side that some positive mu realizes; collapsed cells merged.
inline std::vector<SideRegion> side_regions(int delta, long upsilon, int base) {
    std::vector<SideRegion> out;
    detail::for_each_vector(delta, 0, upsilon, [&](const IntVec& coef) {
        long s = sum(coef);
        if (s < upsilon || s > upsilon + delta - 1) return;
        if (s == upsilon) {
            SideRegion r{coef, Subset{}, true, detail::collapsed_constraints(coef)};
            if (detail::solve_pinned(r.constraints, delta, base)) out.push_back(std::move(r));
            return;
        }
        Subset support;
        for (int p = 0; p < delta; ++p)
            if (coef[p] > 0) support.insert(p);
        for (std::uint32_t bits = support.bits(); bits; bits = (bits - 1) & support.bits()) {
            Subset I(bits);
            if (s >= upsilon + I.size()) continue;
            SideRegion r{coef, I, false, detail::cell_constraints(coef, I)};
            if (detail::solve_pinned(r.constraints, delta, base)) out.push_back(std::move(r));
        }
    });
    return out;
}

inline std::optional<RatVec> realizable(const CurveConfig& config, const IntVec& alpha, Subset I, const IntVec& beta,
                                        Subset J) {
    config.validate();
    check_candidate(config.delta, config.g_Y, alpha, I);
    check_candidate(config.delta, config.g_X, beta, J);
    if (config.g_Y > 0)
        for (int p : I.elements())
            if (alpha[p] == 0) return std::nullopt;
    if (config.g_X > 0)
        for (int p : J.elements())
            if (beta[p] == 0) return std::nullopt;
    auto cs = detail::cell_constraints(alpha, I);
    auto ys = detail::cell_constraints(beta, J);
    cs.insert(cs.end(), ys.begin(), ys.end());
    return detail::solve_pinned(std::move(cs), config.delta, config.base_point());
}

struct EnumerateOptions {
    std::size_t cap = 1'000'000;  // limit on candidate side-region pairs
    unsigned jobs = 1;
};

inline std::vector<StratumData> enumerate_strata(const CurveConfig& config, const EnumerateOptions& opt = {}) {
    config.validate();
    const int n = config.delta;
    const int base = config.base_point();
    auto xs = side_regions(n, config.g_Y, base);
    auto ys = side_regions(n, config.g_X, base);
    if (xs.size() * ys.size() > opt.cap)
        throw CapExceeded("enumeration needs " + std::to_string(xs.size() * ys.size()) +
                          " candidate pairs, cap is " + std::to_string(opt.cap));

    std::vector<std::vector<StratumData>> per_x(xs.size());
    auto work = [&](std::size_t i) {
        for (const auto& y : ys) {
            auto cs = xs[i].constraints;
            cs.insert(cs.end(), y.constraints.begin(), y.constraints.end());
            auto w = detail::solve_pinned(std::move(cs), n, base);
            if (!w) continue;
            auto s = stratum_of(config, *w);
            if (s.alpha != xs[i].coef || s.beta != y.coef || (!xs[i].collapsed && s.I != xs[i].I) ||
                (!y.collapsed && s.J != y.I))
                throw std::logic_error("witness does not reproduce its cell");
            per_x[i].push_back(std::move(s));
        }
    };
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || xs.size() < 2) {
        for (std::size_t i = 0; i < xs.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < xs.size();) {
                    try {
                        work(i);
                    } catch (...) {
                        std::lock_guard lk(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::map<StratumKey, StratumData> by_key;
    for (auto& bucket : per_x)
        for (auto& s : bucket) {
            auto k = key_of(config, s);
            auto it = by_key.find(k);
            if (it == by_key.end())
                by_key.emplace(std::move(k), std::move(s));
            else if (s.witness_mu < it->second.witness_mu)
                it->second = std::move(s);
        }
    std::vector<StratumData> out;
    out.reserve(by_key.size());
    for (auto& [k, s] : by_key) out.push_back(std::move(s));
    return out;
}

struct RegionDescription {
    std::vector<LinearConstraint> equalities;
    std::vector<LinearConstraint> inequalities;  // strict
    std::string note = "homogeneous: closed under positive scaling of mu";

    bool contains(const RatVec& mu) const {
        for (const auto& c : equalities)
            if (!c.satisfied_by(mu)) return false;
        for (const auto& c : inequalities)
            if (!c.satisfied_by(mu)) return false;
        return true;
    }
};

inline RegionDescription region(const CurveConfig& config, const StratumData& s) {
    const int n = config.delta;
    std::vector<LinearConstraint> all = detail::positivity(n);
    auto add = [&](const IntVec& coef, Subset I, long upsilon) {
        auto cs = sum(coef) == upsilon ? detail::collapsed_constraints(coef) : detail::cell_constraints(coef, I);
        all.insert(all.end(), cs.begin(), cs.end());
    };
    add(s.alpha, s.I, config.g_Y);
    add(s.beta, s.J, config.g_X);
    RegionDescription r;
    for (auto& c : all) {
        detail::normalize(c);
        auto& dst = c.rel == Rel::Eq ? r.equalities : r.inequalities;
        bool dup = false;
        for (const auto& d : dst)
            if (d.coeffs == c.coeffs && d.constant == c.constant) dup = true;
        if (!dup) dst.push_back(std::move(c));
    }
    return r;
}

}  // namespace lcs
