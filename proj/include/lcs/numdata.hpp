#pragma once

#include "lcs/rational.hpp"

#include <span>

namespace lcs {

struct NumericalData {
    IntVec alpha;
    RatVec rho;
    Subset I;
    Rational level;

    bool operator==(const NumericalData&) const = default;
};

namespace detail {

inline void check_positive(std::span<const Rational> mu) {
    if (mu.empty()) throw MathError("empty node set");
    if (mu.size() > static_cast<std::size_t>(kMaxDelta)) throw InvalidInput("too many nodes");
    for (const auto& m : mu)
        if (sgn(m) <= 0) throw MathError("mu entries must be positive, got " + to_string(m));
}

// Integer multiples m_p = L * mu_p with L the lcm of denominators.
struct ClearedVector {
    std::vector<Integer> m;
    Integer scale;
};

inline ClearedVector clear_denominators(std::span<const Rational> mu) {
    ClearedVector out;
    out.scale = 1;
    for (const auto& q : mu) out.scale = lcm(out.scale, q.get_den());
    for (const auto& q : mu) out.m.push_back(q.get_num() * (out.scale / q.get_den()));
    return out;
}

inline Integer jump_count(const std::vector<Integer>& m, const Integer& c) {
    Integer total = 0;
    for (const auto& mp : m) total += floor_div(c, mp);
    return total;
}

inline NumericalData data_at_level(const ClearedVector& cv, const Integer& c) {
    NumericalData d;
    for (const auto& mp : cv.m) {
        Integer a = floor_div(c, mp);
        d.alpha.push_back(to_long(a));
        Rational r(mp * (a + 1) - c, cv.scale);
        r.canonicalize();
        d.rho.push_back(r);
    }
    for (std::size_t p = 0; p < cv.m.size(); ++p)
        if (floor_div(c, cv.m[p]) * cv.m[p] == c) d.I.insert(static_cast<int>(p));
    d.level = Rational(c, cv.scale);
    d.level.canonicalize();
    return d;
}

}  // namespace detail

// Data (alpha, rho, I) with upsilon <= |alpha| < upsilon + |I|, 0 < rho <= mu,
// I = {rho = mu}, mu_p(alpha_p + 1) - rho_p constant.
// The level c is the least integer point with sum floor(c/m_p) >= upsilon;
// every such minimum is a multiple of some m_p.
inline NumericalData associated_data(std::span<const Rational> mu, long upsilon) {
    detail::check_positive(mu);
    auto cv = detail::clear_denominators(mu);
    const Integer target = upsilon;
    auto F = [&](const Integer& c) { return detail::jump_count(cv.m, c); };

    // invariant: F(lo) < target <= F(hi)
    Integer lo, hi;
    Integer step = 1;
    if (target > 0) {
        lo = 0;
        hi = step;
        while (F(hi) < target) {
            lo = hi;
            step *= 2;
            hi = lo + step;
        }
    } else {
        hi = 0;
        lo = -step;
        while (F(lo) >= target) {
            hi = lo;
            step *= 2;
            lo = hi - step;
        }
    }
    while (hi - lo > 1) {
        Integer mid = floor_div(lo + hi, 2);
        if (F(mid) >= target)
            hi = mid;
        else
            lo = mid;
    }
    return detail::data_at_level(cv, hi);
}

inline NumericalData associated_data(const RatVec& mu, long upsilon) {
    return associated_data(std::span<const Rational>(mu), upsilon);
}

inline bool verify_conditions(std::span<const Rational> mu, long upsilon, const NumericalData& d) {
    const std::size_t n = mu.size();
    if (n == 0 || d.alpha.size() != n || d.rho.size() != n) return false;
    if (n > static_cast<std::size_t>(kMaxDelta)) return false;
    if (d.I.bits() >> n) return false;
    Subset eq;
    for (std::size_t p = 0; p < n; ++p) {
        if (sgn(mu[p]) <= 0) return false;
        if (sgn(d.rho[p]) <= 0 || d.rho[p] > mu[p]) return false;
        if (d.rho[p] == mu[p]) eq.insert(static_cast<int>(p));
    }
    if (eq.empty() || eq != d.I) return false;
    long total = 0;
    for (long a : d.alpha) total += a;
    if (total < upsilon || total >= upsilon + d.I.size()) return false;
    for (std::size_t p = 0; p < n; ++p)
        if (mu[p] * (d.alpha[p] + 1) - d.rho[p] != d.level) return false;
    return true;
}

inline bool verify_conditions(const RatVec& mu, long upsilon, const NumericalData& d) {
    return verify_conditions(std::span<const Rational>(mu), upsilon, d);
}

inline long sum(const IntVec& v) {
    long s = 0;
    for (long x : v) s += x;
    return s;
}

}  // namespace lcs
