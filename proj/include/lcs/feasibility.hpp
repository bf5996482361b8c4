#pragma once

#include "lcs/rational.hpp"

#include <map>
#include <optional>
#include <utility>

namespace lcs {

enum class Rel { Eq, Ge, Gt };

// coeffs . x + constant  (rel)  0
struct LinearConstraint {
    RatVec coeffs;
    Rational constant;
    Rel rel = Rel::Gt;

    bool satisfied_by(const RatVec& x) const {
        Rational v = constant;
        for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * x[i];
        switch (rel) {
            case Rel::Eq: return v == 0;
            case Rel::Ge: return sgn(v) >= 0;
            case Rel::Gt: return sgn(v) > 0;
        }
        return false;
    }
};

namespace detail {

inline bool is_constant(const LinearConstraint& c) {
    for (const auto& a : c.coeffs)
        if (sgn(a) != 0) return false;
    return true;
}

inline bool constant_holds(const LinearConstraint& c) {
    int s = sgn(c.constant);
    switch (c.rel) {
        case Rel::Eq: return s == 0;
        case Rel::Ge: return s >= 0;
        case Rel::Gt: return s > 0;
    }
    return false;
}

// scale so the first nonzero coefficient is +-1
inline void normalize(LinearConstraint& c) {
    for (const auto& a : c.coeffs) {
        if (sgn(a) == 0) continue;
        Rational s = abs(a);
        if (c.rel == Rel::Eq && sgn(a) < 0) s = -s;
        for (auto& b : c.coeffs) b /= s;
        c.constant /= s;
        return;
    }
}

// keep only the tightest inequality per direction
inline std::vector<LinearConstraint> prune(std::vector<LinearConstraint> cs) {
    std::map<RatVec, std::pair<Rational, Rel>> best;
    for (auto& c : cs) {
        normalize(c);
        auto it = best.find(c.coeffs);
        if (it == best.end()) {
            best.emplace(c.coeffs, std::make_pair(c.constant, c.rel));
            continue;
        }
        auto& [k, r] = it->second;
        if (c.constant < k || (c.constant == k && c.rel == Rel::Gt)) {
            k = c.constant;
            r = c.rel;
        }
    }
    std::vector<LinearConstraint> out;
    out.reserve(best.size());
    for (auto& [coeffs, kr] : best) out.push_back({coeffs, kr.first, kr.second});
    return out;
}

}  // namespace detail

// Exact Fourier-Motzkin. Returns a point satisfying every constraint, or nothing.
inline std::optional<RatVec> find_feasible_point(std::vector<LinearConstraint> sys, std::size_t nvars) {
    for (const auto& c : sys)
        if (c.coeffs.size() != nvars) throw InvalidInput("constraint width mismatch");

    struct Substitution {
        std::size_t var;
        RatVec coeffs;  // var = coeffs . x + constant
        Rational constant;
    };
    std::vector<Substitution> subs;

    // equalities first: solve for one variable and substitute
    for (;;) {
        std::vector<LinearConstraint> next;
        std::optional<LinearConstraint> pick;
        for (auto& c : sys) {
            if (detail::is_constant(c)) {
                if (!detail::constant_holds(c)) return std::nullopt;
                continue;
            }
            if (!pick && c.rel == Rel::Eq)
                pick = c;
            else
                next.push_back(std::move(c));
        }
        if (!pick) {
            sys = std::move(next);
            break;
        }
        std::size_t k = 0;
        while (sgn(pick->coeffs[k]) == 0) ++k;
        Substitution s{k, RatVec(nvars), -pick->constant / pick->coeffs[k]};
        for (std::size_t j = 0; j < nvars; ++j)
            if (j != k) s.coeffs[j] = -pick->coeffs[j] / pick->coeffs[k];
        for (auto& c : next) {
            Rational a = c.coeffs[k];
            if (sgn(a) == 0) continue;
            c.coeffs[k] = 0;
            for (std::size_t j = 0; j < nvars; ++j) c.coeffs[j] += a * s.coeffs[j];
            c.constant += a * s.constant;
        }
        subs.push_back(std::move(s));
        sys = std::move(next);
    }

    std::vector<bool> substituted(nvars, false);
    for (const auto& s : subs) substituted[s.var] = true;

    struct Stage {
        std::size_t var;
        std::vector<LinearConstraint> bounds;
    };
    std::vector<Stage> stages;

    sys = detail::prune(std::move(sys));
    for (std::size_t k = nvars; k-- > 0;) {
        if (substituted[k]) continue;
        Stage st{k, {}};
        std::vector<LinearConstraint> rest, pos, neg;
        for (auto& c : sys) {
            int s = sgn(c.coeffs[k]);
            if (s == 0)
                rest.push_back(std::move(c));
            else
                (s > 0 ? pos : neg).push_back(c), st.bounds.push_back(std::move(c));
        }
        for (const auto& P : pos)
            for (const auto& N : neg) {
                LinearConstraint comb{RatVec(nvars), 0, (P.rel == Rel::Gt || N.rel == Rel::Gt) ? Rel::Gt : Rel::Ge};
                Rational wp = -N.coeffs[k], wn = P.coeffs[k];
                for (std::size_t j = 0; j < nvars; ++j) comb.coeffs[j] = wp * P.coeffs[j] + wn * N.coeffs[j];
                comb.coeffs[k] = 0;
                comb.constant = wp * P.constant + wn * N.constant;
                if (detail::is_constant(comb)) {
                    if (!detail::constant_holds(comb)) return std::nullopt;
                    continue;
                }
                rest.push_back(std::move(comb));
            }
        stages.push_back(std::move(st));
        sys = detail::prune(std::move(rest));
    }
    for (const auto& c : sys)
        if (!detail::constant_holds(c)) return std::nullopt;

    RatVec x(nvars);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::size_t k = it->var;
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : it->bounds) {
            Rational rest = c.constant;
            for (std::size_t j = 0; j < nvars; ++j)
                if (j != k) rest += c.coeffs[j] * x[j];
            Rational v = -rest / c.coeffs[k];
            bool strict = c.rel == Rel::Gt;
            if (sgn(c.coeffs[k]) > 0) {
                if (!lo || v > *lo || (v == *lo && strict)) lo = v, lo_strict = strict;
            } else {
                if (!hi || v < *hi || (v == *hi && strict)) hi = v, hi_strict = strict;
            }
        }
        if (lo && hi) {
            if (*lo == *hi) {
                if (lo_strict || hi_strict) return std::nullopt;
                x[k] = *lo;
            } else {
                if (*lo > *hi) return std::nullopt;
                x[k] = (*lo + *hi) / 2;
            }
        } else if (lo) {
            x[k] = lo_strict ? *lo + 1 : *lo;
        } else if (hi) {
            x[k] = hi_strict ? *hi - 1 : *hi;
        } else {
            x[k] = 0;
        }
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        Rational v = it->constant;
        for (std::size_t j = 0; j < nvars; ++j) v += it->coeffs[j] * x[j];
        x[it->var] = v;
    }
    return x;
}

}  // namespace lcs
