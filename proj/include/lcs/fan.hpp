#pragma once

#include "lcs/poset.hpp"

#include <cstdio>
#include <sstream>

namespace lcs {

// Chart mu -> (mu_p / mu_base) for p != base.
struct FanPoint {
    RatVec pos;
    std::string kind;  // delta 2: "x", "star", "x-star"; delta 3: "marked", "crossing"
};

struct FanSegment {
    RatVec from;
    RatVec to;
    bool solid;  // X-side boundary; dashed ones come from the Y side
};

struct FanLayout {
    int delta = 0;
    std::vector<FanPoint> points;
    std::vector<FanSegment> segments;
    Rational extent;  // viewport is [0, extent]^(delta-1)
};

namespace detail {

inline int side_equalities(long coef_sum, long upsilon, Subset I) {
    return coef_sum == upsilon ? 0 : static_cast<int>(I.size()) - 1;
}

inline RatVec chart(const RatVec& mu, int base) {
    RatVec out;
    for (int p = 0; p < static_cast<int>(mu.size()); ++p)
        if (p != base) out.push_back(mu[p] / mu[base]);
    return out;
}

// restrict a homogeneous constraint to the chart (mu_base = 1)
inline std::pair<RatVec, Rational> in_chart(const LinearConstraint& c, int base) {
    RatVec a;
    for (int p = 0; p < static_cast<int>(c.coeffs.size()); ++p)
        if (p != base) a.push_back(c.coeffs[p]);
    return {a, c.constant + c.coeffs[base]};
}

inline std::string decimal(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
    return buf;
}

}  // namespace detail

inline FanLayout fan_layout(const CurveConfig& config, const EnumerateOptions& opt = {}) {
    if (config.delta != 2 && config.delta != 3)
        throw MathError("fan pictures exist only for delta 2 or 3 (unsupported dimension " +
                        std::to_string(config.delta) + ")");
    auto strata = enumerate_strata(config, opt);
    const int base = config.base_point();
    FanLayout out;
    out.delta = config.delta;

    std::map<RatVec, std::string> points;
    for (const auto& s : strata) {
        int ex = detail::side_equalities(sum(s.alpha), config.g_Y, s.I);
        int ey = detail::side_equalities(sum(s.beta), config.g_X, s.J);
        if (stratum_dim(config, s).dim != config.delta - 1) continue;
        auto pos = detail::chart(s.witness_mu, base);
        std::string kind;
        if (config.delta == 2)
            kind = ex && ey ? "x-star" : ex ? "x" : "star";
        else
            kind = ex == 1 && ey == 1 ? "crossing" : "marked";
        points.emplace(pos, kind);
    }
    Rational extent = 1;
    for (const auto& [pos, kind] : points) {
        out.points.push_back({pos, kind});
        for (const auto& x : pos) extent = std::max(extent, x);
    }
    out.extent = extent * Rational(3, 2);
    out.extent.canonicalize();

    if (config.delta == 3) {
        std::set<std::tuple<RatVec, RatVec, bool>> seen;
        for (const auto& s : strata) {
            int ex = detail::side_equalities(sum(s.alpha), config.g_Y, s.I);
            int ey = detail::side_equalities(sum(s.beta), config.g_X, s.J);
            if (ex + ey == 0) continue;
            auto r = region(config, s);
            if (r.equalities.size() != 1) continue;
            auto [a, c] = detail::in_chart(r.equalities[0], base);
            // point on the line and direction
            RatVec p0(2), d{-a[1], a[0]};
            if (sgn(a[0]) != 0)
                p0 = {-c / a[0], 0};
            else
                p0 = {0, -c / a[1]};
            std::optional<Rational> lo, hi;
            auto bound = [&](const RatVec& b, const Rational& k, bool strict_pos) {
                // b.(p0 + t d) + k > 0
                Rational slope = b[0] * d[0] + b[1] * d[1];
                Rational at0 = b[0] * p0[0] + b[1] * p0[1] + k;
                if (sgn(slope) == 0) return at0 > 0 || (at0 == 0 && !strict_pos);
                Rational t = -at0 / slope;
                if (slope > 0) {
                    if (!lo || t > *lo) lo = t;
                } else if (!hi || t < *hi) {
                    hi = t;
                }
                return true;
            };
            bool ok = true;
            for (const auto& ineq : r.inequalities) {
                auto [b, k] = detail::in_chart(ineq, base);
                ok = ok && bound(b, k, true);
            }
            // viewport
            ok = ok && bound({1, 0}, 0, false) && bound({0, 1}, 0, false);
            ok = ok && bound({-1, 0}, out.extent, false) && bound({0, -1}, out.extent, false);
            if (!ok || !lo || !hi || *lo >= *hi) continue;
            RatVec from{p0[0] + *lo * d[0], p0[1] + *lo * d[1]};
            RatVec to{p0[0] + *hi * d[0], p0[1] + *hi * d[1]};
            for (bool solid : {true, false})
                if ((solid ? ex : ey) > 0 && seen.emplace(from, to, solid).second)
                    out.segments.push_back({from, to, solid});
        }
    }
    return out;
}

inline std::string emit_fan_svg(const FanLayout& f) {
    const double size = 600, margin = 40;
    const double scale = (size - 2 * margin) / f.extent.get_d();
    auto X = [&](const Rational& v) { return detail::decimal(Rational(margin) + Rational(scale) * v); };
    auto Y = [&](const Rational& v) {
        return detail::decimal(f.delta == 2 ? Rational(size / 2) : Rational(size - margin) - Rational(scale) * v);
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (f.delta == 2) {
        os << "<line class=\"axis\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(f.extent) << "\" y2=\""
           << Y(0) << "\" stroke=\"black\"/>\n";
        for (const auto& p : f.points) {
            std::string glyph = p.kind == "x" ? "×" : p.kind == "star" ? "∗" : "×∗";
            os << "<g class=\"point " << p.kind << "\" data-mu=\"" << to_string(p.pos[0]) << "\">";
            os << "<circle cx=\"" << X(p.pos[0]) << "\" cy=\"" << Y(0) << "\" r=\"3\"/>";
            os << "<text x=\"" << X(p.pos[0]) << "\" y=\"" << detail::decimal(Rational(size / 2 - 10))
               << "\" text-anchor=\"middle\" font-size=\"14\">" << glyph << "</text></g>\n";
        }
    } else {
        os << "<g class=\"axes\" stroke=\"gray\"><line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(f.extent)
           << "\" y2=\"" << Y(0) << "\"/><line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0)
           << "\" y2=\"" << Y(f.extent) << "\"/></g>\n";
        for (const auto& s : f.segments) {
            os << "<line class=\"" << (s.solid ? "solid" : "dashed") << "\" x1=\"" << X(s.from[0]) << "\" y1=\""
               << Y(s.from[1]) << "\" x2=\"" << X(s.to[0]) << "\" y2=\"" << Y(s.to[1]) << "\" stroke=\"black\""
               << (s.solid ? "" : " stroke-dasharray=\"6,4\"") << "/>\n";
        }
        for (const auto& p : f.points) {
            os << "<circle class=\"point " << p.kind << "\" data-mu=\"" << to_string(p.pos[0]) << ','
               << to_string(p.pos[1]) << "\" cx=\"" << X(p.pos[0]) << "\" cy=\"" << Y(p.pos[1]) << "\" r=\"4\" fill=\""
               << (p.kind == "marked" ? "black" : "white") << "\" stroke=\"black\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string emit_fan_svg(const CurveConfig& config, const EnumerateOptions& opt = {}) {
    return emit_fan_svg(fan_layout(config, opt));
}

}  // namespace lcs
