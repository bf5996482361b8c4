#pragma once

#include "lcs/model.hpp"
#include "lcs/strata.hpp"

namespace lcs {

struct CorrectionNumbers {
    IntVec focus_X;
    IntVec focus_Y;
};

inline CorrectionNumbers correction_numbers(const StratumData& s) { return {s.alpha, s.beta}; }

// h0_X, h0_Y: sections of the focus-X twist restricted to X and Y; the M fields mirror them
// for the focus-Y twist.
struct AspectDimensions {
    long h0_X;
    long h0_Y;
    long codim_X;
    long codim_Y;
    long h0_M_Y;
    long h0_M_X;
};

inline AspectDimensions aspect_dimensions(const CurveConfig& c, const StratumData& s) {
    if (!c.general_position) throw MathError("dimension formulas need the general position flag");
    const long a = sum(s.alpha), b = sum(s.beta), d = c.delta;
    AspectDimensions out;
    out.h0_X = c.g_X + a + d - 1;
    out.h0_Y = c.g_Y > 0 ? c.g_Y + s.I.size() - a : d - 1;
    out.codim_X = a - c.g_Y;
    out.codim_Y = b - c.g_X;
    out.h0_M_Y = c.g_Y + b + d - 1;
    out.h0_M_X = c.g_X > 0 ? c.g_X + s.J.size() - b : d - 1;
    return out;
}

// restriction of the focus-X twist: (deg on X, deg on Y)
inline std::pair<long, long> focus_X_component_degrees(const CurveConfig& c, const StratumData& s) {
    const long a = sum(s.alpha);
    return {2 * c.g_X - 2 + c.delta + a, 2 * c.g_Y - 2 + s.I.size() - a};
}

inline std::pair<long, long> focus_Y_component_degrees(const CurveConfig& c, const StratumData& s) {
    const long b = sum(s.beta);
    return {2 * c.g_X - 2 + s.J.size() - b, 2 * c.g_Y - 2 + c.delta + b};
}

}  // namespace lcs
