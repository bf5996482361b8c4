#pragma once

#include "lcs/strata.hpp"

namespace lcs {

// degree of the ramification divisor of a g-dimensional system of degree d on a curve of given genus
inline Integer pluecker_ramification_degree(long g, long d, long genus) {
    if (g < 1) throw MathError("system dimension must be positive");
    return Integer(g) * (Integer(d) + Integer(g - 1) * (genus - 1));
}

struct WeierstrassForm {
    Integer deg_R_X;
    Integer deg_R_Y;
    std::vector<Integer> node_coeffs;
    Integer total;
};

struct WeierstrassDegrees {
    WeierstrassForm twisted;     // systems in the focus-X / focus-Y twists
    WeierstrassForm normalized;  // systems in the fixed sheaves of degree 2g_X-2+delta(1+g_Y), mirror
    std::vector<Integer> base_change;  // g(g_Y - alpha_p) + g(g_X - beta_p)
    std::vector<int> negative_nodes;   // nodes with a negative twisted coefficient
    Integer expected_total;            // g^3 - g
};

inline WeierstrassDegrees weierstrass_degrees(const CurveConfig& c, const StratumData& s) {
    c.validate();
    const long g = c.genus(), d = c.delta;
    const long a = sum(s.alpha), b = sum(s.beta);
    WeierstrassDegrees w;
    auto finish = [](WeierstrassForm& f) {
        f.total = f.deg_R_X + f.deg_R_Y;
        for (const auto& x : f.node_coeffs) f.total += x;
    };
    w.twisted.deg_R_X = pluecker_ramification_degree(g, 2 * c.g_X - 2 + d + a, c.g_X);
    w.twisted.deg_R_Y = pluecker_ramification_degree(g, 2 * c.g_Y - 2 + d + b, c.g_Y);
    w.normalized.deg_R_X = pluecker_ramification_degree(g, 2 * c.g_X - 2 + d * (1 + c.g_Y), c.g_X);
    w.normalized.deg_R_Y = pluecker_ramification_degree(g, 2 * c.g_Y - 2 + d * (1 + c.g_X), c.g_Y);
    for (int p = 0; p < d; ++p) {
        w.twisted.node_coeffs.push_back(Integer(g) * (g - 1 - s.alpha[p] - s.beta[p]));
        w.normalized.node_coeffs.push_back(Integer(g) * (d - 2));
        w.base_change.push_back(Integer(g) * (c.g_Y - s.alpha[p]) + Integer(g) * (c.g_X - s.beta[p]));
        if (w.twisted.node_coeffs.back() < 0) w.negative_nodes.push_back(p);
    }
    finish(w.twisted);
    finish(w.normalized);
    w.expected_total = Integer(g) * g * g - g;
    return w;
}

}  // namespace lcs
