#pragma once

#include "lcs/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace lcs {

// Two components X, Y of arithmetic genera g_X, g_Y meeting at delta nodes.
struct CurveConfig {
    long g_X = 0;
    long g_Y = 0;
    int delta = 1;
    std::vector<std::string> labels;
    bool general_position = true;

    long genus() const { return g_X + g_Y + delta - 1; }
    // the node whose coordinate is pinned to 1
    int base_point() const { return delta - 1; }

    void validate() const {
        if (g_X < 0 || g_Y < 0) throw InvalidInput("genera must be nonnegative");
        if (delta < 1) throw InvalidInput("delta must be positive");
        if (delta > kMaxDelta) throw InvalidInput("delta too large");
        if (delta == 1 && g_X * g_Y == 0) throw MathError("need delta > 1 or g_X*g_Y > 0");
        if (static_cast<int>(labels.size()) != delta) throw InvalidInput("label count must equal delta");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) throw InvalidInput("labels must be distinct");
    }

    static CurveConfig make(long gx, long gy, int delta) {
        CurveConfig c;
        c.g_X = gx;
        c.g_Y = gy;
        c.delta = delta;
        for (int i = 1; i <= delta; ++i) c.labels.push_back("p" + std::to_string(i));
        c.validate();
        return c;
    }
};

}  // namespace lcs
