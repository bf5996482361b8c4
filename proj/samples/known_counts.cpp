// Prints component counts next to the closed formulas for a few small curves.

#include "lcs/lcs.hpp"

#include <iostream>

int main() {
    for (auto [gx, gy, d] : std::vector<std::tuple<long, long, int>>{{2, 4, 2}, {3, 3, 3}, {2, 4, 3}, {1, 1, 3}}) {
        auto c = lcs::CurveConfig::make(gx, gy, d);
        auto comp = lcs::components(c);
        auto f = lcs::count_formulas(c);
        std::cout << "g_X=" << gx << " g_Y=" << gy << " delta=" << d << ": " << comp.count << " components, lower bound "
                  << f.lower_bound;
        if (f.closed_form_delta2) std::cout << ", closed form " << *f.closed_form_delta2;
        std::cout << '\n';
    }
}
