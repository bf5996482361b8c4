#pragma once

#include "lcs/rational.hpp"

namespace lcs {

struct Tripartition {
    Subset first;
    Subset middle;
    Subset last;

    auto operator<=>(const Tripartition&) const = default;
};

// every ordered tripartition of s, in a fixed order
inline std::vector<Tripartition> tripartitions(Subset s) {
    auto elems = s.elements();
    std::size_t total = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) total *= 3;
    std::vector<Tripartition> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        Tripartition t;
        std::size_t c = code;
        for (int e : elems) {
            switch (c % 3) {
                case 0: t.first.insert(e); break;
                case 1: t.middle.insert(e); break;
                default: t.last.insert(e); break;
            }
            c /= 3;
        }
        out.push_back(t);
    }
    return out;
}

// Coupling conditions between a tripartition a of I and b of J.
inline bool compatible(const Tripartition& a, Subset I, const Tripartition& b, Subset J) {
    auto implies = [](bool p, bool q) { return !p || q; };
    bool g = implies(!(a.first & J).subset_of(b.first & I) || !(b.last & I).subset_of(a.last & J),
                     (J & (I - a.first)).subset_of(b.last & I));
    bool h = implies(!(b.first & I).subset_of(a.first & J) || !(a.last & J).subset_of(b.last & I),
                     (I & (J - b.first)).subset_of(a.last & J));
    return g && h;
}

}  // namespace lcs
