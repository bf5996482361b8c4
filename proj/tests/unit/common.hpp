#pragma once

#include "lcs/io.hpp"
#include "lcs/lcs.hpp"

#include <gtest/gtest.h>

#include <initializer_list>

inline lcs::RatVec Q(std::initializer_list<const char*> xs) {
    lcs::RatVec v;
    for (const char* x : xs) v.push_back(lcs::parse_rational(x));
    return v;
}

inline lcs::RatVec Qi(std::initializer_list<long> xs) {
    lcs::RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline lcs::Subset S(std::initializer_list<int> xs) { return lcs::Subset::of(xs); }
