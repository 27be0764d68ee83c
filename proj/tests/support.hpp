#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "rotgeo/pseudometric.hpp"

namespace testing {

// fixed seeds everywhere so failures reproduce
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline rotgeo::Vector4 random_vector(double mag = 10.0) {
    return {uniform(-mag, mag), uniform(-mag, mag), uniform(-mag, mag), uniform(-mag, mag)};
}

inline double max_diff(const rotgeo::Vector4& a, const rotgeo::Vector4& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double euclid2(const rotgeo::Vector4& v) {
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
}

}  // namespace testing
