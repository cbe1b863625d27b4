#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "janowski/params.hpp"
#include "janowski/schwarz.hpp"

namespace janowski {

// Seeded generators for randomized checks. Every suite takes an explicit
// std::mt19937_64 so runs are reproducible from the reported seed.

using Rng = std::mt19937_64;

/// A uniform in (-1, 1), B uniform in (-1, A).
inline JanowskiParams random_params(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const double a = -1.0 + 2.0 * unit(rng);
        const double b = -1.0 + (a + 1.0) * unit(rng);
        if (a > -1.0 && b > -1.0 && b < a) return validate(a, b);
    }
}

/// Point uniform by area in the disk |z| < radius.
inline cplx random_in_disk(Rng& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
}

inline constexpr std::size_t kMaxFactors = 5;
inline constexpr double kZeroRadius = 0.95;

/// Rotation uniform on the circle, 0..max_factors zeros uniform in |a| < 0.95.
inline SchwarzMap random_schwarz_map(Rng& rng, std::size_t max_factors = kMaxFactors) {
    std::uniform_int_distribution<std::size_t> count(0, max_factors);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const cplx rotation = std::polar(1.0, angle(rng));
    std::vector<cplx> zeros(count(rng));
    for (auto& a : zeros) a = random_in_disk(rng, kZeroRadius);
    return {rotation, std::move(zeros)};
}

/// Point with lo < |z| < hi, radius uniform, angle uniform.
inline cplx random_in_annulus(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> radius(lo, hi);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(radius(rng), angle(rng));
}

}  // namespace janowski
