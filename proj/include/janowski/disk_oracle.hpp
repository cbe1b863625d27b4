#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "janowski/error.hpp"
#include "janowski/norm.hpp"
#include "janowski/params.hpp"

namespace janowski {

// Brute-force estimates of sup (1-|z|^2)|T_K(z)|, evaluated directly from
// T_K without any of the case analysis in norm.hpp.

struct GoldenResult {
    double x = 0.0;
    double value = 0.0;
    std::size_t iters = 0;
};

/// Golden-section search for the maximum of a unimodal `f` on [lo, hi].
/// The bracket endpoints are candidates too, so a monotone `f` returns its
/// endpoint value.
template <typename F>
GoldenResult golden_section_max(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    GoldenResult best{lo, f(lo), 0};
    if (const double fh = f(hi); fh > best.value) best = {hi, fh, 0};
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    std::size_t iters = 0;
    while (b - a > tol && iters < 200) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++iters;
    }
    if (fc > best.value) best = {c, fc, 0};
    if (fd > best.value) best = {d, fd, 0};
    best.iters = iters;
    return best;
}

/// (1-|z|^2)|T_K(z)| with the weight formed as (1-r)(1+r).
inline double weighted_extremal(const JanowskiParams& p, cplx z) {
    const double r = std::abs(z);
    return (1.0 - r) * (1.0 + r) * std::abs(extremal_preschwarzian(p, z));
}

struct GridReport {
    double sup_value = 0.0;      ///< raw polar-grid maximum
    cplx argmax{};               ///< grid point attaining sup_value
    double radial_refined = 0.0; ///< best of the two refined half-diameters
    double radial_argmax = 0.0;  ///< signed x of radial_refined (z = x on the real axis)
    std::size_t refine_iters = 0;
};

inline constexpr std::size_t kDefaultGridR = 512;
inline constexpr std::size_t kDefaultGridTheta = 1024;
inline constexpr double kRefineTol = 1e-12;

/// Polar-grid maximum over r = k/(n_r+1), theta = 2 pi j/n_theta, then a
/// golden-section refinement of x -> (1-x^2)|T_K(+-x)| on each half-diameter,
/// started from the bracket around that half-diameter's best grid radius.
/// Ties on the grid go to the smallest theta, then the smallest r.
inline GridReport disk_sup(const JanowskiParams& p, std::size_t n_r = kDefaultGridR,
                           std::size_t n_theta = kDefaultGridTheta) {
    if (n_r < 64 || n_theta < 64) throw Error(ErrorCode::Domain, "disk_sup needs n_r, n_theta >= 64");
    GridReport rep;
    rep.sup_value = -1.0;
    const double step = 1.0 / static_cast<double>(n_r + 1);
    for (std::size_t j = 0; j < n_theta; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
        for (std::size_t k = 1; k <= n_r; ++k) {
            const cplx z = std::polar(static_cast<double>(k) * step, th);
            const double v = weighted_extremal(p, z);
            if (v > rep.sup_value) {
                rep.sup_value = v;
                rep.argmax = z;
            }
        }
    }

    rep.radial_refined = -1.0;
    const double top = std::nextafter(1.0, 0.0);
    for (const double side : {1.0, -1.0}) {
        auto f = [&](double x) { return weighted_extremal(p, cplx(side * x, 0.0)); };
        std::size_t best_k = 0;
        double best_v = f(0.0);
        for (std::size_t k = 1; k <= n_r; ++k) {
            const double v = f(static_cast<double>(k) * step);
            if (v > best_v) {
                best_v = v;
                best_k = k;
            }
        }
        const double lo = best_k == 0 ? 0.0 : static_cast<double>(best_k - 1) * step;
        const double hi = std::min(top, static_cast<double>(best_k + 1) * step);
        const auto g = golden_section_max(f, lo, hi, kRefineTol);
        rep.refine_iters += g.iters;
        if (g.value > rep.radial_refined) {
            rep.radial_refined = g.value;
            rep.radial_argmax = side * g.x;
        }
    }
    return rep;
}

struct CircleMax {
    double value = 0.0;
    double theta = 0.0;  ///< in [0, 2 pi); ties go to the smallest angle
};

/// Maximum of (1-r^2)|T_K(r e^{i theta})| over theta = 2 pi j / n_theta.
inline CircleMax circle_sup(const JanowskiParams& p, double r, std::size_t n_theta) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::Domain, "circle_sup needs 0 < r < 1");
    if (n_theta < 64) throw Error(ErrorCode::Domain, "circle_sup needs n_theta >= 64");
    CircleMax out{-1.0, 0.0};
    for (std::size_t j = 0; j < n_theta; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
        const double v = weighted_extremal(p, std::polar(r, th));
        if (v > out.value) out = {v, th};
    }
    return out;
}

/// Angular distance from `theta` to the ray of `side` (0 or pi).
inline double angle_to_side(double theta, Axis side) {
    const double target = side == Axis::Positive ? 0.0 : std::numbers::pi;
    double d = std::fmod(std::abs(theta - target), 2.0 * std::numbers::pi);
    return std::min(d, 2.0 * std::numbers::pi - d);
}

}  // namespace janowski
