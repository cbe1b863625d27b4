#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "janowski/error.hpp"
#include "janowski/params.hpp"
#include "janowski/radial.hpp"

namespace janowski {

/// Schwarz function of finite Blaschke type,
///   omega(z) = rotation * z * prod_k (z - a_k) / (1 - conj(a_k) z),
/// an analytic self-map of the disk with omega(0) = 0.
class SchwarzMap {
public:
    SchwarzMap() = default;

    SchwarzMap(cplx rotation, std::vector<cplx> zeros)
        : rotation_(rotation), zeros_(std::move(zeros)) {
        if (std::abs(std::abs(rotation_) - 1.0) > 1e-12)
            throw Error(ErrorCode::Domain, "Schwarz map rotation must be unimodular");
        for (const auto& a : zeros_)
            if (!(std::abs(a) < 1.0))
                throw Error(ErrorCode::Domain, "Schwarz map zeros must lie in the open unit disk");
    }

    static SchwarzMap identity() { return {}; }

    [[nodiscard]] cplx rotation() const noexcept { return rotation_; }
    [[nodiscard]] const std::vector<cplx>& zeros() const noexcept { return zeros_; }

    struct Value {
        cplx value;        ///< omega(z)
        cplx derivative;   ///< omega'(z)
        cplx value_over_z; ///< omega(z) / z, without dividing by z
    };

    /// omega = z g with g = rotation * prod b_k; g' by the product rule, which
    /// stays finite at the zeros a_k.
    [[nodiscard]] Value eval(cplx z) const {
        const std::size_t n = zeros_.size();
        std::vector<cplx> factor(n), dfactor(n);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx a = zeros_[k];
            const cplx den = 1.0 - std::conj(a) * z;
            factor[k] = (z - a) / den;
            dfactor[k] = (1.0 - std::norm(a)) / (den * den);
        }
        cplx g = rotation_;
        for (const auto& f : factor) g *= f;
        cplx dg = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            cplx term = rotation_ * dfactor[k];
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) term *= factor[j];
            dg += term;
        }
        return {z * g, g + z * dg, g};
    }

private:
    cplx rotation_{1.0, 0.0};
    std::vector<cplx> zeros_;
};

/// Quotient M(z) bounded by 1 for every Schwarz function when -1 < A <= 1.
inline double m_value(double a, const SchwarzMap& omega, cplx z) {
    if (!(a > -1.0 && a <= 1.0)) throw Error(ErrorCode::Domain, "M(z) requires -1 < A <= 1");
    if (z == 0.0) throw Error(ErrorCode::Domain, "M(z) is undefined at z = 0");
    const auto w = omega.eval(z).value;
    const double rz = std::abs(z), rw = std::abs(w);
    const double t = std::abs(2.0 + a * w);
    return ((rz * rz - rw * rw) + rw * (1.0 - rz * rz) * t) / (rz * (1.0 - rw * rw) * t);
}

/// Schwarz-Pick slack for omega(z)/z:
///   (|z|^2 - |omega|^2)/|z| - (1 - |z|^2)|omega' - omega/z|, nonnegative.
inline double schwarz_pick_gap(const SchwarzMap& omega, cplx z) {
    if (z == 0.0) throw Error(ErrorCode::Domain, "Schwarz-Pick gap is undefined at z = 0");
    const auto v = omega.eval(z);
    const double rz = std::abs(z), rw = std::abs(v.value);
    return (rz * rz - rw * rw) / rz - (1.0 - rz) * (1.0 + rz) * std::abs(v.derivative - v.value_over_z);
}

/// Pre-Schwarzian f''/f' of the member f with z f'/f = (1 + A omega)/(1 + B omega).
inline cplx member_preschwarzian(const JanowskiParams& p, const SchwarzMap& omega, cplx z) {
    const double a = p.a(), b = p.b();
    const auto v = omega.eval(z);
    const cplx w = v.value;
    return (a - b) * (v.derivative - v.value_over_z + v.value_over_z * (2.0 + a * w)) /
           ((1.0 + a * w) * (1.0 + b * w));
}

struct SampledNorm {
    double value = 0.0;
    cplx argmax{};
};

/// Largest (1-|z|^2)|T_f(z)| on the polar grid r = k/(n_r+1), theta = 2 pi j/n_theta.
/// A lower bound for the norm of f.
inline SampledNorm sampled_norm(const JanowskiParams& p, const SchwarzMap& omega,
                                std::size_t n_r, std::size_t n_theta) {
    if (n_r < 8 || n_theta < 8) throw Error(ErrorCode::Domain, "sampled_norm needs n_r, n_theta >= 8");
    SampledNorm best;
    for (std::size_t k = 1; k <= n_r; ++k) {
        const double r = static_cast<double>(k) / static_cast<double>(n_r + 1);
        const double weight = (1.0 - r) * (1.0 + r);
        for (std::size_t j = 0; j < n_theta; ++j) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
            const cplx z = std::polar(r, th);
            const double v = weight * std::abs(member_preschwarzian(p, omega, z));
            if (v > best.value) best = {v, z};
        }
    }
    return best;
}

/// sampled_norm followed by repeated zooming along the ray of the grid argmax:
/// each pass samples `n_refine` radii across the current bracket and shrinks it
/// to the two neighbours of the best one, until the bracket is below 1e-13.
inline SampledNorm sampled_norm_refined(const JanowskiParams& p, const SchwarzMap& omega,
                                        std::size_t n_r, std::size_t n_theta,
                                        std::size_t n_refine) {
    auto best = sampled_norm(p, omega, n_r, n_theta);
    const double th = std::arg(best.argmax);
    const double step = 1.0 / static_cast<double>(n_r + 1);
    const double r0 = std::abs(best.argmax);
    double lo = std::max(0.0, r0 - step);
    double hi = std::min(std::nextafter(1.0, 0.0), r0 + step);
    for (int pass = 0; pass < 64 && hi - lo > 1e-13; ++pass) {
        double best_r = lo;
        double best_v = -1.0;
        for (std::size_t i = 0; i <= n_refine; ++i) {
            const double r = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_refine);
            const double v = (1.0 - r) * (1.0 + r) * std::abs(member_preschwarzian(p, omega, std::polar(r, th)));
            if (v > best_v) {
                best_v = v;
                best_r = r;
            }
        }
        if (best_v > best.value) best = {best_v, std::polar(best_r, th)};
        const double h = (hi - lo) / static_cast<double>(n_refine);
        lo = std::max(lo, best_r - h);
        hi = std::min(hi, best_r + h);
    }
    return best;
}

}  // namespace janowski
