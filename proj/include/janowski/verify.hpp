#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "janowski/disk_oracle.hpp"
#include "janowski/norm.hpp"
#include "janowski/radial.hpp"
#include "janowski/sampling.hpp"
#include "janowski/schwarz.hpp"

namespace janowski::verify {

// Randomized property suites behind `janowski verify`. Each invariant is
// checked on `samples` seeded draws and reported as passed/total.

struct InvariantResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;

    [[nodiscard]] bool ok() const noexcept { return passed == total; }
};

/// Five-point central difference.
template <typename F>
double derivative_5pt(F&& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

inline constexpr double kLemmaTol = 1e-12;
inline constexpr double kPsiRelTol = 1e-12;
inline constexpr double kOracleTol = 1e-8;
inline constexpr double kUpperSlack = 1e-9;
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kIdentityRelTol = 1e-13;
inline constexpr double kDerivTol = 1e-6;
inline constexpr std::size_t kCircleN = 4096;
inline constexpr std::size_t kCertScan = 1'000'000;

/// A in (-1, 1], drawn for the Schwarz-function suites.
inline double random_a(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return 1.0 - 2.0 * unit(rng) * (1.0 - 1e-15);
}

/// Does circle_max_side agree with the scanned circle maximum? Exact
/// endpoint ties (|phi(r)| = |phi(-r)|) accept either ray.
inline bool circle_side_matches(const JanowskiParams& p, double r, std::size_t n_theta) {
    const auto cm = circle_sup(p, r, n_theta);
    const Axis side = circle_max_side(p, r);
    const double cell = 2.0 * std::numbers::pi / static_cast<double>(n_theta);
    if (angle_to_side(cm.theta, side) <= cell * (1.0 + 1e-12)) return true;
    const double pos = psi(p, r, r), neg = psi(p, r, -r);
    return std::abs(pos - neg) <= 1e-12 * std::max(pos, neg);
}

/// Every quartic root the engine consumes: one sign change on a 10^6 scan of
/// its search interval, residual below 1e-10.
inline bool root_certified(const JanowskiParams& p, std::size_t scan = kCertScan) {
    const auto res = preschwarzian_norm(p);
    if (!res.root_cert) return true;
    const Branch br = res.tag.branch;
    const bool uses_h1 = br == Branch::NONNEG_AB_ROOT_H1 || br == Branch::A1_B_LT_THIRD ||
                         br == Branch::MIXED_ROOT_H1;
    const double hi = br == Branch::MIXED_BETA_LT1 ? *res.tag.beta : 1.0;
    const Quartic q = uses_h1 ? Quartic::H1 : Quartic::H2;
    return count_sign_changes(q, p, 0.0, hi, scan) == 1 && res.root_cert->residual <= kResidualTol;
}

inline std::vector<InvariantResult> lemma_suite(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    InvariantResult m{"lemma", 0, samples}, circle{"circle-max", 0, samples},
        psi_id{"psi-identity", 0, samples};
    std::uniform_int_distribution<int> radius_index(1, 9);
    for (std::size_t i = 0; i < samples; ++i) {
        const double a = random_a(rng);
        const auto omega = random_schwarz_map(rng);
        const cplx z = random_in_annulus(rng, 1e-3, 0.999);
        if (m_value(a, omega, z) <= 1.0 + kLemmaTol) ++m.passed;

        const auto p = random_params(rng);
        const double r = 0.1 * radius_index(rng);
        if (circle_side_matches(p, r, kCircleN)) ++circle.passed;

        const cplx w = random_in_annulus(rng, 0.01, 0.99);
        const double lhs = psi(p, std::abs(w), w.real());
        const double rhs = std::norm(phi(p, w));
        if (std::abs(lhs - rhs) <= kPsiRelTol * std::abs(rhs)) ++psi_id.passed;
    }
    return {m, circle, psi_id};
}

inline std::vector<InvariantResult> theorem_suite(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    InvariantResult oracle{"oracle", 0, samples}, roots{"roots", 0, samples},
        deriv{"derivative", 0, samples}, ident{"gamma-phi", 0, samples};
    std::uniform_real_distribution<double> xs(0.01, 0.99);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto p = random_params(rng);
        try {
            const auto n = preschwarzian_norm(p);
            const auto rep = disk_sup(p);
            if (std::abs(n.value - rep.radial_refined) <= kOracleTol &&
                rep.sup_value <= n.value + kUpperSlack)
                ++oracle.passed;
            if (root_certified(p)) ++roots.passed;
        } catch (const Error&) {
        }

        const double x = xs(rng);
        const double a = p.a(), b = p.b();
        const double pole = std::min({1.0 - std::abs(a) * x, 1.0 - std::abs(b) * x, 1.0 - x});
        const double h = 1e-3 * pole;
        const double fd1 = derivative_5pt([&](double t) { return gamma(Profile::Gamma1, p, t); }, x, h);
        const double fd2 = derivative_5pt([&](double t) { return gamma(Profile::Gamma2, p, t); }, x, h);
        const double an1 = h1(p, x) / std::pow((1 - a * x) * (1 - b * x), 2);
        const double an2 = -h2(p, x) / std::pow((1 + a * x) * (1 + b * x), 2);
        if (std::abs(fd1 - an1) <= kDerivTol && std::abs(fd2 - an2) <= kDerivTol) ++deriv.passed;

        const double g1 = gamma(Profile::Gamma1, p, x), g2 = gamma(Profile::Gamma2, p, x);
        const double w = (1 - x) * (1 + x);
        const double e1 = w * std::abs(phi(p, -x)), e2 = w * std::abs(phi(p, x));
        if (std::abs(g1 - e1) <= 1e-12 * e1 && std::abs(g2 - e2) <= 1e-12 * e2) ++ident.passed;
    }
    return {oracle, roots, deriv, ident};
}

inline std::vector<InvariantResult> schwarz_suite(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    InvariantResult pick{"schwarz-pick", 0, samples}, extremal{"extremality", 0, samples},
        recovery{"identity-recovery", 0, samples};
    for (std::size_t i = 0; i < samples; ++i) {
        const auto omega = random_schwarz_map(rng);
        const cplx z = random_in_annulus(rng, 1e-3, 0.999);
        if (schwarz_pick_gap(omega, z) >= -kLemmaTol) ++pick.passed;

        const auto p = random_params(rng);
        try {
            const double bound = preschwarzian_norm(p).value;
            if (sampled_norm(p, omega, 64, 256).value <= bound + kUpperSlack) ++extremal.passed;
        } catch (const Error&) {
        }

        const cplx w = random_in_disk(rng, 0.999);
        const cplx tf = member_preschwarzian(p, SchwarzMap::identity(), w);
        const cplx tk = extremal_preschwarzian(p, w);
        if (std::abs(tf - tk) <= kIdentityRelTol * std::abs(tk)) ++recovery.passed;
    }
    return {pick, extremal, recovery};
}

}  // namespace janowski::verify
