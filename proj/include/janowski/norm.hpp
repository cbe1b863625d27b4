#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "janowski/error.hpp"
#include "janowski/params.hpp"
#include "janowski/radial.hpp"

namespace janowski {

/// Extremal function K_{A,B}: z e^{Az} for B = 0, z (1+Bz)^{A/B-1} otherwise
/// (principal power; Re(1+Bz) > 0 on the disk).
inline cplx extremal(const JanowskiParams& p, cplx z) {
    const double a = p.a(), b = p.b();
    if (b == 0.0) return z * std::exp(a * z);
    return z * std::exp((a / b - 1.0) * std::log(1.0 + b * z));
}

/// Pre-Schwarzian derivative K''/K' of the extremal function.
inline cplx extremal_preschwarzian(const JanowskiParams& p, cplx z) {
    return (p.a() - p.b()) * phi(p, z);
}

struct NormResult {
    double value = 0.0;
    CaseTag tag{};
    double argmax_x = 0.0;  ///< |z| at which the supremum is attained (or approached)
    Axis axis = Axis::Positive;
    std::optional<RootCertificate> root_cert;
};

/// Sharp pre-Schwarzian norm sup (1-|z|^2)|K''/K'| by the closed-form case
/// table. Interior branches locate the radial maximum as the unique zero of
/// h1 (negative half-diameter) or h2 (positive half-diameter); the remaining
/// branches have the supremum at x = 0 or as x -> 1.
inline NormResult preschwarzian_norm(const JanowskiParams& p, double tol = kDefaultTol) {
    const double a = p.a(), b = p.b();
    NormResult out;
    out.tag = classify(p);

    auto interior = [&](Quartic q, double hi) {
        const auto cert = find_root(q, p, tol, 0.0, hi);
        const Profile prof = q == Quartic::H1 ? Profile::Gamma1 : Profile::Gamma2;
        out.value = (a - b) * gamma(prof, p, cert.root);
        out.argmax_x = cert.root;
        out.axis = q == Quartic::H1 ? Axis::Negative : Axis::Positive;
        out.root_cert = cert;
    };

    switch (out.tag.branch) {
        case Branch::B_NEG1:
            out.value = 2.0 * (2.0 + a);
            out.argmax_x = 1.0;
            out.axis = Axis::Positive;
            break;
        case Branch::NONNEG_AB_ROOT_H1:
        case Branch::A1_B_LT_THIRD:
        case Branch::MIXED_ROOT_H1:
            interior(Quartic::H1, 1.0);
            break;
        case Branch::A1_B_GE_THIRD:
            out.value = 2.0;
            out.argmax_x = 1.0;
            out.axis = Axis::Negative;
            break;
        case Branch::NONPOS_AB_ROOT_H2:
        case Branch::MIXED_BETA_GE1:
            interior(Quartic::H2, 1.0);
            break;
        case Branch::MIXED_BOUNDARY:
            out.value = 2.0 * (a - b);
            out.argmax_x = 0.0;
            out.axis = Axis::Negative;
            break;
        case Branch::MIXED_BETA_LT1: {
            const double beta = *out.tag.beta;
            interior(Quartic::H2, beta);
            const double outer = (a - b) * gamma(Profile::Gamma1, p, beta);
            // Ties stay on the positive axis at alpha_2.
            if (outer > out.value) {
                out.value = outer;
                out.argmax_x = beta;
                out.axis = Axis::Negative;
            }
            break;
        }
    }
    return out;
}

enum class NamedClass {
    OrderAlpha,   ///< starlike of order alpha: (A, B) = (1 - 2 alpha, -1), 0 <= alpha < 1
    Starlike,     ///< (1, -1)
    SinghSingh,   ///< (1, 0)
    Padmanabhan,  ///< (alpha, -alpha), 0 < alpha <= 1
};

/// Closed-form norm for the classical subclasses. Padmanabhan's class uses its
/// own quartic alpha^3 x^4 + (alpha^3 - 3 alpha) x^2 + (4 alpha^2 - 4) x + alpha,
/// independent of the general h2 path.
inline double corollary_norm(NamedClass cls, double alpha = 0.0) {
    switch (cls) {
        case NamedClass::OrderAlpha:
            if (!(alpha >= 0.0 && alpha < 1.0))
                throw Error(ErrorCode::Domain, "order alpha must satisfy 0 <= alpha < 1");
            return 6.0 - 4.0 * alpha;
        case NamedClass::Starlike:
            return 6.0;
        case NamedClass::SinghSingh:
            return 9.0 / 4.0;
        case NamedClass::Padmanabhan: {
            if (!(alpha > 0.0 && alpha <= 1.0))
                throw Error(ErrorCode::Domain, "Padmanabhan alpha must satisfy 0 < alpha <= 1");
            if (alpha == 1.0) return 6.0;
            const double a3 = alpha * alpha * alpha;
            const std::array<double, 5> coeffs{a3, 0.0, a3 - 3.0 * alpha,
                                               4.0 * alpha * alpha - 4.0, alpha};
            const double x0 = find_unique_root(coeffs, "Padmanabhan quartic").root;
            return 2.0 * alpha * (1.0 - x0 * x0) * (2.0 + alpha * x0) /
                   (1.0 - alpha * alpha * x0 * x0);
        }
    }
    return 0.0;
}

}  // namespace janowski
