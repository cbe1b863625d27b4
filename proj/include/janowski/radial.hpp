#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <string_view>
#include <utility>

#include "janowski/error.hpp"
#include "janowski/params.hpp"

namespace janowski {

using cplx = std::complex<double>;

/// phi(z) = (2 + A z) / ((1 + A z)(1 + B z)); T_K = (A - B) phi.
inline cplx phi(const JanowskiParams& p, cplx z) {
    const double a = p.a(), b = p.b();
    return (2.0 + a * z) / ((1.0 + a * z) * (1.0 + b * z));
}

enum class Profile { Gamma1, Gamma2 };

/// Radial profile on [0, 1]:
///   Gamma1(x) = (1-x^2)(2-Ax)/((1-Ax)(1-Bx)),  the negative half-diameter,
///   Gamma2(x) = (1-x^2)(2+Ax)/((1+Ax)(1+Bx)),  the positive half-diameter.
/// When a denominator factor equals (1-x) (A = 1 for Gamma1, B = -1 for
/// Gamma2) the factor is cancelled, so x = 1 returns the finite limit.
inline double gamma(Profile kind, const JanowskiParams& p, double x) {
    const double a = p.a(), b = p.b();
    if (kind == Profile::Gamma1) {
        if (a == 1.0) return (1.0 + x) * (2.0 - x) / (1.0 - b * x);
        return (1.0 - x) * (1.0 + x) * (2.0 - a * x) / ((1.0 - a * x) * (1.0 - b * x));
    }
    if (b == -1.0) return (1.0 + x) * (2.0 + a * x) / (1.0 + a * x);
    return (1.0 - x) * (1.0 + x) * (2.0 + a * x) / ((1.0 + a * x) * (1.0 + b * x));
}

/// Horner evaluation, coefficients ordered from the highest degree down.
template <std::size_t N>
constexpr double horner(const std::array<double, N>& c, double x) noexcept {
    double acc = 0.0;
    for (double ci : c) acc = acc * x + ci;
    return acc;
}

enum class Quartic { H1, H2 };

/// Monomial coefficients of h1 (numerator of Gamma1') or h2 (minus the
/// numerator of Gamma2'), highest degree first.
inline std::array<double, 5> quartic_coefficients(Quartic which, const JanowskiParams& p) {
    const double a = p.a(), b = p.b();
    const double sign = which == Quartic::H1 ? -1.0 : 1.0;
    return {a * a * b,
            sign * 2.0 * a * (a + b),
            5.0 * a + (2.0 + a * a) * b,
            sign * 4.0 * (1.0 + a * b),
            a + 2.0 * b};
}

inline double h1(const JanowskiParams& p, double x) {
    return horner(quartic_coefficients(Quartic::H1, p), x);
}

inline double h2(const JanowskiParams& p, double x) {
    return horner(quartic_coefficients(Quartic::H2, p), x);
}

inline double quartic(Quartic which, const JanowskiParams& p, double x) {
    return which == Quartic::H1 ? h1(p, x) : h2(p, x);
}

/// Evidence that a consumed quartic root is the unique zero in its interval.
struct RootCertificate {
    double root = 0.0;
    double residual = 0.0;                ///< |h(root)|
    std::pair<double, double> bracket{};  ///< opposite-sign endpoints
    std::size_t sign_changes = 0;         ///< counted over the uniform scan
};

namespace detail {

/// Rounding-level magnitude of a Horner evaluation at |x| <= 1.
inline double horner_noise(std::span<const double> coeffs) {
    double s = 0.0;
    for (double c : coeffs) s += std::abs(c);
    return 64.0 * std::numeric_limits<double>::epsilon() * s;
}

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace detail

struct SignScan {
    std::size_t sign_changes = 0;
    std::pair<double, double> first_bracket{};
};

/// Counts sign changes of `f` over lo + (hi-lo) k / n, k = 0..n. Exact zeros
/// carry no sign and are skipped. The sample at `hi` is also skipped when its
/// magnitude is at or below `endpoint_noise`, so a root sitting exactly on the
/// endpoint (h1 at x = 1 when A = 1) cannot produce a spurious change.
template <typename F>
SignScan scan_sign_changes(F&& f, double lo, double hi, std::size_t n, double endpoint_noise) {
    SignScan out;
    int last_sign = 0;
    double last_x = lo;
    for (std::size_t k = 0; k <= n; ++k) {
        const double x = k == n ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
        const double v = f(x);
        const int s = (k == n && std::abs(v) <= endpoint_noise) ? 0 : detail::sign_of(v);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) {
            if (out.sign_changes == 0) out.first_bracket = {last_x, x};
            ++out.sign_changes;
        }
        last_sign = s;
        last_x = x;
    }
    return out;
}

inline constexpr std::size_t kDefaultScan = 4096;
inline constexpr double kDefaultTol = 1e-13;

/// Unique root in (lo, hi) of the polynomial with monomial coefficients
/// `coeffs`: uniform sign scan with `n_scan` subintervals, then bisection of the
/// single bracket down to width `tol`. Throws NoBracket / MultipleBrackets when
/// the scan does not show exactly one sign change; `label` names the
/// polynomial in the message.
template <std::size_t N>
RootCertificate find_unique_root(const std::array<double, N>& coeffs, std::string_view label,
                                 double tol = kDefaultTol, double lo = 0.0, double hi = 1.0,
                                 std::size_t n_scan = kDefaultScan) {
    auto f = [&](double x) { return horner(coeffs, x); };
    const auto scan = scan_sign_changes(f, lo, hi, n_scan, detail::horner_noise(coeffs));
    if (scan.sign_changes != 1) {
        std::ostringstream os;
        os.precision(17);
        os << label << ": " << scan.sign_changes << " sign changes on (" << lo << ", " << hi
           << "), expected exactly one";
        throw Error(scan.sign_changes == 0 ? ErrorCode::NoBracket : ErrorCode::MultipleBrackets,
                    os.str());
    }

    auto [l, r] = scan.first_bracket;
    const int sl = detail::sign_of(f(l));
    while (r - l > tol) {
        const double m = 0.5 * (l + r);
        if (m <= l || m >= r) break;
        const double fm = f(m);
        if (fm == 0.0) {
            l = r = m;
            break;
        }
        if (detail::sign_of(fm) == sl) l = m; else r = m;
    }
    RootCertificate cert;
    cert.root = 0.5 * (l + r);
    cert.residual = std::abs(f(cert.root));
    cert.bracket = scan.first_bracket;
    cert.sign_changes = scan.sign_changes;
    return cert;
}

namespace detail {

// At A = 1, h1 = (1 - x)^2 (B x^2 - 2x + 1 + 2B). Rounded monomial coefficients
// split the double root at x = 1 into a nearby pair, which swamps a q-root
// close to 1 (B just below 1/3). The positive factor (1 - x)^2 does not change
// signs on (0, 1), so brackets are taken from q itself.
inline bool deflate_at_one(Quartic which, const JanowskiParams& p) {
    return which == Quartic::H1 && p.a() == 1.0;
}

inline std::array<double, 3> deflated_h1(const JanowskiParams& p) {
    return {p.b(), -2.0, 1.0 + 2.0 * p.b()};
}

}  // namespace detail

/// Root alpha_1 (of h1) or alpha_2 (of h2) in (lo, hi). The residual is
/// always reported against the monomial quartic.
inline RootCertificate find_root(Quartic which, const JanowskiParams& p, double tol = kDefaultTol,
                                 double lo = 0.0, double hi = 1.0,
                                 std::size_t n_scan = kDefaultScan) {
    if (detail::deflate_at_one(which, p)) {
        auto cert = find_unique_root(detail::deflated_h1(p), "h1", tol, lo, hi, n_scan);
        cert.residual = std::abs(h1(p, cert.root));
        return cert;
    }
    return find_unique_root(quartic_coefficients(which, p), which == Quartic::H1 ? "h1" : "h2",
                            tol, lo, hi, n_scan);
}

/// Sign changes of h1 / h2 on a uniform n-point scan of [lo, hi], with the
/// same endpoint handling and A = 1 deflation as find_root.
inline std::size_t count_sign_changes(Quartic which, const JanowskiParams& p, double lo,
                                      double hi, std::size_t n) {
    auto count = [&](const auto& coeffs) {
        return scan_sign_changes([&](double x) { return horner(coeffs, x); }, lo, hi, n,
                                 detail::horner_noise(coeffs))
            .sign_changes;
    };
    if (detail::deflate_at_one(which, p)) return count(detail::deflated_h1(p));
    return count(quartic_coefficients(which, p));
}

enum class Axis { Positive, Negative };

/// Side of the real diameter on which |phi| peaks over the circle |z| = r.
inline Axis circle_max_side(const JanowskiParams& p, double r) {
    const double a = p.a(), b = p.b();
    if (b >= 0.0) return Axis::Negative;  // 0 <= B < A <= 1
    if (a <= 0.0) return Axis::Positive;  // -1 <= B < A <= 0
    const double threshold = (a + 2.0 * b) / (a * a * b);
    return r * r <= threshold ? Axis::Positive : Axis::Negative;
}

/// |phi(z)|^2 restricted to |z| = r as a function of x = Re z.
inline double psi(const JanowskiParams& p, double r, double x) {
    const double a = p.a(), b = p.b();
    const double r2 = r * r;
    return (4.0 + a * a * r2 + 4.0 * a * x) /
           ((1.0 + a * a * r2 + 2.0 * a * x) * (1.0 + b * b * r2 + 2.0 * b * x));
}

}  // namespace janowski
