#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string_view>

#include "janowski/error.hpp"

namespace janowski {

/// Validated parameter pair of the Janowski starlike class, -1 <= B < A <= 1.
///
/// Only obtainable through `validate`, so holding one is proof of validity.
class JanowskiParams {
public:
    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }

    friend JanowskiParams validate(double a, double b);

    friend bool operator==(const JanowskiParams&, const JanowskiParams&) = default;

private:
    JanowskiParams(double a, double b) : a_(a), b_(b) {}
    double a_;
    double b_;
};

inline JanowskiParams validate(double a, double b) {
    auto reject = [&](std::string_view bound) {
        std::ostringstream os;
        os.precision(17);
        os << "invalid parameters (A=" << a << ", B=" << b << "): violates " << bound;
        throw Error(ErrorCode::InvalidParams, os.str());
    };
    if (std::isnan(a) || std::isnan(b)) reject("finiteness (NaN given)");
    if (a > 1.0) reject("A <= 1");
    if (a <= -1.0) reject("A > -1");
    if (b < -1.0) reject("B >= -1");
    if (b >= a) reject("B < A");
    return JanowskiParams(a, b);
}

enum class Branch {
    B_NEG1,
    NONNEG_AB_ROOT_H1,
    A1_B_LT_THIRD,
    A1_B_GE_THIRD,
    NONPOS_AB_ROOT_H2,
    MIXED_ROOT_H1,
    MIXED_BOUNDARY,
    MIXED_BETA_LT1,
    MIXED_BETA_GE1,
};

constexpr std::string_view branch_name(Branch b) noexcept {
    switch (b) {
        case Branch::B_NEG1: return "B_NEG1";
        case Branch::NONNEG_AB_ROOT_H1: return "NONNEG_AB_ROOT_H1";
        case Branch::A1_B_LT_THIRD: return "A1_B_LT_THIRD";
        case Branch::A1_B_GE_THIRD: return "A1_B_GE_THIRD";
        case Branch::NONPOS_AB_ROOT_H2: return "NONPOS_AB_ROOT_H2";
        case Branch::MIXED_ROOT_H1: return "MIXED_ROOT_H1";
        case Branch::MIXED_BOUNDARY: return "MIXED_BOUNDARY";
        case Branch::MIXED_BETA_LT1: return "MIXED_BETA_LT1";
        case Branch::MIXED_BETA_GE1: return "MIXED_BETA_GE1";
    }
    return "?";
}

/// Absolute tolerance for detecting the seam A + 2B = 0.
inline constexpr double kBoundaryTol = 1e-14;

struct CaseTag {
    Branch branch;
    /// sqrt((A+2B)/(A^2 B)); set only when AB < 0, A + 2B <= 0 and B != -1
    /// (the B = -1 row never consults the threshold).
    std::optional<double> beta;
};

/// Threshold radius beta for AB < 0, A + 2B <= 0 (zero on the seam).
inline std::optional<double> beta_of(const JanowskiParams& p) {
    const double a = p.a(), b = p.b();
    if (!(a > 0.0 && b < 0.0)) return std::nullopt;  // AB < 0
    const double s = a + 2.0 * b;
    if (std::abs(s) <= kBoundaryTol) return 0.0;
    if (s > 0.0) return std::nullopt;
    return std::sqrt(s / (a * a * b));
}

/// Picks the unique branch of the closed-form norm table for (A, B).
inline CaseTag classify(const JanowskiParams& p) {
    const double a = p.a(), b = p.b();
    if (b == -1.0) return {Branch::B_NEG1, std::nullopt};
    const auto beta = beta_of(p);
    if (!(a > 0.0 && b < 0.0)) {  // AB >= 0
        if (b >= 0.0) {
            if (a == 1.0)
                return {b < 1.0 / 3.0 ? Branch::A1_B_LT_THIRD : Branch::A1_B_GE_THIRD, beta};
            return {Branch::NONNEG_AB_ROOT_H1, beta};
        }
        return {Branch::NONPOS_AB_ROOT_H2, beta};
    }
    // AB < 0, hence B < 0 < A.
    const double s = a + 2.0 * b;
    if (std::abs(s) <= kBoundaryTol) return {Branch::MIXED_BOUNDARY, beta};
    if (s > 0.0) return {Branch::MIXED_ROOT_H1, beta};
    return {*beta < 1.0 ? Branch::MIXED_BETA_LT1 : Branch::MIXED_BETA_GE1, beta};
}

}  // namespace janowski
