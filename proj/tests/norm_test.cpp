#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "janowski/norm.hpp"
#include "janowski/sampling.hpp"

using namespace janowski;

namespace {

// Second-order complex central differences of K.
cplx fd_preschwarzian(const JanowskiParams& p, cplx z, double h) {
    const cplx k_p = extremal(p, z + h), k_m = extremal(p, z - h), k_0 = extremal(p, z);
    const cplx d1 = (k_p - k_m) / (2 * h);
    const cplx d2 = (k_p - 2.0 * k_0 + k_m) / (h * h);
    return d2 / d1;
}

double norm_of(double a, double b) { return preschwarzian_norm(validate(a, b)).value; }

}  // namespace

TEST(Extremal, KoebeAndNormalisation) {
    Rng rng(1);
    const auto koebe = validate(1, -1);
    for (int i = 0; i < 100; ++i) {
        const cplx z = random_in_disk(rng, 0.9);
        const cplx ref = z / ((1.0 - z) * (1.0 - z));
        EXPECT_NEAR(std::abs(extremal(koebe, z) - ref), 0.0, 1e-13 * std::abs(ref));
        const auto p = random_params(rng);
        EXPECT_EQ(extremal(p, 0.0), cplx(0.0));
        const double h = 1e-6;
        const cplx d = (extremal(p, h) - extremal(p, -h)) / (2 * h);
        EXPECT_NEAR(std::abs(d - 1.0), 0.0, 1e-9);
    }
    EXPECT_NEAR(std::abs(extremal(validate(1, 0), 0.5) - 0.5 * std::exp(0.5)), 0.0, 1e-15);
}

TEST(Extremal, PreschwarzianMatchesFiniteDifferences) {
    Rng rng(2);
    EXPECT_NEAR(std::abs(extremal_preschwarzian(validate(1, -1), 0.5) - 20.0 / 3.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(extremal_preschwarzian(validate(0.4, -0.1), 0.0) - 1.0), 0.0, 1e-15);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_params(rng);
        const cplx z = random_in_disk(rng, 0.8);
        const cplx tk = extremal_preschwarzian(p, z);
        const cplx fd = fd_preschwarzian(p, z, 1e-4);
        ASSERT_NEAR(std::abs(tk - fd), 0.0, 1e-6 * std::max(1.0, std::abs(tk))) << p.a() << " " << p.b() << " " << z;
    }
}

TEST(PreschwarzianNorm, GoldenValues) {
    EXPECT_NEAR(norm_of(1, -1), 6.0, 1e-12);
    EXPECT_NEAR(norm_of(1, 0), 2.25, 1e-12);
    EXPECT_NEAR(norm_of(1 - 2 * 0.25, -1), 5.0, 1e-12);
    EXPECT_NEAR(norm_of(1, 0.5), 2.0, 1e-12);
    EXPECT_NEAR(norm_of(0.5, -0.25), 1.5, 1e-12);
    EXPECT_NEAR(norm_of(-0.5, -1), 3.0, 1e-12);
}

// Reference values from a 2-D polar grid plus Nelder-Mead maximisation of
// (1-|z|^2)|T_K(z)| over the disk, polished by a 40-digit radial solve.
TEST(PreschwarzianNorm, MatchesDiskMaximisation) {
    struct Ref {
        double a, b, norm, x;
        Axis axis;
    };
    const Ref refs[] = {
        {0.8, 0.2, 1.3538498000595166704, 0.38297348824561859558, Axis::Negative},
        {0.9, 0.1, 1.793797803212276444, 0.4057472857564600278, Axis::Negative},
        {-0.2, -0.8, 1.5872237128021658935, 0.54076521661024705474, Axis::Positive},
        {1.0, -0.6, 3.2170386492027918505, 0.10319474672552345802, Axis::Positive},
        {0.8, -0.7, 3.1251646401244236308, 0.25866532942329510922, Axis::Positive},
        {0.5, -0.5, 2.0398404641914569771, 0.15559493689204951548, Axis::Positive},
    };
    for (const auto& r : refs) {
        const auto res = preschwarzian_norm(validate(r.a, r.b));
        EXPECT_NEAR(res.value, r.norm, 1e-12) << r.a << " " << r.b;
        EXPECT_NEAR(res.argmax_x, r.x, 1e-10) << r.a << " " << r.b;
        EXPECT_EQ(res.axis, r.axis);
        ASSERT_TRUE(res.root_cert);
        EXPECT_LT(res.root_cert->residual, 1e-10);
    }
}

TEST(PreschwarzianNorm, EndpointBranches) {
    const auto koebe = preschwarzian_norm(validate(1, -1));
    EXPECT_EQ(koebe.tag.branch, Branch::B_NEG1);
    EXPECT_EQ(koebe.argmax_x, 1.0);
    EXPECT_EQ(koebe.axis, Axis::Positive);
    EXPECT_FALSE(koebe.root_cert);

    const auto ge = preschwarzian_norm(validate(1, 0.9));
    EXPECT_EQ(ge.value, 2.0);
    EXPECT_EQ(ge.argmax_x, 1.0);

    const auto seam = preschwarzian_norm(validate(0.8, -0.4));
    EXPECT_EQ(seam.tag.branch, Branch::MIXED_BOUNDARY);
    EXPECT_NEAR(seam.value, 2.4, 1e-15);
    EXPECT_EQ(seam.argmax_x, 0.0);
}

TEST(PreschwarzianNorm, BetaBelowOneTakesLargerCandidate) {
    const auto p = validate(1, -0.6);
    const auto res = preschwarzian_norm(p);
    ASSERT_EQ(res.tag.branch, Branch::MIXED_BETA_LT1);
    const double beta = *res.tag.beta;
    EXPECT_LT(res.root_cert->root, beta);
    const double outer = 1.6 * gamma(Profile::Gamma1, p, beta);
    const double inner = 1.6 * gamma(Profile::Gamma2, p, res.root_cert->root);
    EXPECT_EQ(res.value, std::max(inner, outer));
}

TEST(PreschwarzianNorm, ExtremalLocationReproducesValue) {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto p = random_params(rng);
        const auto res = preschwarzian_norm(p);
        const double s = res.axis == Axis::Positive ? 1.0 : -1.0;
        const double x = res.argmax_x;
        const double v = (1 - x) * (1 + x) * std::abs(extremal_preschwarzian(p, s * x));
        ASSERT_NEAR(v, res.value, 1e-10) << p.a() << " " << p.b();
    }
    // Endpoint branches in the limit form.
    for (double b : {1.0 / 3.0, 0.5, 0.9}) {
        const auto p = validate(1, b);
        EXPECT_NEAR((1 - b) * gamma(Profile::Gamma1, p, 1.0), preschwarzian_norm(p).value, 1e-12);
    }
    for (double a : {-0.5, 0.0, 0.3, 1.0}) {
        const auto p = validate(a, -1);
        EXPECT_NEAR((a + 1) * gamma(Profile::Gamma2, p, 1.0), preschwarzian_norm(p).value, 1e-12);
    }
}

TEST(PreschwarzianNorm, ContinuousAcrossSeams) {
    const double eps = 1e-6, bound = 10 * eps * 100;
    for (double a : {0.1, 0.2, 0.5, 0.8, 1.0}) {  // A + 2B = 0
        const double b = -a / 2;
        EXPECT_LE(std::abs(norm_of(a, b + eps) - norm_of(a, b - eps)), bound) << a;
    }
    for (double a : {0.3, 0.6, 0.9, 0.99}) {  // beta = 1
        const double b = -a / (2 - a * a);
        EXPECT_LE(std::abs(norm_of(a, b + eps) - norm_of(a, b - eps)), bound) << a;
    }
    EXPECT_LE(std::abs(norm_of(1, 1.0 / 3 + eps) - norm_of(1, 1.0 / 3 - eps)), bound);
}

TEST(PreschwarzianNorm, StrictlyIncreasingAlongBMinusOne) {
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double a = -1.0 + 2.0 * i / 200;
        const double v = norm_of(a, -1);
        EXPECT_EQ(v, 2 * (2 + a));
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(CorollaryNorm, ClosedForms) {
    EXPECT_EQ(corollary_norm(NamedClass::OrderAlpha, 0.5), 4.0);
    EXPECT_EQ(corollary_norm(NamedClass::Starlike), 6.0);
    EXPECT_EQ(corollary_norm(NamedClass::SinghSingh), 2.25);
    EXPECT_EQ(corollary_norm(NamedClass::Padmanabhan, 1.0), 6.0);
    EXPECT_NEAR(corollary_norm(NamedClass::Padmanabhan, 0.5), norm_of(0.5, -0.5), 1e-12);
}

TEST(CorollaryNorm, DomainErrors) {
    EXPECT_THROW(corollary_norm(NamedClass::OrderAlpha, 1.0), Error);
    EXPECT_THROW(corollary_norm(NamedClass::OrderAlpha, -0.1), Error);
    EXPECT_THROW(corollary_norm(NamedClass::Padmanabhan, 0.0), Error);
    EXPECT_THROW(corollary_norm(NamedClass::Padmanabhan, 1.1), Error);
}

TEST(CorollaryNorm, AgreesWithGeneralEngine) {
    EXPECT_NEAR(corollary_norm(NamedClass::Starlike), norm_of(1, -1), 1e-10);
    EXPECT_NEAR(corollary_norm(NamedClass::SinghSingh), norm_of(1, 0), 1e-10);
    Rng rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double alpha = 0.999 * unit(rng) + 0.0005;
        EXPECT_NEAR(corollary_norm(NamedClass::OrderAlpha, alpha), norm_of(1 - 2 * alpha, -1), 1e-10);
        EXPECT_NEAR(corollary_norm(NamedClass::Padmanabhan, alpha), norm_of(alpha, -alpha), 1e-10) << alpha;
    }
}
