#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "haarmi/asymptotics.hpp"
#include "haarmi/borel.hpp"
#include "haarmi/errors.hpp"
#include "haarmi/page.hpp"
#include "haarmi/special_functions.hpp"
#include "oracles.hpp"

namespace haarmi {
namespace {

std::vector<Dimensions> factorised_grid() {
    std::vector<Dimensions> out;
    for (std::uint64_t a = 2; a <= 6; ++a)
        for (std::uint64_t b = 2; b <= 6; ++b)
            for (std::uint64_t mult : {1u, 2u, 4u}) out.push_back(Dimensions::make(a, b, mult * a * b));
    return out;
}

TEST(BinetTail, Examples) {
    const auto r1 = binet_tail(1.0);
    EXPECT_TRUE(r1.converged);
    EXPECT_NEAR(r1.value, testing::kBinetTail1, 1e-16);
    const auto r100 = binet_tail(100.0);
    EXPECT_NEAR(r100.value, testing::kBinetTail100, 1e-18);
    EXPECT_NEAR(r100.value, 1.0 / (24.0 * 100.0 * 100.0), 0.01 / (24.0 * 100.0 * 100.0));
    EXPECT_THROW(binet_tail(0.0), DomainError);
    EXPECT_THROW(binet_tail(1.0, 0.0), DomainError);
}

TEST(BinetTail, ReproducesDigamma) {
    for (double z : {1.0, 2.0, 6.0, 42.0, 100.0, 0.5, 3.3, 1234.5}) {
        const double rebuilt = std::log(z) + 0.5 / z - 2.0 * binet_tail(z).value;
        const double psi = digamma(z + 1.0);
        EXPECT_LE(std::abs(rebuilt - psi), 1e-13 * std::abs(psi)) << "z = " << z;
    }
}

TEST(KernelR, Examples) {
    const auto d = Dimensions::make(2, 3, 7);
    EXPECT_EQ(kernel_r(0.0, d), 0.0);
    EXPECT_LE(std::abs(kernel_r(std::sqrt(6.0), d)), 1e-17);
    EXPECT_NEAR(kernel_r(1.0, d), 35.0 / 3700.0, 1e-17);
}

TEST(KernelR, ScaleInversionAntisymmetry) {
    std::mt19937_64 gen(11);
    for (const auto& d : factorised_grid()) {
        const double c = static_cast<double>(d.d_ab());
        std::uniform_real_distribution<double> dist(1e-6, 10.0 * c);
        for (int i = 0; i < 500; ++i) {
            const double u = dist(gen);
            const double lhs = kernel_r(c / u, d) * (c / (u * u));
            const double rhs = -kernel_r(u, d);
            // Relative to the kernel's size away from its zero at sqrt(C).
            const double scale = std::abs(rhs) + 1e-3 * u / ((u * u + 1.0) * (u * u + c * c));
            EXPECT_LE(std::abs(lhs - rhs), 1e-13 * scale) << "u = " << u;
        }
    }
}

TEST(PartialFractions, Example23) {
    const auto pf = partial_fractions(Dimensions::make(2, 3, 7));
    EXPECT_EQ(pf.poles, (std::array<double, 4>{1, 2, 3, 6}));
    EXPECT_EQ(pf.signs, (std::array<int, 4>{1, -1, -1, 1}));
    EXPECT_DOUBLE_EQ(pf.common_factor, 1.0 / 24.0);
    EXPECT_NEAR(pf.evaluate(1.0), 35.0 / 3700.0, 1e-15 * 35.0 / 3700.0);
    EXPECT_EQ(pf.signs[0] + pf.signs[1] + pf.signs[2] + pf.signs[3], 0);
}

TEST(PartialFractions, RejectsRepeatedPoles) {
    EXPECT_THROW(partial_fractions(Dimensions::make(2, 2, 4)), DegeneratePoleError);
    EXPECT_THROW(partial_fractions(Dimensions::make(1, 3, 4)), DegeneratePoleError);
    EXPECT_THROW(partial_fractions(Dimensions::make(3, 1, 4)), DegeneratePoleError);
}

TEST(PartialFractions, ReconstructsKernelPointwise) {
    for (std::uint64_t a = 2; a <= 6; ++a)
        for (std::uint64_t b = 2; b <= 6; ++b) {
            if (a == b) continue;
            const auto d = Dimensions::make(a, b, a * b);
            const auto pf = partial_fractions(d);
            for (double u : {0.01, 0.3, 1.0, 2.5, 7.0, 40.0}) {
                const double r = kernel_r(u, d);
                EXPECT_NEAR(pf.evaluate(u), r, 1e-12 * std::abs(pf.common_factor * u / (u * u + 1)));
            }
        }
}

TEST(FoldedIntegrand, EndpointsAndDomain) {
    const auto d = Dimensions::make(2, 3, 7);
    EXPECT_LE(std::abs(folded_integrand(std::sqrt(6.0), d)), 1e-25);
    EXPECT_THROW(folded_integrand(0.0, d), DomainError);
    EXPECT_THROW(folded_integrand(2.5, d), DomainError);
    EXPECT_THROW(folded_integrand(-1.0, d), DomainError);
}

TEST(FoldedIntegrand, FiniteLimitAtOrigin) {
    // R(u) ~ u / C^2 and f(u) ~ 1 / (2 pi u d_E), so the integrand tends to 1 / (2 pi d_E C^2).
    for (auto [a, b, e] : {std::array<std::uint64_t, 3>{2, 3, 7}, {2, 2, 4}, {5, 3, 60}}) {
        const auto d = Dimensions::make(a, b, e);
        const double c = static_cast<double>(a * b);
        const double limit = 1.0 / (2.0 * std::numbers::pi * e * c * c);
        // The next correction is relative order pi u d_E.
        EXPECT_NEAR(folded_integrand(1e-9, d), limit, 1e-5 * limit);
        EXPECT_TRUE(std::isfinite(folded_integrand(1e-300, d)));
    }
}

TEST(FoldedIntegrand, PointwisePositive) {
    for (const auto& d : factorised_grid()) {
        const double root_c = std::sqrt(static_cast<double>(d.d_ab()));
        for (int i = 1; i <= 10000; ++i) {
            const double u = i == 10000 ? root_c : root_c * i / 10000.0;
            const double v = folded_integrand(u, d);
            ASSERT_GE(v, 0.0) << "u = " << u;
            // Strictly positive wherever the occupation factor has not underflowed.
            if (i < 10000 && bose_einstein(u, static_cast<double>(d.d_e())) > 1e-250)
                ASSERT_GT(v, 0.0) << "u = " << u;
        }
    }
}

TEST(ComputeJ, FrozenValues) {
    const auto j237 = compute_j(Dimensions::make(2, 3, 7));
    EXPECT_TRUE(j237.converged);
    EXPECT_NEAR(j237.value, testing::kJ237, 1e-14 * testing::kJ237);
    EXPECT_NEAR(compute_j(Dimensions::make(2, 2, 4)).value, testing::kJ224, 1e-14 * testing::kJ224);
    EXPECT_THROW(compute_j(Dimensions::make(3, 4, 2)), RegimeError);
}

TEST(ComputeJ, FoldedMatchesUnfolded) {
    const double tol = 1e-14;
    for (const auto& d : factorised_grid()) {
        const double folded = compute_j(d, tol).value;
        const double unfolded = compute_j_unfolded(d, tol).value;
        EXPECT_LE(std::abs(folded - unfolded), 2.0 * tol) << d.d_a() << "," << d.d_b() << "," << d.d_e();
        EXPECT_GT(folded, 0.0);
    }
}

TEST(MutualInformationIntegral, Examples) {
    EXPECT_NEAR(mutual_information_integral(Dimensions::make(2, 3, 7)), testing::kMutualInformation237,
                1e-13 * testing::kMutualInformation237);
    EXPECT_EQ(mutual_information_integral(Dimensions::make(1, 5, 9)), 0.0);
    EXPECT_NEAR(mutual_information_integral(Dimensions::make(2, 2, 4)), testing::kMutualInformation224,
                1e-13 * testing::kMutualInformation224);
    EXPECT_THROW(mutual_information_integral(Dimensions::make(3, 4, 2)), RegimeError);
    EXPECT_NEAR(factorised_form_integral(Dimensions::make(3, 4, 2)), 2.483, 1e-3);
    EXPECT_NEAR(factorised_form_integral(Dimensions::make(3, 4, 2)), testing::kForcedFactorised342, 1e-12);
}

TEST(MutualInformationIntegral, FactorisationMatchesClosedFormG) {
    for (const auto& d : factorised_grid()) {
        const auto mi = mutual_information_exact(d);
        const double g = 1.0 / (2.0 * d.total()) - 2.0 * compute_j(d).value;
        ASSERT_TRUE(mi.g_value.has_value());
        EXPECT_LE(std::abs(*mi.g_value - g), 1e-12 * std::abs(g));
    }
}

TEST(BoundDeficit, Examples) {
    const auto d224 = Dimensions::make(2, 2, 4);
    const double deficit = bound_deficit(d224);
    EXPECT_NEAR(deficit, 0.0029, 1e-4);
    EXPECT_NEAR(deficit / leading_order(d224), 0.0103, 1e-4);
    EXPECT_NEAR(bound_deficit(Dimensions::make(2, 3, 7)), 0.0011306056290982247, 1e-15);
    EXPECT_EQ(bound_deficit(Dimensions::make(1, 3, 7)), 0.0);
    for (const auto& d : factorised_grid()) EXPECT_GT(bound_deficit(d), 0.0);
}

TEST(BinetSum, PoleByPoleRouteEqualsDigammaRoute) {
    for (const auto& d : factorised_grid()) {
        const double exact = mutual_information_exact(d).total;
        EXPECT_LE(std::abs(mutual_information_binet_sum(d) - exact), 1e-12 * exact)
            << d.d_a() << "," << d.d_b() << "," << d.d_e();
    }
}

TEST(BorelSum, IntegralSitsWithinSeriesErrorEstimate) {
    for (std::uint64_t a = 2; a <= 4; ++a)
        for (std::uint64_t b = 2; b <= 4; ++b)
            for (std::uint64_t e = a * b; e <= 3 * a * b; ++e) {
                const auto d = Dimensions::make(a, b, e);
                const auto series = optimal_truncation_value(d);
                EXPECT_LE(std::abs(mutual_information_integral(d) - series.value), 2.0 * series.error_estimate)
                    << a << "," << b << "," << e;
            }
}

}  // namespace
}  // namespace haarmi
