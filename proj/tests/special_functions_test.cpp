#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "haarmi/errors.hpp"
#include "haarmi/special_functions.hpp"
#include "oracles.hpp"

namespace haarmi {
namespace {

double ulps(double got, double want) {
    return std::abs(got - want) / (std::numeric_limits<double>::epsilon() * std::abs(want));
}

TEST(Digamma, StandardValues) {
    EXPECT_LE(ulps(digamma(1.0), -0.5772156649015329), 1.0);
    EXPECT_LE(ulps(digamma(2.0), 0.4227843350984671), 1.0);
    const double h42 = harmonic_rational(42).to_double();
    EXPECT_NEAR(digamma(43.0), h42 - kEulerGamma, 1e-15);
    EXPECT_NEAR(digamma(43.0), 3.749527, 1e-6);
}

TEST(Digamma, MatchesHighPrecisionReference) {
    // 25-digit references from an arbitrary-precision library.
    struct Case {
        double x;
        double psi;
        double max_ulps;
    };
    const Case cases[] = {
        {0.5, -1.963510026021423479440976, 2},   {1.25, -0.2274535333762654080895301, 2},
        {2.75, 0.8189010249754325922778751, 2},  {3.7, 1.167153539361511385873864, 3},
        {9.99, 2.250700372831201099537518, 3},   {10.5, 2.303001034297686375272594, 2},
        {123.456, 4.811829323828985387322188, 2}, {1000000.3, 13.81551035796429577078862, 2},
        {1e9, 20.72326583644641115607859, 2},    {0.01, -100.560885457868674497481, 2},
    };
    for (const auto& c : cases) {
        EXPECT_LE(ulps(digamma(c.x), c.psi), c.max_ulps) << "x = " << c.x;
    }
}

TEST(Digamma, HalfIntegerClosedForm) {
    // psi(n + 1/2) = -gamma - 2 ln 2 + sum_{k=1..n} 2 / (2k - 1)
    mpq_class tail = 0;
    for (int n = 0; n <= 200; ++n) {
        if (n > 0) tail += mpq_class(2, 2 * n - 1);
        const double want = tail.get_d() - 0.5772156649015328606 - 2.0 * 0.6931471805599453094;
        EXPECT_NEAR(digamma(n + 0.5), want, 4e-15 * std::max(1.0, std::abs(want))) << n;
    }
}

TEST(Digamma, DomainError) {
    EXPECT_THROW(digamma(0.0), DomainError);
    EXPECT_THROW(digamma(-1.5), DomainError);
    EXPECT_THROW(digamma(std::nan("")), DomainError);
}

TEST(Digamma, RecurrenceProperty) {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> log_x(std::log(0.5), std::log(1e6));
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < 20000; ++i) {
        const double x = std::exp(log_x(gen));
        const double lhs = digamma(x + 1.0) - digamma(x);
        const double scale = std::max({std::abs(digamma(x)), std::abs(digamma(x + 1.0)), 1.0 / x});
        EXPECT_LE(std::abs(lhs - 1.0 / x), 4.0 * eps * scale) << "x = " << x;
    }
}

TEST(Digamma, IntegerConsistencyWithHarmonicNumbers) {
    // Incremental exact H_n for every n up to 2000, then a sparse set up to 1e5.
    mpq_class h = 0;
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        if (n > 0) h += mpq_class(1, static_cast<unsigned long>(n));
        EXPECT_LE(std::abs(digamma(n + 1.0) - (h.get_d() - kEulerGamma)), 1e-14) << n;
    }
    for (std::uint64_t n : {4999u, 10000u, 31415u, 65536u, 99999u, 100000u}) {
        const double hn = harmonic_rational(n).to_double();
        EXPECT_LE(std::abs(digamma(n + 1.0) - (hn - kEulerGamma)), 1e-14) << n;
    }
}

TEST(HarmonicRational, SmallValues) {
    EXPECT_TRUE(harmonic_rational(0).is_zero());
    EXPECT_EQ(harmonic_rational(4), BigRational(25, 12));
    EXPECT_NEAR(harmonic_rational(16).to_double(), 3.3807289932289932, 1e-15);
}

TEST(HarmonicRational, AgreesWithNaiveSummation) {
    for (std::uint64_t n : {1u, 2u, 3u, 7u, 42u, 100u, 257u, 1000u}) {
        EXPECT_EQ(harmonic_rational(n).raw(), testing::harmonic_naive(n)) << n;
    }
}

TEST(Bernoulli, StandardConstants) {
    EXPECT_EQ(bernoulli(2), BigRational(1, 6));
    EXPECT_EQ(bernoulli(4), BigRational(-1, 30));
    EXPECT_EQ(bernoulli(6), BigRational(1, 42));
    EXPECT_EQ(bernoulli(12), BigRational(-691, 2730));
}

TEST(Bernoulli, SelfTestTableThroughB20) {
    const char* table[] = {"1/6",     "-1/30",   "1/42",   "-1/30",      "5/66",
                           "-691/2730", "7/6",   "-3617/510", "43867/798", "-174611/330"};
    for (int k = 1; k <= 10; ++k) {
        EXPECT_EQ(bernoulli(2 * k), BigRational::parse(table[k - 1])) << "B_" << 2 * k;
    }
}

TEST(Bernoulli, MatchesBinomialRecurrenceThroughCacheLimit) {
    const auto reference = testing::bernoulli_by_recurrence(kMaxBernoulliIndex);
    for (int index = 2; index <= kMaxBernoulliIndex; index += 2) {
        EXPECT_EQ(bernoulli(index).raw(), reference[static_cast<std::size_t>(index)]) << index;
    }
}

TEST(Bernoulli, SignAlternationAndGrowth) {
    for (int k = 1; k <= kMaxBernoulliIndex / 2; ++k) {
        const auto& b = bernoulli(2 * k);
        EXPECT_EQ(b.sign(), k % 2 == 1 ? 1 : -1) << k;
        if (k >= 5) {
            // |B_2k| / (2 (2k)! / (2 pi)^2k) lies in [1, 1.2]
            const double log_ratio = std::log(std::abs(b.to_double())) -
                                     (std::log(2.0) + std::lgamma(2.0 * k + 1.0) -
                                      2.0 * k * std::log(2.0 * M_PI));
            const double ratio = std::exp(log_ratio);
            EXPECT_GE(ratio, 1.0 - 1e-12) << k;
            EXPECT_LE(ratio, 1.2) << k;
        }
    }
}

TEST(Bernoulli, RejectsBadIndices) {
    EXPECT_THROW(bernoulli(0), DomainError);
    EXPECT_THROW(bernoulli(3), DomainError);
    EXPECT_THROW(bernoulli(kMaxBernoulliIndex + 2), DomainError);
}

TEST(Bernoulli, ConcurrentFirstUse) {
    std::vector<std::jthread> threads;
    std::vector<std::string> seen(8);
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&seen, t] { seen[t] = bernoulli(100).str(); });
    }
    threads.clear();
    for (const auto& s : seen) EXPECT_EQ(s, seen[0]);
}

TEST(ZetaNegativeOdd, Values) {
    EXPECT_EQ(zeta_negative_odd(1), BigRational(-1, 12));
    EXPECT_EQ(zeta_negative_odd(2), BigRational(1, 120));
    EXPECT_EQ(zeta_negative_odd(3), BigRational(-1, 252));
    EXPECT_THROW(zeta_negative_odd(0), DomainError);
}

TEST(BigRational, ArithmeticIsExactAndCanonical) {
    const BigRational third(1, 3);
    EXPECT_EQ(third + third + third, BigRational(1));
    EXPECT_EQ(BigRational(2, 4).numerator(), "1");
    EXPECT_EQ(BigRational(3, -6).denominator(), "2");
    EXPECT_EQ(BigRational(3, -6).sign(), -1);
    EXPECT_THROW(third / BigRational(0), DomainError);
    EXPECT_THROW(BigRational(1, 0), DomainError);
    EXPECT_LT(BigRational(1, 3), BigRational(1, 2));
}

}  // namespace
}  // namespace haarmi
