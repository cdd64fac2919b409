#include "haarmi/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "haarmi/errors.hpp"

namespace haarmi {

namespace {

constexpr long double kAsymptoticThreshold = 10.0L;

// B_{2k} / (2k) for k = 1..7.
constexpr std::array<long double, 7> kDigammaCoefficients = {
    1.0L / 12.0L,      -1.0L / 120.0L, 1.0L / 252.0L, -1.0L / 240.0L,
    1.0L / 132.0L,     -691.0L / 32760.0L, 1.0L / 12.0L,
};

long double digamma_asymptotic(long double x) {
    const long double inv2 = 1.0L / (x * x);
    long double series = 0.0L;
    for (auto it = kDigammaCoefficients.rbegin(); it != kDigammaCoefficients.rend(); ++it) {
        series = series * inv2 + *it;
    }
    series *= inv2;
    return std::log(x) - 0.5L / x - series;
}

// Sum of 1/k for k in [lo, hi) as p/q without reducing.
void harmonic_split(std::uint64_t lo, std::uint64_t hi, mpz_class& p, mpz_class& q) {
    if (hi - lo == 1) {
        p = 1;
        q = static_cast<unsigned long>(lo);
        return;
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    mpz_class p1, q1, p2, q2;
    harmonic_split(lo, mid, p1, q1);
    harmonic_split(mid, hi, p2, q2);
    p = p1 * q2 + p2 * q1;
    q = q1 * q2;
}

// Akiyama-Tanigawa. Row entries a_j start at 1/(j+1); each pass yields B_m with B_1 = +1/2.
std::vector<BigRational> build_bernoulli_table() {
    const int n = kMaxBernoulliIndex;
    std::vector<mpq_class> row(n + 1);
    std::vector<BigRational> out(n + 1);
    for (int m = 0; m <= n; ++m) {
        row[m] = mpq_class(1, m + 1);
        row[m].canonicalize();
        for (int j = m; j >= 1; --j) {
            row[j - 1] = j * (row[j - 1] - row[j]);
        }
        out[m] = BigRational(row[0]);
    }
    return out;
}

}  // namespace

double digamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("digamma requires x > 0, got " + std::to_string(x));
    }
    long double z = x;
    long double shift = 0.0L;
    while (z < kAsymptoticThreshold) {
        shift += 1.0L / z;
        z += 1.0L;
    }
    return static_cast<double>(digamma_asymptotic(z) - shift);
}

BigRational harmonic_rational(std::uint64_t n) {
    if (n == 0) {
        return BigRational(0);
    }
    mpz_class p, q;
    harmonic_split(1, n + 1, p, q);
    return BigRational(mpq_class(p, q));
}

const BigRational& bernoulli(int index) {
    if (index < 2 || index > kMaxBernoulliIndex || index % 2 != 0) {
        throw DomainError("Bernoulli index must be even in [2, " + std::to_string(kMaxBernoulliIndex) +
                          "], got " + std::to_string(index));
    }
    static const std::vector<BigRational> table = build_bernoulli_table();
    return table[static_cast<std::size_t>(index)];
}

BigRational zeta_negative_odd(int k) {
    if (k < 1) {
        throw DomainError("zeta(1 - 2k) requires k >= 1, got " + std::to_string(k));
    }
    return -bernoulli(2 * k) / BigRational(2L * k);
}

}  // namespace haarmi
