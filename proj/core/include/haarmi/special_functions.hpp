#pragma once

#include <cstdint>

#include "haarmi/big_rational.hpp"

namespace haarmi {

/// Euler-Mascheroni constant.
inline constexpr long double kEulerGammaLong = 0.577215664901532860606512090082402431L;
inline constexpr double kEulerGamma = static_cast<double>(kEulerGammaLong);

/// Largest even index 2k for which Bernoulli numbers are cached.
inline constexpr int kMaxBernoulliIndex = 120;

/// Digamma function psi(x) for x > 0.
///
/// Shifts the argument above 10 with the recurrence psi(x) = psi(x + 1) - 1/x,
/// then sums ln x - 1/(2x) - sum_{k=1..7} B_{2k} / (2k x^{2k}). The work is done
/// in extended precision and rounded once. Throws DomainError for x <= 0 or NaN.
double digamma(double x);

/// Exact H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
BigRational harmonic_rational(std::uint64_t n);

/// Exact Bernoulli number B_{2k} (B_2 = 1/6, B_4 = -1/30) for 2 <= index <= kMaxBernoulliIndex.
/// Throws DomainError for odd or out-of-range indices.
const BigRational& bernoulli(int index);

/// zeta(1 - 2k) = -B_{2k} / (2k).
BigRational zeta_negative_odd(int k);

}  // namespace haarmi
