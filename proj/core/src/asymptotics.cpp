#include "haarmi/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "haarmi/errors.hpp"
#include "haarmi/special_functions.hpp"

namespace haarmi {

namespace {

constexpr int kDirectProductMaxOrder = 20;

double power(double base, int exponent) {
    double result = 1.0;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

// (d_A^{2k} - 1)(d_B^{2k} - 1) / N^{2k}
double dimension_factor(const Dimensions& dims, int k) {
    if (dims.has_trivial_subsystem()) {
        return 0.0;
    }
    const double d_a = static_cast<double>(dims.d_a());
    const double d_b = static_cast<double>(dims.d_b());
    const double n = static_cast<double>(dims.total());
    if (k <= kDirectProductMaxOrder) {
        const double n2k = power(n, 2 * k);
        const double direct = (power(d_a, 2 * k) - 1.0) * (power(d_b, 2 * k) - 1.0) / n2k;
        if (std::isfinite(n2k) && std::isfinite(direct)) {
            return direct;
        }
    }
    // log(d^{2k} - 1) = 2k log d + log1p(-d^{-2k})
    const auto log_factor = [k](double d) {
        return 2.0 * k * std::log(d) + std::log1p(-power(1.0 / d, 2 * k));
    };
    return std::exp(log_factor(d_a) + log_factor(d_b) - 2.0 * k * std::log(n));
}

void check_order(int k) {
    if (k < 1 || 2 * k > kMaxBernoulliIndex) {
        throw DomainError("series order k must lie in [1, " + std::to_string(kMaxBernoulliIndex / 2) +
                          "], got " + std::to_string(k));
    }
}

double finite_or_throw(double value, int k) {
    if (!std::isfinite(value)) {
        throw OverflowError("series term at order k = " + std::to_string(k) + " is not finite");
    }
    return value;
}

}  // namespace

double bernoulli_term(const Dimensions& dims, int k) {
    check_order(k);
    const double coefficient = (-bernoulli(2 * k) / BigRational(2L * k)).to_double();
    return finite_or_throw(coefficient * dimension_factor(dims, k), k);
}

double zeta_term(const Dimensions& dims, int k) {
    check_order(k);
    return finite_or_throw(zeta_negative_odd(k).to_double() * dimension_factor(dims, k), k);
}

SeriesExpansion expand(const Dimensions& dims, int k_max) {
    if (k_max < 1) {
        throw DomainError("k_max must be >= 1, got " + std::to_string(k_max));
    }
    check_order(k_max);

    SeriesExpansion out{.dims = dims};
    out.leading = leading_order(dims);
    out.terms.reserve(static_cast<std::size_t>(k_max));
    out.partial_sums.reserve(static_cast<std::size_t>(k_max) + 1);
    out.partial_sums.push_back(out.leading);
    for (int k = 1; k <= k_max; ++k) {
        const double t = bernoulli_term(dims, k);
        out.terms.push_back(t);
        out.partial_sums.push_back(out.partial_sums.back() + t);
    }

    out.optimal_k = k_max;
    out.error_estimate = std::abs(out.terms.back());
    bool truncation_found = false;
    for (int k = 1; k < k_max; ++k) {
        const double here = std::abs(out.term(k));
        const double next = std::abs(out.term(k + 1));
        if (!truncation_found && next >= here) {
            out.optimal_k = k;
            out.error_estimate = next;
            truncation_found = true;
        }
        if (next > here) {
            out.divergence_k = k;
            break;
        }
    }
    // Rounding of the partial sum bounds how small the estimate can honestly be.
    const double kept = out.partial_sums[static_cast<std::size_t>(out.optimal_k)];
    out.error_estimate += (out.optimal_k + 1) * std::numeric_limits<double>::epsilon() * std::abs(kept);
    return out;
}

TruncatedValue optimal_truncation_value(const Dimensions& dims, int k_max) {
    const SeriesExpansion series = expand(dims, k_max);
    return {series.partial_sums[static_cast<std::size_t>(series.optimal_k)], series.error_estimate};
}

}  // namespace haarmi
