#pragma once

#include <optional>
#include <vector>

#include "haarmi/dims.hpp"

namespace haarmi {

inline constexpr int kDefaultSeriesOrder = 40;

/// The divergent large-N series
///   <I> ~ (d_A^2-1)(d_B^2-1)/(2N) - sum_k B_{2k} / (2k N^{2k}) (d_A^{2k}-1)(d_B^{2k}-1)
/// truncated at k_max, together with its superasymptotic truncation point.
struct SeriesExpansion {
    Dimensions dims;
    double leading = 0.0;
    /// terms[k - 1] is the order-k correction.
    std::vector<double> terms;
    /// partial_sums[0] = leading; partial_sums[k] = partial_sums[k - 1] + terms[k - 1].
    std::vector<double> partial_sums;
    /// Truncation order: the first k whose successor is no smaller in magnitude
    /// (or k_max when the magnitudes decrease to the end).
    int optimal_k = 0;
    /// |t_{optimal_k + 1}| (or |t_{k_max}|) plus the rounding bound of the kept partial sum.
    double error_estimate = 0.0;
    /// First k with |t_{k+1}| > |t_k|, when the scan reaches one.
    std::optional<int> divergence_k;

    double term(int k) const { return terms.at(static_cast<std::size_t>(k - 1)); }
};

struct TruncatedValue {
    double value;
    double error_estimate;
};

/// Order-k correction. Throws DomainError for k outside [1, kMaxBernoulliIndex / 2]
/// and OverflowError (naming k) if the value is not finite.
double bernoulli_term(const Dimensions& dims, int k);

/// Same term with its coefficient taken from zeta(1 - 2k).
double zeta_term(const Dimensions& dims, int k);

SeriesExpansion expand(const Dimensions& dims, int k_max = kDefaultSeriesOrder);

TruncatedValue optimal_truncation_value(const Dimensions& dims, int k_max = kDefaultSeriesOrder);

}  // namespace haarmi
