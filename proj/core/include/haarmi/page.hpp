#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "haarmi/big_rational.hpp"
#include "haarmi/dims.hpp"

namespace haarmi {

enum class Regime { Factorised, Swapped };

std::string_view to_string(Regime regime);

/// Exact Haar average <I(A:B)> split into its diagonal (Dirichlet) part and the
/// eigenvalue correction. `total == i_diag + delta_ev` holds bitwise.
struct MutualInformationBreakdown {
    double total = 0.0;
    double i_diag = 0.0;
    double delta_ev = 0.0;
    Regime regime = Regime::Factorised;
    /// total / ((d_A^2 - 1)(d_B^2 - 1)); only in the factorised regime with a nonzero prefactor.
    std::optional<double> g_value;
};

/// Page's average entanglement entropy, using the smaller factor as the subsystem.
double page_entropy(std::uint64_t m, std::uint64_t n);

/// Average Shannon entropy of the m diagonal entries, psi(mn + 1) - psi(n + 1).
/// Orientation matters: the diagonal follows Dir(n, ..., n) with m components.
double diagonal_entropy_avg(std::uint64_t m, std::uint64_t n);

/// (min(m, n) - 1) / (2 max(m, n)).
double schur_deficit(std::uint64_t m, std::uint64_t n);

MutualInformationBreakdown mutual_information_exact(const Dimensions& dims);

/// Diagonal mutual information evaluated as written in digamma form, in any regime.
double diagonal_mutual_information(const Dimensions& dims);

/// Eigenvalue correction in its closed factorised form
/// [(d_A^2-1)(d_B^2-1) - (d_A-1)(d_B-1)] / (2N). Only equals the true correction
/// when d_A d_B <= d_E.
double eigenvalue_correction_factorised(const Dimensions& dims);

/// The factorised-regime formula applied regardless of regime. Outside the
/// factorised regime this differs from the true average.
double mutual_information_forced_factorised(const Dimensions& dims);

// Exact rational counterparts. Euler's constant cancels from every combination.
BigRational page_entropy_rational(std::uint64_t m, std::uint64_t n);
BigRational diagonal_mutual_information_rational(const Dimensions& dims);
BigRational eigenvalue_correction_factorised_rational(const Dimensions& dims);
BigRational mutual_information_rational(const Dimensions& dims);

/// Lubkin's average purity (m + n) / (mn + 1).
BigRational lubkin_purity(std::uint64_t m, std::uint64_t n);

/// Average sum of squared diagonal entries, (n + 1) / (mn + 1).
BigRational diagonal_second_moment(std::uint64_t m, std::uint64_t n);

/// Common per-generator Bloch variance 2 / (m(mn + 1)). Requires m >= 2.
BigRational bloch_variance(std::uint64_t m, std::uint64_t n);

}  // namespace haarmi
