#pragma once

#include <array>

#include "haarmi/dims.hpp"
#include "haarmi/quadrature.hpp"

namespace haarmi {

inline constexpr double kDefaultTolerance = 1e-14;

/// Binet's tail integral int_0^inf t dt / ((t^2 + z^2)(e^{2 pi t} - 1)), so that
/// psi(z + 1) = ln z + 1/(2z) - 2 binet_tail(z).
QuadratureResult binet_tail(double z, double tol = kDefaultTolerance);

/// Rational kernel R(u) = u (C^2 - u^4) / ((u^2+1)(u^2+d_A^2)(u^2+d_B^2)(u^2+C^2)), C = d_A d_B.
double kernel_r(double u, const Dimensions& dims);

/// R(u) = common_factor * sum_i s_i u / (u^2 + alpha_i^2).
struct PartialFractionForm {
    std::array<double, 4> poles{};
    std::array<int, 4> signs{};
    double common_factor = 0.0;

    double evaluate(double u) const;
};

/// Throws DegeneratePoleError unless 1, d_A, d_B, d_A d_B are pairwise distinct.
PartialFractionForm partial_fractions(const Dimensions& dims);

/// Bose-Einstein occupation 1 / (e^{2 pi x d_E} - 1).
double bose_einstein(double x, double d_e);

/// R(u) [f(u) - f(C/u)] on (0, sqrt(C)]; pointwise non-negative. Throws DomainError outside.
double folded_integrand(double u, const Dimensions& dims);

/// The Bose-Einstein integral J(d_A, d_B, d_E), evaluated on the folded domain.
/// Throws RegimeError outside the factorised regime.
QuadratureResult compute_j(const Dimensions& dims, double tol = kDefaultTolerance);

/// J from the unfolded integrand R(u) f(u) on a truncated half-line. Independent
/// check on the folding; no regime guard.
QuadratureResult compute_j_unfolded(const Dimensions& dims, double tol = kDefaultTolerance);

/// (d_A^2-1)(d_B^2-1) [1/(2N) - 2J]. Exactly 0 for a trivial subsystem.
double mutual_information_integral(const Dimensions& dims, double tol = kDefaultTolerance);

/// The same closed form evaluated without the regime guard. Outside the
/// factorised regime it no longer equals the Haar average.
double factorised_form_integral(const Dimensions& dims, double tol = kDefaultTolerance);

/// leading_order - <I> = 2 (d_A^2-1)(d_B^2-1) J > 0.
double bound_deficit(const Dimensions& dims, double tol = kDefaultTolerance);

/// Mutual information rebuilt from four Binet tails at z = N, N/d_A, N/d_B, N/(d_A d_B)
/// with signs (+, -, -, +); the pole-by-pole counterpart of the closed form.
double mutual_information_binet_sum(const Dimensions& dims, double tol = kDefaultTolerance);

}  // namespace haarmi
