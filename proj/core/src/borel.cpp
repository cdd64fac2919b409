#include "haarmi/borel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "haarmi/errors.hpp"

namespace haarmi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRelativeTolerance = 1e-14;
constexpr int kMaxInitialPanels = 1 << 14;

int panels_for_width(double length, double width) {
    const double p = std::ceil(length / width);
    return static_cast<int>(std::clamp(p, 1.0, static_cast<double>(kMaxInitialPanels)));
}

void require_tolerance(double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be > 0");
    }
}

QuadratureResult folded_j(const Dimensions& dims, double tol) {
    require_tolerance(tol);
    const double root_c = std::sqrt(static_cast<double>(dims.d_ab()));
    const double d_e = static_cast<double>(dims.d_e());
    PanelDoublingOptions options{.abs_tol = tol,
                                 .rel_tol = kRelativeTolerance,
                                 .initial_panels = panels_for_width(root_c, 1.0 / d_e)};
    return integrate_panel_doubling([&](double u) { return folded_integrand(u, dims); }, 0.0, root_c,
                                    options);
}

}  // namespace

QuadratureResult binet_tail(double z, double tol) {
    if (!(z > 0.0)) {
        throw DomainError("binet_tail requires z > 0");
    }
    require_tolerance(tol);
    // Beyond t = L the tail is below L e^{-2 pi L} / (2 pi z^2), while the integral itself
    // is at least about 1 / (26 z^2); the extra e^5 keeps the truncation below tol relative.
    const double cutoff = std::max(1.0, (std::log(1.0 / tol) + 5.0) / kTwoPi);
    const double z2 = z * z;
    auto integrand = [z2](double t) { return t / ((t * t + z2) * std::expm1(kTwoPi * t)); };
    PanelDoublingOptions options{.abs_tol = tol,
                                 .rel_tol = kRelativeTolerance,
                                 .initial_panels = panels_for_width(cutoff, std::min(1.0, z))};
    return integrate_panel_doubling(integrand, 0.0, cutoff, options);
}

double kernel_r(double u, const Dimensions& dims) {
    const double a2 = static_cast<double>(dims.d_a() * dims.d_a());
    const double b2 = static_cast<double>(dims.d_b() * dims.d_b());
    const double c = static_cast<double>(dims.d_ab());
    const double u2 = u * u;
    return u * (c - u2) * (c + u2) / ((u2 + 1.0) * (u2 + a2) * (u2 + b2) * (u2 + c * c));
}

double PartialFractionForm::evaluate(double u) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        sum += signs[i] * u / (u * u + poles[i] * poles[i]);
    }
    return common_factor * sum;
}

PartialFractionForm partial_fractions(const Dimensions& dims) {
    const auto a = dims.d_a();
    const auto b = dims.d_b();
    if (a == 1 || b == 1 || a == b) {
        throw DegeneratePoleError("partial fractions need distinct poles 1, d_A, d_B, d_A d_B; got d_A = " +
                                  std::to_string(a) + ", d_B = " + std::to_string(b));
    }
    const auto su = casimir_counts(dims).su_product;
    PartialFractionForm out;
    out.poles = {1.0, static_cast<double>(a), static_cast<double>(b), static_cast<double>(a * b)};
    out.signs = {+1, -1, -1, +1};
    out.common_factor = 1.0 / static_cast<double>(su);
    return out;
}

double bose_einstein(double x, double d_e) { return 1.0 / std::expm1(kTwoPi * x * d_e); }

double folded_integrand(double u, const Dimensions& dims) {
    const double c = static_cast<double>(dims.d_ab());
    const double root_c = std::sqrt(c);
    if (!(u > 0.0) || u > root_c) {
        throw DomainError("folded integrand is defined on (0, sqrt(C)], got u = " + std::to_string(u));
    }
    const double d_e = static_cast<double>(dims.d_e());
    return kernel_r(u, dims) * (bose_einstein(u, d_e) - bose_einstein(c / u, d_e));
}

QuadratureResult compute_j(const Dimensions& dims, double tol) {
    if (!dims.factorised_regime()) {
        throw RegimeError("J is only meaningful for d_A d_B <= d_E");
    }
    return folded_j(dims, tol);
}

QuadratureResult compute_j_unfolded(const Dimensions& dims, double tol) {
    require_tolerance(tol);
    const double d_e = static_cast<double>(dims.d_e());
    // |R(u)| <= 1, so the tail past the cutoff is below e^{-2 pi U d_E} / (2 pi d_E).
    const double cutoff = std::max(std::sqrt(static_cast<double>(dims.d_ab())),
                                   std::log(10.0 / tol) / (kTwoPi * d_e));
    PanelDoublingOptions options{.abs_tol = tol,
                                 .rel_tol = kRelativeTolerance,
                                 .initial_panels = panels_for_width(cutoff, 1.0 / d_e)};
    return integrate_panel_doubling(
        [&](double u) { return kernel_r(u, dims) * bose_einstein(u, d_e); }, 0.0, cutoff, options);
}

double factorised_form_integral(const Dimensions& dims, double tol) {
    if (dims.has_trivial_subsystem()) {
        return 0.0;
    }
    const double su = static_cast<double>(casimir_counts(dims).su_product);
    const double n = static_cast<double>(dims.total());
    return su * (1.0 / (2.0 * n) - 2.0 * folded_j(dims, tol).value);
}

double mutual_information_integral(const Dimensions& dims, double tol) {
    if (!dims.factorised_regime()) {
        throw RegimeError("the Bose-Einstein closed form needs d_A d_B <= d_E");
    }
    return factorised_form_integral(dims, tol);
}

double bound_deficit(const Dimensions& dims, double tol) {
    if (!dims.factorised_regime()) {
        throw RegimeError("the strict bound is stated for d_A d_B <= d_E");
    }
    if (dims.has_trivial_subsystem()) {
        return 0.0;
    }
    const double su = static_cast<double>(casimir_counts(dims).su_product);
    return 2.0 * su * compute_j(dims, tol).value;
}

double mutual_information_binet_sum(const Dimensions& dims, double tol) {
    if (!dims.factorised_regime()) {
        throw RegimeError("the Binet decomposition is stated for d_A d_B <= d_E");
    }
    if (dims.has_trivial_subsystem()) {
        return 0.0;
    }
    const double n = static_cast<double>(dims.total());
    const double su = static_cast<double>(casimir_counts(dims).su_product);
    const double tails = (binet_tail(n, tol).value -
                          binet_tail(static_cast<double>(dims.d_b() * dims.d_e()), tol).value) -
                         (binet_tail(static_cast<double>(dims.d_a() * dims.d_e()), tol).value -
                          binet_tail(static_cast<double>(dims.d_e()), tol).value);
    return su / (2.0 * n) - 2.0 * tails;
}

}  // namespace haarmi
