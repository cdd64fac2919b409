#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "haarmi/errors.hpp"

namespace haarmi {

struct QuadratureResult {
    double value = 0.0;
    /// |S_{2p} - S_p| between the last two panel counts.
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(int order);

    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Shared 20-point rule.
    static const GaussLegendreRule& standard();

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct PanelDoublingOptions {
    double abs_tol = 1e-14;
    /// Also require |S_{2p} - S_p| <= rel_tol |S_{2p}| when positive.
    double rel_tol = 0.0;
    int initial_panels = 1;
    std::int64_t max_evaluations = 1'000'000;
};

/// Composite Gauss-Legendre on [a, b]: doubles the number of equal panels until
/// successive estimates agree. Throws NonConvergenceError once the evaluation
/// budget is spent.
template <class F>
QuadratureResult integrate_panel_doubling(const F& f, double a, double b,
                                          const PanelDoublingOptions& options = {}) {
    const GaussLegendreRule& rule = GaussLegendreRule::standard();
    const auto nodes = rule.nodes();
    const auto weights = rule.weights();

    auto composite = [&](std::int64_t panels, QuadratureResult& acc) {
        const double width = (b - a) / static_cast<double>(panels);
        const double half = 0.5 * width;
        double total = 0.0;
        for (std::int64_t p = 0; p < panels; ++p) {
            const double mid = a + (static_cast<double>(p) + 0.5) * width;
            double panel = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                panel += weights[i] * f(mid + half * nodes[i]);
            }
            total += panel * half;
        }
        acc.evaluations += panels * static_cast<std::int64_t>(nodes.size());
        return total;
    };

    QuadratureResult result;
    std::int64_t panels = options.initial_panels < 1 ? 1 : options.initial_panels;
    double previous = composite(panels, result);
    while (true) {
        panels *= 2;
        if (result.evaluations + panels * rule.order() > options.max_evaluations) {
            throw NonConvergenceError("quadrature did not converge within " +
                                      std::to_string(options.max_evaluations) +
                                      " integrand evaluations (last difference " +
                                      std::to_string(result.abs_error_estimate) + ")");
        }
        const double current = composite(panels, result);
        const double diff = std::abs(current - previous);
        result.value = current;
        result.abs_error_estimate = diff;
        const bool abs_ok = diff <= options.abs_tol;
        const bool rel_ok = options.rel_tol <= 0.0 || diff <= options.rel_tol * std::abs(current);
        if (abs_ok && rel_ok) {
            result.converged = true;
            return result;
        }
        previous = current;
    }
}

}  // namespace haarmi
