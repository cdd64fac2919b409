#include "haarmi/quadrature.hpp"

#include <numbers>

namespace haarmi {

GaussLegendreRule::GaussLegendreRule(int order) {
    if (order < 1) {
        throw DomainError("Gauss-Legendre order must be >= 1");
    }
    const auto n = static_cast<std::size_t>(order);
    nodes_.resize(n);
    weights_.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess; roots are symmetric.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (static_cast<long double>(i) + 0.75L) /
                                 (static_cast<long double>(n) + 0.5L));
        long double derivative = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L;
            long double p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const long double p2 = ((2.0L * j - 1.0L) * x * p1 - (j - 1.0L) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            derivative = static_cast<long double>(n) * (x * p1 - p0) / (x * x - 1.0L);
            const long double step = p1 / derivative;
            x -= step;
            if (std::abs(step) < 1e-19L) {
                break;
            }
        }
        const long double w = 2.0L / ((1.0L - x * x) * derivative * derivative);
        nodes_[i] = static_cast<double>(-x);
        nodes_[n - 1 - i] = static_cast<double>(x);
        weights_[i] = static_cast<double>(w);
        weights_[n - 1 - i] = static_cast<double>(w);
    }
}

const GaussLegendreRule& GaussLegendreRule::standard() {
    static const GaussLegendreRule rule(20);
    return rule;
}

}  // namespace haarmi
