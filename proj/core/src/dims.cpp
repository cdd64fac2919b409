#include "haarmi/dims.hpp"

#include <string>

#include "haarmi/errors.hpp"

namespace haarmi {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("dimension product " + std::to_string(a) + " * " + std::to_string(b) +
                            " overflows 64 bits");
    }
    return out;
}

}  // namespace

Dimensions Dimensions::make(std::uint64_t d_a, std::uint64_t d_b, std::uint64_t d_e) {
    if (d_a == 0 || d_b == 0 || d_e == 0) {
        throw InvalidDimensionError("dimensions must be >= 1, got (" + std::to_string(d_a) + ", " +
                                    std::to_string(d_b) + ", " + std::to_string(d_e) + ")");
    }
    const std::uint64_t n = checked_mul(checked_mul(d_a, d_b), d_e);
    return Dimensions(d_a, d_b, d_e, n);
}

Dimensions Dimensions::make_checked(long long d_a, long long d_b, long long d_e) {
    if (d_a < 1 || d_b < 1 || d_e < 1) {
        throw InvalidDimensionError("dimensions must be >= 1, got (" + std::to_string(d_a) + ", " +
                                    std::to_string(d_b) + ", " + std::to_string(d_e) + ")");
    }
    return make(static_cast<std::uint64_t>(d_a), static_cast<std::uint64_t>(d_b),
                static_cast<std::uint64_t>(d_e));
}

double leading_order(const Dimensions& dims) {
    const auto counts = casimir_counts(dims);
    return static_cast<double>(counts.su_product) / (2.0 * static_cast<double>(dims.total()));
}

CasimirCounts casimir_counts(const Dimensions& dims) {
    const std::uint64_t a = dims.d_a();
    const std::uint64_t b = dims.d_b();
    const std::uint64_t su_a = checked_mul(a, a) - 1;
    const std::uint64_t su_b = checked_mul(b, b) - 1;
    return {checked_mul(su_a, su_b), (a - 1) * (b - 1)};
}

}  // namespace haarmi
