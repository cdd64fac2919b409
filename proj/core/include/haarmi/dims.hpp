#pragma once

#include <cstdint>

namespace haarmi {

/// Largest total dimension N accepted by the Monte Carlo sampler.
inline constexpr std::uint64_t kMaxMonteCarloDimension = 4096;

/// Validated dimension triple (d_A, d_B, d_E) of a tripartite pure state.
///
/// N = d_A d_B d_E is computed with checked multiplication. The factorised
/// regime d_A d_B <= d_E is the one where S(AB) is evaluated without swapping
/// subsystem and environment.
class Dimensions {
public:
    /// Throws InvalidDimensionError for a zero dimension and OverflowError
    /// if the product does not fit in 64 bits.
    static Dimensions make(std::uint64_t d_a, std::uint64_t d_b, std::uint64_t d_e);

    /// Signed overload for values read from user input.
    static Dimensions make_checked(long long d_a, long long d_b, long long d_e);

    std::uint64_t d_a() const noexcept { return d_a_; }
    std::uint64_t d_b() const noexcept { return d_b_; }
    std::uint64_t d_e() const noexcept { return d_e_; }
    std::uint64_t d_ab() const noexcept { return d_a_ * d_b_; }
    std::uint64_t total() const noexcept { return n_; }
    bool factorised_regime() const noexcept { return factorised_; }

    /// Either subsystem is one-dimensional, so every correlation vanishes.
    bool has_trivial_subsystem() const noexcept { return d_a_ == 1 || d_b_ == 1; }

    friend bool operator==(const Dimensions&, const Dimensions&) = default;

private:
    Dimensions(std::uint64_t d_a, std::uint64_t d_b, std::uint64_t d_e, std::uint64_t n)
        : d_a_(d_a), d_b_(d_b), d_e_(d_e), n_(n), factorised_(d_a * d_b <= d_e) {}

    std::uint64_t d_a_;
    std::uint64_t d_b_;
    std::uint64_t d_e_;
    std::uint64_t n_;
    bool factorised_;
};

/// dim su(d_A) * dim su(d_B) and dim Cartan(d_A) * dim Cartan(d_B).
struct CasimirCounts {
    std::uint64_t su_product;
    std::uint64_t cartan_product;

    friend bool operator==(const CasimirCounts&, const CasimirCounts&) = default;
};

/// (d_A^2 - 1)(d_B^2 - 1) / (2N), the leading large-N mutual information.
double leading_order(const Dimensions& dims);

CasimirCounts casimir_counts(const Dimensions& dims);

}  // namespace haarmi
