#include "haarmi/page.hpp"

#include <algorithm>
#include <string>

#include "haarmi/errors.hpp"
#include "haarmi/special_functions.hpp"

namespace haarmi {

namespace {

void require_positive(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) {
        throw InvalidDimensionError("subsystem and environment dimensions must be >= 1");
    }
}

double psi_of_count_plus_one(std::uint64_t n) { return digamma(static_cast<double>(n) + 1.0); }

BigRational ratio(std::uint64_t num, std::uint64_t den) {
    return BigRational(mpq_class(mpz_class(static_cast<unsigned long>(num)),
                                 mpz_class(static_cast<unsigned long>(den))));
}

}  // namespace

std::string_view to_string(Regime regime) {
    return regime == Regime::Factorised ? "Factorised" : "Swapped";
}

double page_entropy(std::uint64_t m, std::uint64_t n) {
    require_positive(m, n);
    const std::uint64_t small = std::min(m, n);
    const std::uint64_t large = std::max(m, n);
    return psi_of_count_plus_one(small * large) - psi_of_count_plus_one(large) -
           schur_deficit(small, large);
}

double diagonal_entropy_avg(std::uint64_t m, std::uint64_t n) {
    require_positive(m, n);
    return psi_of_count_plus_one(m * n) - psi_of_count_plus_one(n);
}

double schur_deficit(std::uint64_t m, std::uint64_t n) {
    require_positive(m, n);
    const std::uint64_t small = std::min(m, n);
    const std::uint64_t large = std::max(m, n);
    return static_cast<double>(small - 1) / (2.0 * static_cast<double>(large));
}

double diagonal_mutual_information(const Dimensions& dims) {
    // Paired so that a trivial subsystem cancels exactly.
    const double outer = psi_of_count_plus_one(dims.total()) -
                         psi_of_count_plus_one(dims.d_b() * dims.d_e());
    const double inner = psi_of_count_plus_one(dims.d_a() * dims.d_e()) -
                         psi_of_count_plus_one(dims.d_e());
    return outer - inner;
}

double eigenvalue_correction_factorised(const Dimensions& dims) {
    const auto counts = casimir_counts(dims);
    return static_cast<double>(counts.su_product - counts.cartan_product) /
           (2.0 * static_cast<double>(dims.total()));
}

double mutual_information_forced_factorised(const Dimensions& dims) {
    return diagonal_mutual_information(dims) + eigenvalue_correction_factorised(dims);
}

MutualInformationBreakdown mutual_information_exact(const Dimensions& dims) {
    MutualInformationBreakdown out;
    out.i_diag = diagonal_mutual_information(dims);
    if (dims.factorised_regime()) {
        out.regime = Regime::Factorised;
        out.delta_ev = eigenvalue_correction_factorised(dims);
        out.total = out.i_diag + out.delta_ev;
        const auto su = casimir_counts(dims).su_product;
        if (su != 0) {
            out.g_value = out.total / static_cast<double>(su);
        }
    } else {
        out.regime = Regime::Swapped;
        const double page_total = page_entropy(dims.d_a(), dims.d_b() * dims.d_e()) +
                                  page_entropy(dims.d_b(), dims.d_a() * dims.d_e()) -
                                  page_entropy(dims.d_ab(), dims.d_e());
        out.delta_ev = page_total - out.i_diag;
        out.total = out.i_diag + out.delta_ev;
    }
    return out;
}

BigRational page_entropy_rational(std::uint64_t m, std::uint64_t n) {
    require_positive(m, n);
    const std::uint64_t small = std::min(m, n);
    const std::uint64_t large = std::max(m, n);
    return harmonic_rational(small * large) - harmonic_rational(large) - ratio(small - 1, 2 * large);
}

BigRational diagonal_mutual_information_rational(const Dimensions& dims) {
    return harmonic_rational(dims.total()) - harmonic_rational(dims.d_b() * dims.d_e()) -
           harmonic_rational(dims.d_a() * dims.d_e()) + harmonic_rational(dims.d_e());
}

BigRational eigenvalue_correction_factorised_rational(const Dimensions& dims) {
    const auto counts = casimir_counts(dims);
    return ratio(counts.su_product - counts.cartan_product, 2 * dims.total());
}

BigRational mutual_information_rational(const Dimensions& dims) {
    if (dims.factorised_regime()) {
        return diagonal_mutual_information_rational(dims) +
               eigenvalue_correction_factorised_rational(dims);
    }
    return page_entropy_rational(dims.d_a(), dims.d_b() * dims.d_e()) +
           page_entropy_rational(dims.d_b(), dims.d_a() * dims.d_e()) -
           page_entropy_rational(dims.d_ab(), dims.d_e());
}

BigRational lubkin_purity(std::uint64_t m, std::uint64_t n) {
    require_positive(m, n);
    return ratio(m + n, m * n + 1);
}

BigRational diagonal_second_moment(std::uint64_t m, std::uint64_t n) {
    require_positive(m, n);
    return ratio(n + 1, m * n + 1);
}

BigRational bloch_variance(std::uint64_t m, std::uint64_t n) {
    require_positive(m, n);
    if (m < 2) {
        throw DomainError("su(m) has no generators for m = " + std::to_string(m));
    }
    return ratio(2, m * (m * n + 1));
}

}  // namespace haarmi
