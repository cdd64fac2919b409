#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "haarmi/dims.hpp"

namespace haarmi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Unit vector in C^{d_A} (x) C^{d_B} (x) C^{d_E}; amplitude (a, b, e) sits at
/// index (a d_B + b) d_E + e.
struct PureState {
    std::vector<Complex> amplitudes;
    Dimensions dims;

    const Complex& at(std::uint64_t a, std::uint64_t b, std::uint64_t e) const {
        return amplitudes[(a * dims.d_b() + b) * dims.d_e() + e];
    }
};

enum class Factor { A, B, AB };

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
public:
    /// Throws NumericalValidityError if the matrix is not Hermitian or not unit trace to 1e-12.
    explicit DensityMatrix(ComplexMatrix entries);

    const ComplexMatrix& entries() const noexcept { return entries_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    double purity() const;
    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;

private:
    ComplexMatrix entries_;
};

/// Mean with its standard error sd / sqrt(n).
struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

struct HaarSampleStats {
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::string rng;
    Estimate mutual_information;
    Estimate entropy_a;
    Estimate entropy_b;
    Estimate entropy_ab;
    Estimate purity_a;
    Estimate diagonal_entropy_a;
    Estimate diagonal_entropy_b;
    Estimate diagonal_entropy_ab;
    Estimate diagonal_second_moment_a;
    /// Per-generator mean r_a^2 of the A factor; zero when d_A = 1.
    Estimate cartan_variance_a;
    Estimate offdiag_variance_a;
};

struct BlochVarianceStats {
    std::int64_t n_samples = 0;
    Estimate cartan;
    Estimate offdiag;
    /// Paired difference cartan - offdiag.
    Estimate difference;
    /// Mean r_a for each generator, in gell_mann_basis order.
    std::vector<Estimate> generator_means;
};

struct Generator {
    ComplexMatrix matrix;
    bool cartan = false;
};

/// Haar-random state from a normalised complex Gaussian vector. Deterministic in
/// (seed, index). Throws ResourceError above kMaxMonteCarloDimension.
PureState sample_state(const Dimensions& dims, std::uint64_t seed, std::uint64_t index);

/// Partial trace of |psi><psi| onto the requested factor.
DensityMatrix reduce(const PureState& state, Factor target);

/// -sum lambda ln lambda; eigenvalues below 1e-14 contribute nothing, those in
/// [-1e-10, 0) are clamped and anything more negative throws NumericalValidityError.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy of the diagonal entries with the same clamping policy.
double diagonal_entropy(const DensityMatrix& rho);

/// S(A) + S(B) - S(AB) for one sample.
double mutual_info_sample(const Dimensions& dims, std::uint64_t seed, std::uint64_t index);

/// Generalised Gell-Mann basis of su(m), Tr(l_a l_b) = 2 delta_ab: symmetric
/// generators, then antisymmetric, then the m - 1 diagonal (Cartan) ones.
std::vector<Generator> gell_mann_basis(std::size_t m);

/// Bloch components r_a = Tr(rho l_a).
std::vector<double> bloch_vector(const DensityMatrix& rho, const std::vector<Generator>& basis);

/// Sector-averaged Bloch variances of the m-dimensional factor of Haar states in C^m (x) C^n.
/// workers = 0 uses the hardware concurrency.
BlochVarianceStats bloch_variances(std::uint64_t m, std::uint64_t n, std::int64_t n_samples,
                                   std::uint64_t seed, unsigned workers = 0);

/// Monte Carlo estimates over n_samples Haar states. Bitwise reproducible for a
/// given (dims, n_samples, seed) whatever the worker count.
HaarSampleStats run_oracle(const Dimensions& dims, std::int64_t n_samples, std::uint64_t seed,
                           unsigned workers = 0);

}  // namespace haarmi
