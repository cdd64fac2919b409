#include "haarmi/haar_mc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <mutex>
#include <span>
#include <thread>

#include <Eigen/Eigenvalues>

#include "haarmi/errors.hpp"
#include "haarmi/rng.hpp"

namespace haarmi {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-12;
constexpr double kNegativeEigenvalueTolerance = 1e-10;
constexpr double kZeroEigenvalue = 1e-14;

double entropy_term(double p) {
    if (p < -kNegativeEigenvalueTolerance) {
        throw NumericalValidityError("probability " + std::to_string(p) + " below -1e-10");
    }
    return p < kZeroEigenvalue ? 0.0 : -p * std::log(p);
}

// Rows index the kept factor, columns the traced-out one.
ComplexMatrix amplitude_matrix(const PureState& state, Factor target) {
    const auto& d = state.dims;
    const auto da = d.d_a();
    const auto db = d.d_b();
    const auto de = d.d_e();
    switch (target) {
        case Factor::A: {
            ComplexMatrix m(da, db * de);
            for (std::uint64_t a = 0; a < da; ++a)
                for (std::uint64_t r = 0; r < db * de; ++r) m(a, r) = state.amplitudes[a * db * de + r];
            return m;
        }
        case Factor::B: {
            ComplexMatrix m(db, da * de);
            for (std::uint64_t a = 0; a < da; ++a)
                for (std::uint64_t b = 0; b < db; ++b)
                    for (std::uint64_t e = 0; e < de; ++e) m(b, a * de + e) = state.at(a, b, e);
            return m;
        }
        case Factor::AB: {
            ComplexMatrix m(da * db, de);
            for (std::uint64_t r = 0; r < da * db; ++r)
                for (std::uint64_t e = 0; e < de; ++e) m(r, e) = state.amplitudes[r * de + e];
            return m;
        }
    }
    throw DomainError("unknown factor");
}

// Entropy of the reduced state from whichever Gram matrix is smaller; both share
// their nonzero spectrum.
double factor_entropy(const PureState& state, Factor target) {
    const ComplexMatrix m = amplitude_matrix(state, target);
    const ComplexMatrix gram = m.rows() <= m.cols() ? ComplexMatrix(m * m.adjoint())
                                                    : ComplexMatrix(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) s += entropy_term(solver.eigenvalues()[i]);
    return s;
}

unsigned resolve_workers(unsigned workers) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    return workers;
}

// Fills rows[i] = per_sample(i) for i in [0, n) across workers. Each index owns
// its own random stream, so the result does not depend on the partition.
template <class Row, class Fn>
std::vector<Row> parallel_samples(std::int64_t n, unsigned workers, const Fn& per_sample) {
    std::vector<Row> rows(static_cast<std::size_t>(n));
    workers = static_cast<unsigned>(std::min<std::int64_t>(resolve_workers(workers), n));
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::int64_t> completed(workers, 0);
    auto task = [&](unsigned w) {
        const std::int64_t lo = n * w / workers;
        const std::int64_t hi = n * (w + 1) / workers;
        try {
            for (std::int64_t i = lo; i < hi; ++i) {
                rows[static_cast<std::size_t>(i)] = per_sample(static_cast<std::uint64_t>(i));
                ++completed[w];
            }
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };
    if (workers <= 1) {
        task(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(task, w);
    }
    for (unsigned w = 0; w < workers; ++w) {
        if (failures[w]) {
            std::int64_t done = 0;
            for (auto c : completed) done += c;
            std::string what = "unknown error";
            try {
                std::rethrow_exception(failures[w]);
            } catch (const std::exception& e) {
                what = e.what();
            } catch (...) {
            }
            throw PartialResultError("Monte Carlo worker " + std::to_string(w) + " failed after " +
                                     std::to_string(done) + " of " + std::to_string(n) +
                                     " samples: " + what);
        }
    }
    return rows;
}

// Pairwise summation; the tree shape depends only on the length.
template <class Get>
double pairwise_sum(std::size_t lo, std::size_t hi, const Get& get) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += get(i);
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(lo, mid, get) + pairwise_sum(mid, hi, get);
}

template <class Get>
Estimate estimate(std::size_t n, const Get& get) {
    const double mean = pairwise_sum(0, n, get) / static_cast<double>(n);
    const double ss = pairwise_sum(0, n, [&](std::size_t i) {
        const double d = get(i) - mean;
        return d * d;
    });
    const double variance = ss / static_cast<double>(n - 1);
    return {mean, std::sqrt(variance / static_cast<double>(n))};
}

void require_samples(std::int64_t n) {
    if (n < 2) throw DomainError("at least two samples are required");
}

struct SectorAverages {
    double cartan = 0.0;
    double offdiag = 0.0;
};

SectorAverages sector_averages(std::span<const double> r, const std::vector<Generator>& basis) {
    SectorAverages out;
    std::size_t n_cartan = 0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (basis[a].cartan) {
            out.cartan += r[a] * r[a];
            ++n_cartan;
        } else {
            out.offdiag += r[a] * r[a];
        }
    }
    out.cartan /= static_cast<double>(n_cartan);
    out.offdiag /= static_cast<double>(basis.size() - n_cartan);
    return out;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw NumericalValidityError("density matrix must be square and non-empty");
    }
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) {
        throw NumericalValidityError("density matrix not Hermitian (deviation " + std::to_string(asym) + ")");
    }
    const Complex trace = entries_.trace();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        throw NumericalValidityError("density matrix trace " + std::to_string(trace.real()) + " != 1");
    }
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

PureState sample_state(const Dimensions& dims, std::uint64_t seed, std::uint64_t index) {
    if (dims.total() > kMaxMonteCarloDimension) {
        throw ResourceError("total dimension " + std::to_string(dims.total()) + " exceeds the sampler cap " +
                            std::to_string(kMaxMonteCarloDimension));
    }
    SampleStream stream(seed, index);
    PureState state{std::vector<Complex>(dims.total()), dims};
    double norm2 = 0.0;
    for (auto& amp : state.amplitudes) {
        const auto [re, im] = stream.next_normal_pair();
        amp = Complex(re, im);
        norm2 += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& amp : state.amplitudes) amp *= scale;
    return state;
}

DensityMatrix reduce(const PureState& state, Factor target) {
    const ComplexMatrix m = amplitude_matrix(state, target);
    ComplexMatrix rho = m * m.adjoint();
    // Remove round-off asymmetry from the product.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Eigen::VectorXd lambda = rho.eigenvalues();
    double s = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) s += entropy_term(lambda[i]);
    return s;
}

double diagonal_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < rho.entries().rows(); ++k) s += entropy_term(rho.entries()(k, k).real());
    return s;
}

double mutual_info_sample(const Dimensions& dims, std::uint64_t seed, std::uint64_t index) {
    const PureState state = sample_state(dims, seed, index);
    return factor_entropy(state, Factor::A) + factor_entropy(state, Factor::B) -
           factor_entropy(state, Factor::AB);
}

std::vector<Generator> gell_mann_basis(std::size_t m) {
    if (m < 2) throw DomainError("su(m) basis needs m >= 2");
    const auto n = static_cast<Eigen::Index>(m);
    std::vector<Generator> basis;
    basis.reserve(m * m - 1);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            ComplexMatrix g = ComplexMatrix::Zero(n, n);
            g(j, k) = 1.0;
            g(k, j) = 1.0;
            basis.push_back({std::move(g), false});
        }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            ComplexMatrix g = ComplexMatrix::Zero(n, n);
            g(j, k) = Complex(0.0, -1.0);
            g(k, j) = Complex(0.0, 1.0);
            basis.push_back({std::move(g), false});
        }
    }
    for (Eigen::Index l = 1; l < n; ++l) {
        ComplexMatrix g = ComplexMatrix::Zero(n, n);
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        for (Eigen::Index j = 0; j < l; ++j) g(j, j) = scale;
        g(l, l) = -static_cast<double>(l) * scale;
        basis.push_back({std::move(g), true});
    }
    return basis;
}

std::vector<double> bloch_vector(const DensityMatrix& rho, const std::vector<Generator>& basis) {
    std::vector<double> r;
    r.reserve(basis.size());
    for (const auto& g : basis) r.push_back((rho.entries() * g.matrix).trace().real());
    return r;
}

BlochVarianceStats bloch_variances(std::uint64_t m, std::uint64_t n, std::int64_t n_samples,
                                   std::uint64_t seed, unsigned workers) {
    require_samples(n_samples);
    if (m < 2) throw DomainError("Bloch variances need m >= 2");
    const Dimensions dims = Dimensions::make(m, 1, n);
    const auto basis = gell_mann_basis(m);
    const std::size_t g = basis.size();

    // Row layout: r_1..r_g, cartan average, offdiag average.
    using Row = std::vector<double>;
    auto rows = parallel_samples<Row>(n_samples, workers, [&](std::uint64_t i) {
        const auto rho = reduce(sample_state(dims, seed, i), Factor::A);
        Row row = bloch_vector(rho, basis);
        const auto avg = sector_averages(row, basis);
        row.push_back(avg.cartan);
        row.push_back(avg.offdiag);
        return row;
    });

    const auto count = rows.size();
    BlochVarianceStats out;
    out.n_samples = n_samples;
    out.cartan = estimate(count, [&](std::size_t i) { return rows[i][g]; });
    out.offdiag = estimate(count, [&](std::size_t i) { return rows[i][g + 1]; });
    out.difference = estimate(count, [&](std::size_t i) { return rows[i][g] - rows[i][g + 1]; });
    for (std::size_t a = 0; a < g; ++a) {
        out.generator_means.push_back(estimate(count, [&](std::size_t i) { return rows[i][a]; }));
    }
    return out;
}

HaarSampleStats run_oracle(const Dimensions& dims, std::int64_t n_samples, std::uint64_t seed,
                           unsigned workers) {
    require_samples(n_samples);
    if (dims.total() > kMaxMonteCarloDimension) {
        throw ResourceError("total dimension " + std::to_string(dims.total()) + " exceeds the sampler cap " +
                            std::to_string(kMaxMonteCarloDimension));
    }
    enum Field { kI, kSA, kSB, kSAB, kPurityA, kDiagA, kDiagB, kDiagAB, kDiag2A, kCartanA, kOffdiagA, kFields };
    using Row = std::array<double, kFields>;

    std::vector<Generator> basis;
    if (dims.d_a() >= 2) basis = gell_mann_basis(dims.d_a());

    auto rows = parallel_samples<Row>(n_samples, workers, [&](std::uint64_t i) {
        const PureState state = sample_state(dims, seed, i);
        Row row{};
        row[kSA] = factor_entropy(state, Factor::A);
        row[kSB] = factor_entropy(state, Factor::B);
        row[kSAB] = factor_entropy(state, Factor::AB);
        row[kI] = row[kSA] + row[kSB] - row[kSAB];

        const DensityMatrix rho_a = reduce(state, Factor::A);
        row[kPurityA] = rho_a.purity();
        row[kDiagA] = diagonal_entropy(rho_a);
        double diag2 = 0.0;
        for (Eigen::Index k = 0; k < rho_a.entries().rows(); ++k) {
            const double p = rho_a.entries()(k, k).real();
            diag2 += p * p;
        }
        row[kDiag2A] = diag2;
        row[kDiagB] = diagonal_entropy(reduce(state, Factor::B));
        row[kDiagAB] = diagonal_entropy(reduce(state, Factor::AB));
        if (!basis.empty()) {
            const auto avg = sector_averages(bloch_vector(rho_a, basis), basis);
            row[kCartanA] = avg.cartan;
            row[kOffdiagA] = avg.offdiag;
        }
        return row;
    });

    const auto count = rows.size();
    auto field = [&](Field f) { return estimate(count, [&](std::size_t i) { return rows[i][f]; }); };
    HaarSampleStats out;
    out.n_samples = n_samples;
    out.seed = seed;
    out.rng = std::string(Philox4x32::kName);
    out.mutual_information = field(kI);
    out.entropy_a = field(kSA);
    out.entropy_b = field(kSB);
    out.entropy_ab = field(kSAB);
    out.purity_a = field(kPurityA);
    out.diagonal_entropy_a = field(kDiagA);
    out.diagonal_entropy_b = field(kDiagB);
    out.diagonal_entropy_ab = field(kDiagAB);
    out.diagonal_second_moment_a = field(kDiag2A);
    out.cartan_variance_a = field(kCartanA);
    out.offdiag_variance_a = field(kOffdiagA);
    return out;
}

}  // namespace haarmi
