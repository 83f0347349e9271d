#include "amix/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "amix/states.hpp"

namespace amix::kernels {

void unitary_parts(const SpectralDecomposition& sd, double t, Eigen::MatrixXd& re, Eigen::MatrixXd& im)
{
    re.setZero(sd.n, sd.n);
    im.setZero(sd.n, sd.n);
    for (int r = 0; r < sd.eigenvalue_count(); ++r) {
        const double phase = sd.thetas[r] * t;
        re.noalias() += std::cos(phase) * sd.idempotents[r];
        im.noalias() += std::sin(phase) * sd.idempotents[r];
    }
}

namespace {

// Running mean: stays bit-exact when every sample is identical.
void mean_update(Eigen::MatrixXd& mean, const Eigen::MatrixXd& x, double weight)
{
    mean += (x - mean) * weight;
}

}  // namespace

Eigen::MatrixXd mixing_mean_serial(const SpectralDecomposition& sd, std::span<const double> times)
{
    Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(sd.n, sd.n);
    Eigen::MatrixXd re, im, m;
    std::size_t k = 0;
    for (double t : times) {
        unitary_parts(sd, t, re, im);
        m = re.cwiseProduct(re) + im.cwiseProduct(im);
        mean_update(mean, m, 1.0 / static_cast<double>(++k));
    }
    return mean;
}

Eigen::MatrixXd mixing_mean_parallel(const SpectralDecomposition& sd, std::span<const double> times)
{
    const std::size_t count = times.size();
    if (count == 0) return Eigen::MatrixXd::Zero(sd.n, sd.n);
    const std::size_t blocks = std::min(count, kReductionBlocks);
    std::vector<Eigen::MatrixXd> partial(blocks);
    std::vector<std::size_t> sizes(blocks);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t lo = count * static_cast<std::size_t>(b) / blocks;
        const std::size_t hi = count * static_cast<std::size_t>(b + 1) / blocks;
        partial[b] = mixing_mean_serial(sd, times.subspan(lo, hi - lo));
        sizes[b] = hi - lo;
    }

    Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(sd.n, sd.n);
    std::size_t seen = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
        seen += sizes[b];
        mean_update(mean, partial[b], static_cast<double>(sizes[b]) / static_cast<double>(seen));
    }
    return mean;
}

std::vector<double> trace_mixing_serial(const SpectralDecomposition& sd, std::span<const double> times)
{
    std::vector<double> out;
    out.reserve(times.size());
    Eigen::MatrixXd re, im;
    for (double t : times) {
        unitary_parts(sd, t, re, im);
        out.push_back((re.cwiseProduct(re) + im.cwiseProduct(im)).trace());
    }
    return out;
}

std::vector<double> trace_mixing_parallel(const SpectralDecomposition& sd, std::span<const double> times)
{
    // Only the diagonal of U(t) is needed: U_aa = Σ_r exp(iθ_r t)(E_r)_aa.
    const int k = sd.eigenvalue_count();
    Eigen::MatrixXd diag(sd.n, k);
    for (int r = 0; r < k; ++r) diag.col(r) = sd.idempotents[r].diagonal();

    std::vector<double> out(times.size());
#pragma omp parallel
    {
        Eigen::VectorXd c(k), s(k);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(times.size()); ++i) {
            for (int r = 0; r < k; ++r) {
                c(r) = std::cos(sd.thetas[r] * times[i]);
                s(r) = std::sin(sd.thetas[r] * times[i]);
            }
            out[i] = ((diag * c).squaredNorm() + (diag * s).squaredNorm());
        }
    }
    return out;
}

Eigen::MatrixXcd choi_matrix_serial(const SpectralDecomposition& sd, const Distribution& d)
{
    const int n = sd.n;
    Eigen::MatrixXcd choi(n * n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(n, n);
            unit(i, j) = 1.0;
            choi.block(i * n, j * n, n, n) = average_map(sd, unit, d);
        }
    }
    return choi;
}

Eigen::MatrixXcd choi_matrix_parallel(const SpectralDecomposition& sd, const Distribution& d)
{
    const int n = sd.n;
    const int k = sd.eigenvalue_count();
    const Eigen::MatrixXcd coeff = phase_coefficients(sd, d);
    Eigen::MatrixXcd choi(n * n, n * n);

    // Ψ(e_i e_jᵀ) = Σ_r (E_r e_i) (Σ_s c_rs e_jᵀ E_s)
#pragma omp parallel
    {
        Eigen::RowVectorXcd row(n);
        Eigen::MatrixXcd block(n, n);
#pragma omp for collapse(2) schedule(static)
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                block.setZero();
                for (int r = 0; r < k; ++r) {
                    row.setZero();
                    for (int s = 0; s < k; ++s) row += coeff(r, s) * sd.idempotents[s].row(j).cast<std::complex<double>>();
                    block.noalias() += sd.idempotents[r].col(i).cast<std::complex<double>>() * row;
                }
                choi.block(i * n, j * n, n, n) = block;
            }
        }
    }
    return choi;
}

}  // namespace amix::kernels
