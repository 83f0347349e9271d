#pragma once

#include <span>

#include <Eigen/Dense>

#include "amix/distribution.hpp"
#include "amix/spectral.hpp"

// Data-parallel kernels. Each parallel routine has a serial twin computing
// the same quantity by the plain loop; tests and the benchmark compare them.
namespace amix::kernels {

/// Real and imaginary parts of U(t) written into re/im (resized as needed).
void unitary_parts(const SpectralDecomposition& sd, double t, Eigen::MatrixXd& re, Eigen::MatrixXd& im);

/// Mean of M(t) over the given times. The parallel version reduces over a
/// fixed block partition so its output is independent of the thread count.
Eigen::MatrixXd mixing_mean_serial(const SpectralDecomposition& sd, std::span<const double> times);
Eigen::MatrixXd mixing_mean_parallel(const SpectralDecomposition& sd, std::span<const double> times);

/// tr M(t) for every time.
std::vector<double> trace_mixing_serial(const SpectralDecomposition& sd, std::span<const double> times);
std::vector<double> trace_mixing_parallel(const SpectralDecomposition& sd, std::span<const double> times);

/// Choi matrix Σ_{i,j} B_ij ⊗ Ψ_R(B_ij); block (i, j) is Ψ_R(B_ij).
/// The serial version applies the average-state map to each matrix unit;
/// the parallel one assembles blocks from idempotent columns and rows.
Eigen::MatrixXcd choi_matrix_serial(const SpectralDecomposition& sd, const Distribution& d);
Eigen::MatrixXcd choi_matrix_parallel(const SpectralDecomposition& sd, const Distribution& d);

/// Number of fixed reduction blocks used by mixing_mean_parallel.
inline constexpr std::size_t kReductionBlocks = 256;

}  // namespace amix::kernels
