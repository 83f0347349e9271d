#include "amix/states.hpp"

#include <cmath>
#include <string>

#include "amix/errors.hpp"
#include "amix/kernels.hpp"
#include "amix/walk.hpp"

namespace amix {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m)
{
    const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NonConvergence("Hermitian eigensolver did not converge");
    return solver.eigenvalues()(0);
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m))
{
    if (m_.rows() < 1 || m_.rows() != m_.cols()) throw InvalidParameter("density matrix must be square");
    const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol)
        throw InvalidParameter("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    if (std::abs(m_.trace() - std::complex<double>(1.0)) > kTraceTol)
        throw InvalidParameter("density matrix must have unit trace");
    if (min_hermitian_eigenvalue(m_) < -kPsdTol)
        throw InvalidParameter("density matrix must be positive semidefinite");
}

DensityMatrix vertex_state(int a, int n)
{
    if (n < 1) throw InvalidParameter("state dimension must be positive");
    if (a < 0 || a >= n)
        throw RangeError("vertex " + std::to_string(a) + " out of range [0, " + std::to_string(n) + ")");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    m(a, a) = 1.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix evolve_state(const SpectralDecomposition& sd, const DensityMatrix& d, double t)
{
    if (d.dim() != sd.n) throw DimensionMismatch("state dimension does not match the graph");
    const Eigen::MatrixXcd u = unitary_at(sd, t);
    Eigen::MatrixXcd out = u * d.matrix() * u.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

Eigen::MatrixXcd phase_coefficients(const SpectralDecomposition& sd, const Distribution& d)
{
    const int k = sd.eigenvalue_count();
    Eigen::MatrixXcd c(k, k);
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) c(r, s) = r == s ? std::complex<double>(1.0) : evaluate_cf(d, sd.thetas[r] - sd.thetas[s]);
    return c;
}

Eigen::MatrixXcd average_map(const SpectralDecomposition& sd, const Eigen::MatrixXcd& x, const Distribution& d)
{
    if (x.rows() != sd.n || x.cols() != sd.n) throw DimensionMismatch("matrix dimension does not match the graph");
    const int k = sd.eigenvalue_count();
    const Eigen::MatrixXcd coeff = phase_coefficients(sd, d);
    std::vector<Eigen::MatrixXcd> ex(k);
    for (int r = 0; r < k; ++r) ex[r] = sd.idempotents[r].cast<std::complex<double>>() * x;

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(sd.n, sd.n);
    for (int s = 0; s < k; ++s) {
        Eigen::MatrixXcd left = Eigen::MatrixXcd::Zero(sd.n, sd.n);
        for (int r = 0; r < k; ++r) left += coeff(r, s) * ex[r];
        out.noalias() += left * sd.idempotents[s].cast<std::complex<double>>();
    }
    return out;
}

DensityMatrix average_state(const SpectralDecomposition& sd, const DensityMatrix& d, const Distribution& dist)
{
    if (d.dim() != sd.n) throw DimensionMismatch("state dimension does not match the graph");
    Eigen::MatrixXcd out = average_map(sd, d.matrix(), dist);
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

Eigen::MatrixXcd gram_of_vertex_states(const SpectralDecomposition& sd, const Distribution& d1,
                                       const Distribution& d2)
{
    const int n = sd.n;
    std::vector<Eigen::MatrixXcd> left(n), right(n);
    for (int a = 0; a < n; ++a) {
        const DensityMatrix da = vertex_state(a, n);
        left[a] = average_state(sd, da, d1).matrix();
        right[a] = average_state(sd, da, d2).matrix();
    }
    Eigen::MatrixXcd gram(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gram(a, b) = left[a].conjugate().cwiseProduct(right[b]).sum();
    return gram;
}

ChoiCheck choi_psd_check(const SpectralDecomposition& sd, const Distribution& d)
{
    if (sd.n > kMaxChoiOrder)
        throw SizeError("Choi check is limited to graphs with at most " + std::to_string(kMaxChoiOrder) +
                        " vertices");
    const Eigen::MatrixXcd choi = kernels::choi_matrix_parallel(sd, d);
    ChoiCheck out;
    out.min_eigenvalue = min_hermitian_eigenvalue(choi);
    out.psd = out.min_eigenvalue >= -kPsdTol;
    return out;
}

}  // namespace amix
