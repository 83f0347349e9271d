#include "amix/walk.hpp"

#include <algorithm>
#include <cmath>

#include "amix/distribution_json.hpp"
#include "amix/errors.hpp"
#include "amix/kernels.hpp"

namespace amix {

Eigen::MatrixXcd unitary_at(const SpectralDecomposition& sd, double t)
{
    Eigen::MatrixXd re, im;
    kernels::unitary_parts(sd, t, re, im);
    Eigen::MatrixXcd u(sd.n, sd.n);
    u.real() = re;
    u.imag() = im;
    return u;
}

Eigen::MatrixXd mixing_at(const SpectralDecomposition& sd, double t)
{
    Eigen::MatrixXd re, im;
    kernels::unitary_parts(sd, t, re, im);
    return re.cwiseProduct(re) + im.cwiseProduct(im);
}

AmmResult amm_under(const SpectralDecomposition& sd, const Distribution& d)
{
    AmmResult out;
    out.graph_hash = sd.graph_hash;
    out.distribution_desc = describe(d);
    const int k = sd.eigenvalue_count();
    bool all_one = true;
    for (int r = 0; r < k; ++r)
        for (int s = r + 1; s < k; ++s) {
            const double c = expected_cos(d, sd.thetas[r] - sd.thetas[s]);
            out.coefficients[{r, s}] = c;
            all_one = all_one && c == 1.0;
        }
    // Every coefficient 1 collapses the sum to (Σ E_r)∘(Σ E_r) = I; return it
    // exactly rather than with the resolution's rounding error.
    if (all_one) {
        out.matrix = Eigen::MatrixXd::Identity(sd.n, sd.n);
        return out;
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(sd.n, sd.n);
    for (int r = 0; r < k; ++r) m += sd.idempotents[r].cwiseProduct(sd.idempotents[r]);
    for (const auto& [rs, c] : out.coefficients)
        m += (2.0 * c) * sd.idempotents[rs.first].cwiseProduct(sd.idempotents[rs.second]);
    out.matrix = std::move(m);
    return out;
}

AmmResult standard_amm(const SpectralDecomposition& sd) { return amm_under(sd, Distribution::uniform_real_line()); }

Eigen::MatrixXd amm_monte_carlo(const SpectralDecomposition& sd, const Distribution& d, std::size_t count,
                                std::uint64_t seed)
{
    const auto times = sample_times(d, count, seed);
    return kernels::mixing_mean_parallel(sd, times);
}

double min_symmetric_eigenvalue(const Eigen::MatrixXd& m)
{
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NonConvergence("eigenvalue check did not converge");
    return solver.eigenvalues()(0);
}

namespace {

Check make_check(double slack, double tol) { return {slack >= -tol, slack}; }

}  // namespace

PropertyReport property_report(const SpectralDecomposition& sd, const Distribution& d)
{
    const Eigen::MatrixXd mr = amm_under(sd, d).matrix;
    const Eigen::MatrixXd mhat = standard_amm(sd).matrix;
    const int n = sd.n;
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

    PropertyReport rep;
    rep.symmetric = make_check(-(mr - mr.transpose()).cwiseAbs().maxCoeff(), kSymmetryTol);

    const double row_dev = (mr.rowwise().sum().array() - 1.0).abs().maxCoeff();
    const double col_dev = (mr.colwise().sum().array() - 1.0).abs().maxCoeff();
    const double negativity = std::max(0.0, -mr.minCoeff());
    rep.doubly_stochastic = make_check(-std::max({row_dev, col_dev, negativity}), kStochasticTol);

    rep.loewner_upper = make_check(min_symmetric_eigenvalue(eye - mr), kPsdTol);
    rep.loewner_lower = make_check(min_symmetric_eigenvalue(mr - (2.0 * mhat - eye)), kPsdTol);

    const Eigen::MatrixXd sym = 0.5 * (mr + mr.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    rep.eigs_in_range = make_check(std::min(1.0 - ev(ev.size() - 1), ev(0) + 1.0), kPsdTol);

    rep.trace_bound = make_check(mr.trace() - (2.0 * mhat.trace() - n), kPsdTol);
    return rep;
}

}  // namespace amix
