#include "amix/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "amix/errors.hpp"

namespace amix {

SpectralDecomposition decompose(const Graph& g, double group_tol)
{
    if (!(group_tol > 0.0)) throw InvalidParameter("group_tol must be positive");
    const int n = g.order();
    if (n > kMaxOrder)
        throw SizeError("graph has " + std::to_string(n) + " vertices; at most " + std::to_string(kMaxOrder) +
                        " are supported");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency());
    if (solver.info() != Eigen::Success) {
        // Eigen's tridiagonal QR gives up after 30·n sweeps.
        throw NonConvergence("symmetric eigensolver did not converge within " + std::to_string(30 * n) +
                             " iterations");
    }
    // Eigen returns ascending order; walk it backwards so θ_0 is the largest.
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXd& evecs = solver.eigenvectors();
    const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
    const double cut = group_tol * scale;

    SpectralDecomposition sd;
    sd.n = n;
    sd.graph_hash = g.hash();

    int hi = n - 1;
    while (hi >= 0) {
        int lo = hi;
        while (lo > 0 && evals(lo) - evals(lo - 1) <= cut) --lo;
        const int count = hi - lo + 1;
        const auto basis = evecs.middleCols(lo, count);
        Eigen::MatrixXd e = basis * basis.transpose();
        e = 0.5 * (e + e.transpose()).eval();
        sd.thetas.push_back(evals.segment(lo, count).mean());
        sd.idempotents.push_back(std::move(e));
        sd.multiplicities.push_back(count);
        hi = lo - 1;
    }
    return sd;
}

GapTable gap_table(const SpectralDecomposition& sd, double gap_tol)
{
    GapTable table;
    const int k = sd.eigenvalue_count();
    for (int r = 0; r < k; ++r)
        for (int s = r + 1; s < k; ++s)
            table.entries.push_back({r, s, sd.thetas[r] - sd.thetas[s]});

    std::vector<GapEntry> sorted = table.entries;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const GapEntry& a, const GapEntry& b) { return a.delta < b.delta; });
    for (const auto& e : sorted) {
        auto& buckets = table.distinct_gaps;
        if (!buckets.empty() && std::abs(e.delta - buckets.back().value) <= gap_tol * std::max(1.0, e.delta)) {
            buckets.back().pairs.emplace_back(e.r, e.s);
        } else {
            buckets.push_back({e.delta, {{e.r, e.s}}});
        }
    }
    // Representative value: mean of the members, so the bucket is independent of pair order.
    for (auto& bucket : table.distinct_gaps) {
        double sum = 0.0;
        for (auto [r, s] : bucket.pairs) sum += sd.thetas[r] - sd.thetas[s];
        bucket.value = sum / static_cast<double>(bucket.pairs.size());
    }
    return table;
}

DecompositionResiduals check_decomposition(const SpectralDecomposition& sd, const Eigen::MatrixXd& adjacency)
{
    DecompositionResiduals out;
    const int n = sd.n;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r < sd.eigenvalue_count(); ++r) {
        const auto& er = sd.idempotents[r];
        sum += er;
        recon += sd.thetas[r] * er;
        out.idempotency = std::max(out.idempotency, (er * er - er).cwiseAbs().maxCoeff());
        const double tr = er.trace();
        out.trace_integrality = std::max(out.trace_integrality, std::abs(tr - std::round(tr)));
        out.trace_integrality = std::max(out.trace_integrality, std::abs(tr - sd.multiplicities[r]));
        for (int s = 0; s < sd.eigenvalue_count(); ++s)
            if (s != r)
                out.orthogonality = std::max(out.orthogonality, (er * sd.idempotents[s]).cwiseAbs().maxCoeff());
    }
    out.resolution = (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    out.reconstruction = (recon - adjacency).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace amix
