#include "amix/cartesian.hpp"

#include <cmath>

#include "amix/errors.hpp"
#include "amix/kernels.hpp"
#include "amix/walk.hpp"

namespace amix {

double trace_mixing(const SpectralDecomposition& sd, double t) { return mixing_at(sd, t).trace(); }

TraceIdentityReport trace_identity_check(const Graph& g, const Graph& h, const Distribution& d,
                                         const TraceIdentityOptions& opts)
{
    // The product spectrum is recomputed from its own adjacency matrix.
    const auto sg = decompose(g);
    const auto sh = decompose(h);
    const auto sgh = decompose(cartesian_product(g, h));

    TraceIdentityReport rep;
    rep.lhs = amm_under(sgh, d).matrix.trace();
    rep.product_term = amm_under(sg, d).matrix.trace() * amm_under(sh, d).matrix.trace();

    if (auto atoms = flatten_atoms(d, opts.max_atoms)) {
        rep.method = CovarianceMethod::exact_atoms;
        rep.sample_count = atoms->size();
        double exy = 0.0, ex = 0.0, ey = 0.0;
        for (const auto& a : *atoms) {
            const double x = trace_mixing(sg, a.time);
            const double y = trace_mixing(sh, a.time);
            exy += a.weight * x * y;
            ex += a.weight * x;
            ey += a.weight * y;
        }
        rep.cov_term = exy - ex * ey;
    } else {
        if (!d.is_proper())
            throw UnsupportedDistribution("covariance under the uniform-real-line limit needs finite atoms");
        rep.method = CovarianceMethod::monte_carlo;
        rep.sample_count = opts.samples;
        const auto times = sample_times(d, opts.samples, opts.seed);
        const auto xs = kernels::trace_mixing_parallel(sg, times);
        const auto ys = kernels::trace_mixing_parallel(sh, times);
        const double count = static_cast<double>(times.size());
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= count;
        my /= count;
        double cov = 0.0, sq = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double z = (xs[i] - mx) * (ys[i] - my);
            cov += z;
            sq += z * z;
        }
        cov /= count;
        const double var = std::max(0.0, sq / count - cov * cov);
        rep.cov_term = cov;
        rep.standard_error = std::sqrt(var / count);
    }
    rep.residual = std::abs(rep.lhs - rep.cov_term - rep.product_term);
    return rep;
}

SquareBoundReport square_bound_check(const Graph& g, const Distribution& d)
{
    const auto sg = decompose(g);
    const auto sgg = decompose(cartesian_product(g, g));
    SquareBoundReport rep;
    rep.product_trace = amm_under(sgg, d).matrix.trace();
    rep.factor_trace = amm_under(sg, d).matrix.trace();
    rep.square_slack = rep.product_trace - rep.factor_trace * rep.factor_trace;
    rep.square_bound_ok = rep.square_slack >= -kPsdTol;
    rep.classical_trace = standard_amm(sg).matrix.trace();
    rep.classical_bound = (g.order() + 1.0) / 2.0;
    rep.product_uniform_possible = rep.classical_trace <= rep.classical_bound + 1e-12;
    return rep;
}

}  // namespace amix
