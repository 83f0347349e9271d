#pragma once

#include <cstdint>
#include <string>

#include "amix/distribution.hpp"
#include "amix/graph.hpp"
#include "amix/spectral.hpp"

namespace amix {

enum class CovarianceMethod { exact_atoms, monte_carlo };

/// tr M̂_R(G□H) against Cov[tr M^G(R), tr M^H(R)] + tr M̂_R(G)·tr M̂_R(H).
struct TraceIdentityReport {
    double lhs = 0.0;
    double cov_term = 0.0;
    double product_term = 0.0;
    double residual = 0.0;
    CovarianceMethod method = CovarianceMethod::exact_atoms;
    std::size_t sample_count = 0;  // 0 for exact_atoms, else number of atoms/samples used
    double standard_error = 0.0;   // Monte Carlo only
};

double trace_mixing(const SpectralDecomposition& sd, double t);

struct TraceIdentityOptions {
    std::size_t samples = 100000;
    std::uint64_t seed = 42;
    std::size_t max_atoms = 4096;
};

TraceIdentityReport trace_identity_check(const Graph& g, const Graph& h, const Distribution& d,
                                         const TraceIdentityOptions& opts = {});

struct SquareBoundReport {
    double product_trace = 0.0;  // tr M̂_R(G□G)
    double factor_trace = 0.0;   // tr M̂_R(G)
    double square_slack = 0.0;   // product_trace − factor_trace²
    bool square_bound_ok = false;
    double classical_trace = 0.0;  // tr M̂(G)
    double classical_bound = 0.0;  // (n+1)/2
    bool product_uniform_possible = false;
};

SquareBoundReport square_bound_check(const Graph& g, const Distribution& d);

}  // namespace amix
