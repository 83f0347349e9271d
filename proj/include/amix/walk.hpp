#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "amix/distribution.hpp"
#include "amix/spectral.hpp"

namespace amix {

struct AmmResult {
    Eigen::MatrixXd matrix;
    std::string graph_hash;
    std::string distribution_desc;
    /// (r, s) with r < s ↦ Re φ(θ_r − θ_s) applied to E_r∘E_s.
    std::map<std::pair<int, int>, double> coefficients;
};

/// slack ≥ 0 means satisfied with that much room; negative is the worst violation.
struct Check {
    bool ok = false;
    double slack = 0.0;
};

struct PropertyReport {
    Check symmetric;
    Check doubly_stochastic;
    Check loewner_upper;  // I ⪰ M̂_R
    Check loewner_lower;  // M̂_R ⪰ 2M̂ − I
    Check eigs_in_range;
    Check trace_bound;    // tr M̂_R ≥ 2 tr M̂ − n

    bool all_ok() const
    {
        return symmetric.ok && doubly_stochastic.ok && loewner_upper.ok && loewner_lower.ok && eigs_in_range.ok &&
               trace_bound.ok;
    }
};

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kStochasticTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

/// U(t) = Σ_r exp(iθ_r t) E_r.
Eigen::MatrixXcd unitary_at(const SpectralDecomposition& sd, double t);

/// M(t) = U(t) ∘ conj(U(t)).
Eigen::MatrixXd mixing_at(const SpectralDecomposition& sd, double t);

/// M̂ = Σ_r E_r∘E_r, evaluated as amm_under(sd, UniformRealLine).
AmmResult standard_amm(const SpectralDecomposition& sd);

/// M̂_R = Σ_r E_r∘E_r + 2 Σ_{r<s} (E_r∘E_s) Re φ_R(θ_r − θ_s).
AmmResult amm_under(const SpectralDecomposition& sd, const Distribution& d);

/// Empirical mean of M(t) over sample_times(d, count, seed). Runs the
/// OpenMP kernel; the result does not depend on the thread count.
Eigen::MatrixXd amm_monte_carlo(const SpectralDecomposition& sd, const Distribution& d, std::size_t count,
                                std::uint64_t seed);

PropertyReport property_report(const SpectralDecomposition& sd, const Distribution& d);

/// Smallest eigenvalue of the symmetric part of m.
double min_symmetric_eigenvalue(const Eigen::MatrixXd& m);

}  // namespace amix
