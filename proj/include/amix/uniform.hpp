#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amix/distribution.hpp"
#include "amix/spectral.hpp"

namespace amix {

/// Trace bounds a uniform M̂_R would force on the classical M̂:
/// (1/n) Σ m_r² ≤ tr M̂ ≤ (n+1)/2.
struct FeasibilityVerdict {
    bool necessary_ok = false;
    double trace_value = 0.0;
    double trace_upper_bound = 0.0;
    double multiplicity_lower_bound = 0.0;
    std::string reason;
};

FeasibilityVerdict necessary_check(const SpectralDecomposition& sd);

struct GapTarget {
    double gap = 0.0;
    double coefficient = 0.0;  // required Re φ(gap)
    std::vector<std::pair<int, int>> pairs;
};

/// Fitted coefficients per distinct gap for M̂ + 2 Σ_Δ c(Δ) S(Δ) = J/n.
struct GapTargetMap {
    std::vector<GapTarget> targets;  // ascending by gap
    double residual = 0.0;           // Frobenius norm at the box-constrained optimum
    bool feasible = false;
    bool box_ok = false;             // unconstrained least-squares solution already inside [−1, 1]
    std::vector<double> unconstrained;
    std::string diagnostic;
};

inline constexpr double kFeasibleResidual = 1e-9;

/// Box-constrained least squares over gap-grouped unknowns.
GapTargetMap coefficient_solve(const SpectralDecomposition& sd);

/// A distribution realizing a target map, or the reason none was produced.
struct Realization {
    std::optional<Distribution> distribution;
    std::string reason;
    std::string recipe;
    std::map<std::string, double> parameters;
    std::vector<double> pair_times;  // cosine-product recipe only

    explicit operator bool() const { return distribution.has_value(); }
};

/// Sum of symmetric pairs ½(δ_{−μ}+δ_{μ}): one quarter-period pair per zero
/// target, then at most one extra pair fixing the single nonzero target.
Realization realize_cosine_product(const GapTargetMap& targets);

enum class FamilyHint { dirac_instantaneous, gaussian, bernoulli, cosine_product };

Realization solve_known_family(const SpectralDecomposition& sd, FamilyHint hint);

struct UniformCheck {
    bool uniform = false;
    double deviation = 0.0;  // max |M̂_R − J/n|
};

inline constexpr double kDefaultVerifyTol = 1e-9;

UniformCheck verify_uniform(const SpectralDecomposition& sd, const Distribution& d, double tol = kDefaultVerifyTol);

/// Instantaneous uniform mixing times tried by the Dirac recipe.
struct CatalogTime {
    std::string graph;
    int n = 0;
    double time = 0.0;
};
const std::vector<CatalogTime>& instantaneous_mixing_catalog();

}  // namespace amix
