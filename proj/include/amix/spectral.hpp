#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "amix/graph.hpp"

namespace amix {

/// A = Σ_r θ_r E_r with distinct eigenvalues in strictly decreasing order.
struct SpectralDecomposition {
    int n = 0;
    std::vector<double> thetas;
    std::vector<Eigen::MatrixXd> idempotents;
    std::vector<int> multiplicities;
    std::string graph_hash;

    int eigenvalue_count() const { return static_cast<int>(thetas.size()); }
};

inline constexpr double kDefaultGroupTol = 1e-8;
inline constexpr double kDefaultGapTol = 1e-9;
inline constexpr int kMaxOrder = 1024;

/// Dense symmetric eigendecomposition followed by gap-based clustering:
/// sorted eigenvalues closer than group_tol·max(1, max|θ|) share a θ_r.
SpectralDecomposition decompose(const Graph& g, double group_tol = kDefaultGroupTol);

struct GapEntry {
    int r = 0;
    int s = 0;
    double delta = 0.0;  // θ_r − θ_s > 0
};

struct DistinctGap {
    double value = 0.0;
    std::vector<std::pair<int, int>> pairs;
};

struct GapTable {
    std::vector<GapEntry> entries;
    std::vector<DistinctGap> distinct_gaps;  // ascending by value
};

GapTable gap_table(const SpectralDecomposition& sd, double gap_tol = kDefaultGapTol);

/// Worst deviation of the decomposition from its defining identities.
struct DecompositionResiduals {
    double resolution = 0.0;      // max |Σ E_r − I|
    double orthogonality = 0.0;   // max over r≠s of max |E_r E_s|
    double idempotency = 0.0;     // max over r of max |E_r² − E_r|
    double reconstruction = 0.0;  // max |Σ θ_r E_r − A|
    double trace_integrality = 0.0;
};

DecompositionResiduals check_decomposition(const SpectralDecomposition& sd, const Eigen::MatrixXd& adjacency);

}  // namespace amix
