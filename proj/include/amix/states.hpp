#pragma once

#include <Eigen/Dense>

#include "amix/distribution.hpp"
#include "amix/spectral.hpp"

namespace amix {

/// Hermitian, positive semidefinite, trace-one complex matrix.
class DensityMatrix {
public:
    /// Validates the invariants (Hermitian and trace within 1e-12, min eigenvalue ≥ −1e-9).
    explicit DensityMatrix(Eigen::MatrixXcd m);

    const Eigen::MatrixXcd& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

private:
    Eigen::MatrixXcd m_;
};

/// D_a = e_a e_aᵀ.
DensityMatrix vertex_state(int a, int n);

/// U(t) D U(−t).
DensityMatrix evolve_state(const SpectralDecomposition& sd, const DensityMatrix& d, double t);

/// Coefficient table c(r, s) = φ_R(θ_r − θ_s) over ordered pairs, c(r, r) = 1.
Eigen::MatrixXcd phase_coefficients(const SpectralDecomposition& sd, const Distribution& d);

/// The linear map X ↦ Σ_{r,s} φ_R(θ_r − θ_s) E_r X E_s on arbitrary square matrices.
Eigen::MatrixXcd average_map(const SpectralDecomposition& sd, const Eigen::MatrixXcd& x, const Distribution& d);

/// Ψ_R(D) = E[D(R)].
DensityMatrix average_state(const SpectralDecomposition& sd, const DensityMatrix& d, const Distribution& dist);

/// Entry (a, b) is ⟨Ψ_{d1}(D_a), Ψ_{d2}(D_b)⟩ = tr(Ψ_{d1}(D_a)* Ψ_{d2}(D_b)).
Eigen::MatrixXcd gram_of_vertex_states(const SpectralDecomposition& sd, const Distribution& d1,
                                       const Distribution& d2);

struct ChoiCheck {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

inline constexpr int kMaxChoiOrder = 64;

ChoiCheck choi_psd_check(const SpectralDecomposition& sd, const Distribution& d);

}  // namespace amix
